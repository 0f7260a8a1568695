#pragma once

#include <complex>
#include <vector>

#include "szegoq/errors.hpp"

namespace szegoq {

using Complex = std::complex<double>;

/// Laurent polynomial over a contiguous exponent window [lo, hi].
/// The window is normalized: both end coefficients are nonzero unless
/// the polynomial is identically zero (empty window). Trimming removes
/// exact zeros only; numerical tolerances belong to the caller.
class LaurentPoly {
public:
    LaurentPoly() = default; // zero polynomial
    LaurentPoly(int lo, std::vector<Complex> coeffs);

    static LaurentPoly zero() { return LaurentPoly(); }
    static LaurentPoly constant(Complex c);
    static LaurentPoly monomial(int exponent, Complex c = Complex(1.0, 0.0));

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int lo() const;
    int hi() const;
    /// Coefficient of z^e; zero outside the window.
    Complex coeff(int e) const noexcept;
    const std::vector<Complex>& coeffs() const noexcept { return coeffs_; }

    /// f(z) by Horner on the z and 1/z halves; needs z != 0 when lo < 0.
    Complex eval(Complex z) const;

    LaurentPoly& operator+=(const LaurentPoly& other);
    LaurentPoly& operator-=(const LaurentPoly& other);
    LaurentPoly& operator*=(Complex c);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(Complex c, LaurentPoly f) { return f *= c; }
    friend LaurentPoly operator*(LaurentPoly f, Complex c) { return f *= c; }

private:
    void normalize();

    int lo_ = 0;
    std::vector<Complex> coeffs_;
};

/// f_*(z) = conj(f(1/conj(z))): exponent j -> -j with conjugated coefficients.
LaurentPoly substar(const LaurentPoly& f);

/// P*(z) = z^n P_*(z) for an ordinary polynomial P of degree <= n;
/// coefficient c_j -> conj(c_{n-j}). Throws DomainError when P has
/// negative exponents or degree above n.
LaurentPoly reversed(const LaurentPoly& poly, int n);

/// Multiply by z^k.
LaurentPoly shift_exp(const LaurentPoly& f, int k);

/// d/dz.
LaurentPoly derivative(const LaurentPoly& f);

/// max_e |coeff_f(e) - coeff_g(e)|, over the union window.
double max_coeff_diff(const LaurentPoly& f, const LaurentPoly& g);

/// Coefficients c_0..c_deg of an ordinary polynomial (lo >= 0),
/// zero-padded below the window. Throws DomainError when lo < 0.
std::vector<Complex> ordinary_coeffs(const LaurentPoly& poly);

} // namespace szegoq
