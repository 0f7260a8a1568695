#include "szegoq/laurent.hpp"

#include <algorithm>
#include <cmath>

namespace szegoq {

LaurentPoly::LaurentPoly(int lo, std::vector<Complex> coeffs)
    : lo_(lo), coeffs_(std::move(coeffs)) {
    normalize();
}

LaurentPoly LaurentPoly::constant(Complex c) { return LaurentPoly(0, {c}); }

LaurentPoly LaurentPoly::monomial(int exponent, Complex c) {
    return LaurentPoly(exponent, {c});
}

void LaurentPoly::normalize() {
    std::size_t lead = coeffs_.size();
    while (lead > 0 && coeffs_[lead - 1] == Complex(0.0, 0.0)) --lead;
    coeffs_.resize(lead);
    std::size_t drop = 0;
    while (drop < coeffs_.size() && coeffs_[drop] == Complex(0.0, 0.0)) ++drop;
    if (drop > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(drop));
        lo_ += static_cast<int>(drop);
    }
    if (coeffs_.empty()) lo_ = 0;
}

int LaurentPoly::lo() const {
    if (is_zero()) throw DomainError("zero polynomial has no window");
    return lo_;
}

int LaurentPoly::hi() const {
    if (is_zero()) throw DomainError("zero polynomial has no window");
    return lo_ + static_cast<int>(coeffs_.size()) - 1;
}

Complex LaurentPoly::coeff(int e) const noexcept {
    int idx = e - lo_;
    if (idx < 0 || idx >= static_cast<int>(coeffs_.size())) return Complex(0.0, 0.0);
    return coeffs_[static_cast<std::size_t>(idx)];
}

Complex LaurentPoly::eval(Complex z) const {
    if (is_zero()) return Complex(0.0, 0.0);
    if (lo_ < 0 && z == Complex(0.0, 0.0))
        throw EvalAtZero("negative exponents present");
    // Nonnegative-exponent part by Horner in z, negative part in 1/z.
    Complex up(0.0, 0.0);
    for (int e = hi(); e >= 0; --e) up = up * z + coeff(e);
    if (lo_ >= 0) return up;
    Complex w = Complex(1.0, 0.0) / z;
    Complex down(0.0, 0.0);
    for (int e = lo_; e <= -1; ++e) down = down * w + coeff(e);
    return up + down * w;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
    if (other.is_zero()) return *this;
    if (is_zero()) { *this = other; return *this; }
    int nlo = std::min(lo_, other.lo_);
    int nhi = std::max(hi(), other.hi());
    std::vector<Complex> out(static_cast<std::size_t>(nhi - nlo + 1), Complex(0.0, 0.0));
    for (int e = nlo; e <= nhi; ++e)
        out[static_cast<std::size_t>(e - nlo)] = coeff(e) + other.coeff(e);
    lo_ = nlo;
    coeffs_ = std::move(out);
    normalize();
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
    return *this += Complex(-1.0, 0.0) * other;
}

LaurentPoly& LaurentPoly::operator*=(Complex c) {
    if (c == Complex(0.0, 0.0)) { *this = LaurentPoly(); return *this; }
    for (auto& v : coeffs_) v *= c;
    return *this;
}

LaurentPoly substar(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    std::vector<Complex> out(f.coeffs().size());
    for (std::size_t i = 0; i < out.size(); ++i)
        out[i] = std::conj(f.coeffs()[f.coeffs().size() - 1 - i]);
    return LaurentPoly(-f.hi(), std::move(out));
}

LaurentPoly reversed(const LaurentPoly& poly, int n) {
    if (poly.is_zero()) return poly;
    if (poly.lo() < 0) throw DomainError("reversed needs an ordinary polynomial");
    if (poly.hi() > n) throw DomainError("degree exceeds n");
    std::vector<Complex> out(static_cast<std::size_t>(n + 1), Complex(0.0, 0.0));
    for (int j = poly.lo(); j <= poly.hi(); ++j)
        out[static_cast<std::size_t>(n - j)] = std::conj(poly.coeff(j));
    return LaurentPoly(0, std::move(out));
}

LaurentPoly shift_exp(const LaurentPoly& f, int k) {
    if (f.is_zero()) return f;
    return LaurentPoly(f.lo() + k, f.coeffs());
}

LaurentPoly derivative(const LaurentPoly& f) {
    if (f.is_zero()) return f;
    std::vector<Complex> out;
    out.reserve(f.coeffs().size());
    for (int e = f.lo(); e <= f.hi(); ++e)
        out.push_back(static_cast<double>(e) * f.coeff(e));
    return LaurentPoly(f.lo() - 1, std::move(out));
}

double max_coeff_diff(const LaurentPoly& f, const LaurentPoly& g) {
    if (f.is_zero() && g.is_zero()) return 0.0;
    int lo = f.is_zero() ? g.lo() : (g.is_zero() ? f.lo() : std::min(f.lo(), g.lo()));
    int hi = f.is_zero() ? g.hi() : (g.is_zero() ? f.hi() : std::max(f.hi(), g.hi()));
    double m = 0.0;
    for (int e = lo; e <= hi; ++e) m = std::max(m, std::abs(f.coeff(e) - g.coeff(e)));
    return m;
}

std::vector<Complex> ordinary_coeffs(const LaurentPoly& poly) {
    if (poly.is_zero()) return {Complex(0.0, 0.0)};
    if (poly.lo() < 0) throw DomainError("negative exponents present");
    std::vector<Complex> out(static_cast<std::size_t>(poly.hi() + 1), Complex(0.0, 0.0));
    for (int e = poly.lo(); e <= poly.hi(); ++e)
        out[static_cast<std::size_t>(e)] = poly.coeff(e);
    return out;
}

} // namespace szegoq
