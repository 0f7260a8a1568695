#pragma once

#include <vector>

#include "szegoq/laurent.hpp"
#include "szegoq/schur.hpp"

namespace szegoq {

enum class MomentSource { exact, numeric, schur_bootstrap };

/// Trigonometric moments mu_k for |k| <= K, stored for k >= 0 and
/// mirrored by conjugation, so mu_{-k} = conj(mu_k) holds exactly.
/// mu_0 must be real and positive.
class MomentTable {
public:
    MomentTable(std::vector<Complex> mu_nonneg, MomentSource source);

    int range() const noexcept { return static_cast<int>(mu_.size()) - 1; }
    Complex mu(int k) const;
    double mu0() const noexcept { return mu_[0].real(); }
    MomentSource source() const noexcept { return source_; }

private:
    std::vector<Complex> mu_;
    MomentSource source_;
};

/// Measure selector for the numeric moment oracle.
struct Measure {
    enum class Kind { rogers_szego, lebesgue } kind;
    double q = 0.0;

    static Measure rogers_szego(double q) { return {Kind::rogers_szego, q}; }
    static Measure lebesgue() { return {Kind::lebesgue, 0.0}; }
};

/// Wrapped-Gaussian weight on [-pi, pi]; the series is truncated at
/// +-terms images. Integrates to 2*pi, i.e. the density of the
/// probability measure is rs_weight/(2*pi).
double rs_weight(double theta, double q, int terms);
double rs_weight(double theta, double q);
/// Truncation giving an omitted tail below 1e-15 for q <= 0.95.
int rs_weight_default_terms(double q);

/// mu_k = (1/2pi) int e^{-ik theta} w(theta) dtheta by the periodic
/// trapezoid rule, doubling the grid until successive values differ by
/// less than tol. Exponentially convergent for these weights.
MomentTable moments_numeric(const Measure& measure, int k_max, double tol = 1e-12);

/// Closed form for the normalized Lebesgue measure: mu_0 = 1, rest 0.
MomentTable moments_lebesgue_exact(int k_max);

/// Moments reconstructed from the parameters alone: a rule of size
/// K+1 integrates z^k exactly for |k| <= K.
MomentTable moments_from_schur(const SchurSequence& s, int k_max);

/// <f, g> = sum_{a,b} f_a conj(g_b) mu_{b-a}. Throws
/// MomentRangeExceeded when the exponent spread leaves the table.
Complex inner_product(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& m);

} // namespace szegoq
