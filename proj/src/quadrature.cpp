#include "szegoq/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

namespace szegoq {

const char* to_string(QuadratureRoute route) {
    switch (route) {
    case QuadratureRoute::hessenberg: return "hessenberg";
    case QuadratureRoute::cmv: return "cmv";
    case QuadratureRoute::roots: return "roots";
    }
    return "unknown";
}

double node_sort_angle(Complex z) {
    double a = std::arg(z);
    if (a <= -std::numbers::pi + 1e-9) a += 2.0 * std::numbers::pi;
    return a;
}

namespace {

void check_unimodular(Complex u) {
    if (std::abs(std::abs(u) - 1.0) > 1e-12)
        throw NonUnimodularU("|u| = " + std::to_string(std::abs(u)));
}

void check_balanced(const GeneratingSequence& ord) {
    for (int m = 2; m <= ord.n_max(); ++m)
        if (ord.s(m) == ord.s(m - 1))
            throw DomainError("a balanced ordering is required");
}

void check_positive_definite(const SchurSequence& s) {
    if (!s.positive_definite())
        throw QuasiDefiniteUnsupported("quadrature rules need |delta| < 1");
}

// Shared finishing step: sort by principal argument and enforce the
// rule invariants.
QuadratureRule assemble(std::vector<Complex> nodes, std::vector<double> weights,
                        Complex u, QuadratureRoute route, double mu0) {
    const std::size_t n = nodes.size();
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return node_sort_angle(nodes[a]) < node_sort_angle(nodes[b]);
    });
    QuadratureRule rule;
    rule.nodes.reserve(n);
    rule.weights.reserve(n);
    for (std::size_t i : order) {
        rule.nodes.push_back(nodes[i]);
        rule.weights.push_back(weights[i]);
    }
    rule.u = u;
    rule.route = route;
    rule.mu0 = mu0;

    double wsum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        double mod = std::abs(rule.nodes[j]);
        if (std::abs(mod - 1.0) > 1e-10)
            throw InvariantViolation("node modulus " + std::to_string(mod));
        if (!(rule.weights[j] > 0.0))
            throw InvariantViolation("nonpositive weight " + std::to_string(rule.weights[j]));
        wsum += rule.weights[j];
    }
    if (std::abs(wsum - mu0) > 1e-10 * std::max(1.0, mu0))
        throw InvariantViolation("weight sum " + std::to_string(wsum));
    for (std::size_t j = 0; j + 1 < n; ++j) {
        double gap = node_sort_angle(rule.nodes[j + 1]) - node_sort_angle(rule.nodes[j]);
        if (gap <= 1e-9)
            throw InvariantViolation("angular gap " + std::to_string(gap));
    }
    if (n > 1) {
        double wrap = node_sort_angle(rule.nodes.front()) + 2.0 * std::numbers::pi -
                      node_sort_angle(rule.nodes.back());
        if (wrap <= 1e-9)
            throw InvariantViolation("angular gap " + std::to_string(wrap));
    }
    return rule;
}

QuadratureRule rule_from_eigen(const OperatorMatrix& m, Complex u,
                               QuadratureRoute route, double mu0) {
    EigenResult eig = eigen_full(m);
    std::vector<double> weights(eig.values.size());
    for (std::size_t j = 0; j < eig.values.size(); ++j)
        weights[j] = mu0 * std::norm(eig.first_components[j]);
    return assemble(std::move(eig.values), std::move(weights), u, route, mu0);
}

} // namespace

LaurentPoly para_orthogonal(const SchurSequence& s, int n, Complex u) {
    check_unimodular(u);
    if (n < 1 || n - 1 > s.n_max())
        throw IndexOutOfRange("para-orthogonal degree " + std::to_string(n));
    SzegoPair prev = szego_monic(s, n - 1);
    return shift_exp(prev.rho, 1) + u * prev.rho_star;
}

LaurentPoly para_laurent(const SchurSequence& s, const GeneratingSequence& ord,
                         int n, Complex u) {
    check_unimodular(u);
    if (n < 1 || n > s.n_max())
        throw IndexOutOfRange("para-orthogonal degree " + std::to_string(n));
    check_balanced(ord);
    Complex tau = (ord.s(n) == 0) ? (u - s.delta(n)) : std::conj(u - s.delta(n));
    LaurentPoly chi_n = laurent_from_szego(s, ord, n, PolyVariant::orthonormal);
    LaurentPoly chi_p = laurent_from_szego(s, ord, n - 1, PolyVariant::orthonormal);
    return s.eta(n) * chi_n + tau * chi_p;
}

QuadratureRule rule_via_hessenberg(const SchurSequence& s, int n, Complex u, double mu0) {
    check_positive_definite(s);
    return rule_from_eigen(hessenberg_truncated_u(s, n, u), u,
                           QuadratureRoute::hessenberg, mu0);
}

QuadratureRule rule_via_cmv(const SchurSequence& s, int n, Complex u, double mu0) {
    check_positive_definite(s);
    return rule_from_eigen(cmv_truncated_u(s, n, u), u, QuadratureRoute::cmv, mu0);
}

namespace {

// The root polish and weight formulas are evaluated in extended
// precision: both weight expressions drift linearly in the node error
// with an O(n / lambda_j) factor, so the heavy nodes of large rules
// need angles quite a bit below double rounding noise for the
// cross-check to be meaningful.
using LComplex = std::complex<long double>;

LComplex lc(Complex z) { return {static_cast<long double>(z.real()),
                                 static_cast<long double>(z.imag())}; }

// P_n(z, u) and z P_n'(z, u) at z = e^{i theta} by the forward value
// recurrence; far more accurate near the zeros than Horner on the
// (possibly huge) expanded coefficients. The error scale of the result
// is the largest magnitude passed through, not the (possibly tiny)
// local value, so the running maximum is reported alongside.
struct ParaValues {
    LComplex p;
    LComplex zdp;
    long double scale;
};

ParaValues para_values_at(const SchurSequence& s, int n, Complex u, long double theta) {
    LComplex z = std::polar<long double>(1.0L, theta);
    LComplex rho(1.0L, 0.0L), rho_star(1.0L, 0.0L);
    LComplex drho(0.0L, 0.0L), drho_star(0.0L, 0.0L);
    long double scale = 2.0L;
    for (int k = 1; k <= n - 1; ++k) {
        LComplex d = lc(s.delta(k));
        LComplex zr = z * rho;
        LComplex zr_d = rho + z * drho;
        LComplex next = zr + d * rho_star;
        LComplex next_d = zr_d + d * drho_star;
        rho_star = std::conj(d) * zr + rho_star;
        drho_star = std::conj(d) * zr_d + drho_star;
        rho = next;
        drho = next_d;
        scale = std::max(scale, std::abs(rho) + std::abs(rho_star));
    }
    LComplex p = z * rho + lc(u) * rho_star;
    LComplex dp = rho + z * drho + lc(u) * drho_star;
    return {p, z * dp, scale};
}

// Orthonormal family values at z = e^{i theta}: the Christoffel sum
// over chi_0..chi_{n-1} plus chi_n and its derivative for the
// derivative-based weight formula.
struct WeightValues {
    long double christoffel;
    LComplex chi_n;
    LComplex chi_n_deriv;
};

WeightValues weight_values_at(const SchurSequence& s, const GeneratingSequence& ord,
                              int n, long double theta) {
    LComplex z = std::polar<long double>(1.0L, theta);
    LComplex phi(1.0L, 0.0L), phi_star(1.0L, 0.0L);
    LComplex dphi(0.0L, 0.0L), dphi_star(0.0L, 0.0L);
    long double chris = 1.0L; // |chi_0|^2
    for (int k = 1; k <= n; ++k) {
        LComplex d = lc(s.delta(k));
        long double eta = std::sqrt(static_cast<long double>(1.0L) - std::norm(d));
        LComplex zp = z * phi;
        LComplex zp_d = phi + z * dphi;
        LComplex next = (zp + d * phi_star) / eta;
        LComplex next_d = (zp_d + d * dphi_star) / eta;
        phi_star = (std::conj(d) * zp + phi_star) / eta;
        dphi_star = (std::conj(d) * zp_d + dphi_star) / eta;
        phi = next;
        dphi = next_d;
        // |chi_k| = |phi_k| or |phi*_k| on the circle
        if (k <= n - 1) chris += std::norm(ord.s(k) == 0 ? phi : phi_star);
    }
    int p = ord.p(n);
    LComplex zp_pow = std::polar<long double>(1.0L, -static_cast<long double>(p) * theta);
    LComplex g = (ord.s(n) == 0) ? phi : phi_star;
    LComplex dg = (ord.s(n) == 0) ? dphi : dphi_star;
    LComplex chi = g * zp_pow;
    LComplex dchi = dg * zp_pow - static_cast<long double>(p) * g * zp_pow / z;
    return {chris, chi, dchi};
}

} // namespace

QuadratureRule rule_via_roots(const SchurSequence& s, const GeneratingSequence& ord,
                              int n, Complex u, double mu0) {
    check_unimodular(u);
    check_balanced(ord);
    check_positive_definite(s);
    if (n < 1 || n > s.n_max())
        throw IndexOutOfRange("rule size " + std::to_string(n));

    LaurentPoly p = para_orthogonal(s, n, u);
    std::vector<Complex> nodes = companion_roots(ordinary_coeffs(p));

    // P_n is self-inversive up to the phase of u, so
    // g(theta) = e^{-i(n theta + arg u)/2} P_n(e^{i theta}) is real with
    // simple zeros at the node angles: polish with a real Newton there.
    const long double half_phase = 0.5L * std::arg(lc(u));
    const long double max_step = std::numbers::pi_v<long double> / n;
    std::vector<double> weights(nodes.size());
    for (std::size_t j = 0; j < nodes.size(); ++j) {
        long double theta = std::arg(lc(nodes[j]));
        long double best_theta = theta;
        long double best_g = std::numeric_limits<long double>::infinity();
        for (int it = 0; it < 80; ++it) {
            ParaValues v = para_values_at(s, n, u, theta);
            LComplex rot = std::polar<long double>(1.0L, -(0.5L * n * theta + half_phase));
            long double g = (rot * v.p).real();
            if (std::abs(g) < best_g) {
                best_g = std::abs(g);
                best_theta = theta;
            }
            // noise floor of the extended-precision evaluation
            if (std::abs(g) <= 4e-19L * n * v.scale) break;
            long double dg = (LComplex(0.0L, 1.0L) * rot * (v.zdp - 0.5L * n * v.p)).real();
            if (dg == 0.0L) break;
            long double step = std::clamp(g / dg, -max_step, max_step);
            theta -= step;
            if (std::abs(step) <= 1e-14L) break;
        }
        theta = best_theta;
        ParaValues v = para_values_at(s, n, u, theta);
        if (std::abs(v.p) > 1e-12L * v.scale)
            throw RootPolishDiverged("node polish stalled at |P|/scale = " +
                                     std::to_string(static_cast<double>(std::abs(v.p) / v.scale)));
        nodes[j] = Complex(static_cast<double>(std::cos(theta)),
                           static_cast<double>(std::sin(theta)));

        WeightValues wv = weight_values_at(s, ord, n, theta);
        double w = static_cast<double>(mu0 / wv.christoffel);

        // Derivative-based formula as an independent route to the same
        // weight; disagreement signals an implementation bug. When the
        // node happens to sit at a near-zero of chi_n the formula's
        // evaluation turns ill-conditioned, so the comparison tolerance
        // is widened by the measured local sensitivity.
        long double sign = (ord.s(n) == 0) ? 1.0L : -1.0L;
        auto bis_at = [&](long double th) {
            WeightValues v2 = weight_values_at(s, ord, n, th);
            LComplex z = std::polar<long double>(1.0L, th);
            long double denom = 2.0L * (z * v2.chi_n_deriv * std::conj(v2.chi_n)).real() +
                                static_cast<long double>(ord.p(n) - ord.q(n)) *
                                    std::norm(v2.chi_n);
            return static_cast<double>(mu0 * sign / denom);
        };
        double w_bis = bis_at(theta);
        double swing = std::abs(bis_at(theta + 1e-11L) - bis_at(theta - 1e-11L));
        double tol = 1e-9 * std::max(1.0, mu0) + 8.0 * swing;
        if (std::abs(w - w_bis) > tol)
            throw WeightFormulaMismatch("Christoffel " + std::to_string(w) +
                                        " vs derivative " + std::to_string(w_bis));
        weights[j] = w;
    }
    return assemble(std::move(nodes), std::move(weights), u, QuadratureRoute::roots, mu0);
}

Complex apply(const QuadratureRule& rule, const std::function<Complex(Complex)>& f) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        acc += rule.weights[j] * f(rule.nodes[j]);
    return acc;
}

Complex apply_monomial(const QuadratureRule& rule, int k) {
    Complex acc(0.0, 0.0);
    for (std::size_t j = 0; j < rule.nodes.size(); ++j)
        acc += rule.weights[j] * std::pow(rule.nodes[j], k);
    return acc;
}

ExactnessReport verify_exactness(const QuadratureRule& rule, const MomentTable& moments,
                                 double tol) {
    int n = rule.size();
    if (moments.range() < n - 1)
        throw MomentRangeExceeded("need moments up to " + std::to_string(n - 1));
    double max_err = 0.0;
    int worst = 0;
    for (int k = -(n - 1); k <= n - 1; ++k) {
        // I(z^k) integrates e^{ik theta}, whose moment is mu_{-k}
        double err = std::abs(apply_monomial(rule, k) - moments.mu(-k));
        if (err > max_err) {
            max_err = err;
            worst = k;
        }
    }
    return {max_err, worst, tol, max_err <= tol};
}

} // namespace szegoq
