#include "szegoq/measures.hpp"

#include <cmath>
#include <numbers>

#include "szegoq/quadrature.hpp"

namespace szegoq {

MomentTable::MomentTable(std::vector<Complex> mu_nonneg, MomentSource source)
    : mu_(std::move(mu_nonneg)), source_(source) {
    if (mu_.empty()) throw DomainError("moment table needs mu_0");
    if (std::abs(mu_[0].imag()) > 1e-12 || !(mu_[0].real() > 0.0))
        throw DomainError("mu_0 must be real and positive");
    mu_[0] = Complex(mu_[0].real(), 0.0);
}

Complex MomentTable::mu(int k) const {
    int a = std::abs(k);
    if (a > range())
        throw MomentRangeExceeded("mu_" + std::to_string(k) + " beyond K = " +
                                  std::to_string(range()));
    Complex v = mu_[static_cast<std::size_t>(a)];
    return k >= 0 ? v : std::conj(v);
}

int rs_weight_default_terms(double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    double len = std::log(1.0 / q);
    // the omitted images beyond T contribute about exp(-(2*pi*T - pi)^2 / (2 len));
    // keep that below 1e-16
    int tail = static_cast<int>(
        std::ceil((std::sqrt(2.0 * len * 36.8) + std::numbers::pi) / (2.0 * std::numbers::pi)));
    int rule_of_thumb = static_cast<int>(std::ceil(4.0 / std::sqrt(len))) + 2;
    return std::max(tail + 1, rule_of_thumb);
}

double rs_weight(double theta, double q, int terms) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    if (terms < 1) throw DomainError("terms must be >= 1");
    const double two_pi = 2.0 * std::numbers::pi;
    double len = std::log(1.0 / q);
    double pref = two_pi / std::sqrt(two_pi * len);
    double acc = 0.0;
    for (int j = -terms; j <= terms; ++j) {
        double d = theta - two_pi * j;
        acc += std::exp(-d * d / (2.0 * len));
    }
    return pref * acc;
}

double rs_weight(double theta, double q) {
    return rs_weight(theta, q, rs_weight_default_terms(q));
}

namespace {

std::vector<Complex> trapezoid_moments(const Measure& measure, int k_max, int grid) {
    const double two_pi = 2.0 * std::numbers::pi;
    int terms = measure.kind == Measure::Kind::rogers_szego
                    ? rs_weight_default_terms(measure.q)
                    : 0;
    std::vector<double> w(static_cast<std::size_t>(grid));
    for (int j = 0; j < grid; ++j) {
        double theta = -std::numbers::pi + two_pi * j / grid;
        w[static_cast<std::size_t>(j)] =
            measure.kind == Measure::Kind::rogers_szego
                ? rs_weight(theta, measure.q, terms)
                : 1.0;
    }
    std::vector<Complex> mu(static_cast<std::size_t>(k_max + 1), Complex(0.0, 0.0));
    for (int k = 0; k <= k_max; ++k) {
        Complex acc(0.0, 0.0);
        for (int j = 0; j < grid; ++j) {
            double theta = -std::numbers::pi + two_pi * j / grid;
            acc += w[static_cast<std::size_t>(j)] * std::polar(1.0, -k * theta);
        }
        mu[static_cast<std::size_t>(k)] = acc / static_cast<double>(grid);
    }
    return mu;
}

} // namespace

MomentTable moments_numeric(const Measure& measure, int k_max, double tol) {
    if (k_max < 0) throw DomainError("k_max must be >= 0");
    int grid = 64;
    while (grid <= 2 * k_max) grid *= 2;
    std::vector<Complex> prev = trapezoid_moments(measure, k_max, grid);
    for (; grid <= (1 << 20); ) {
        grid *= 2;
        std::vector<Complex> next = trapezoid_moments(measure, k_max, grid);
        double diff = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i)
            diff = std::max(diff, std::abs(next[i] - prev[i]));
        prev = std::move(next);
        if (diff < tol) return MomentTable(std::move(prev), MomentSource::numeric);
    }
    throw NoConvergence("trapezoid moments did not settle below tol");
}

MomentTable moments_lebesgue_exact(int k_max) {
    if (k_max < 0) throw DomainError("k_max must be >= 0");
    std::vector<Complex> mu(static_cast<std::size_t>(k_max + 1), Complex(0.0, 0.0));
    mu[0] = Complex(1.0, 0.0);
    return MomentTable(std::move(mu), MomentSource::exact);
}

MomentTable moments_from_schur(const SchurSequence& s, int k_max) {
    if (k_max < 0) throw DomainError("k_max must be >= 0");
    if (k_max > s.n_max())
        throw IndexOutOfRange("k_max exceeds available parameters");
    QuadratureRule rule = rule_via_cmv(s, k_max + 1, Complex(1.0, 0.0));
    std::vector<Complex> mu(static_cast<std::size_t>(k_max + 1));
    // mu_k is the integral of e^{-ik theta}, i.e. of z^{-k}
    for (int k = 0; k <= k_max; ++k)
        mu[static_cast<std::size_t>(k)] = apply_monomial(rule, -k);
    mu[0] = Complex(mu[0].real(), 0.0);
    return MomentTable(std::move(mu), MomentSource::schur_bootstrap);
}

Complex inner_product(const LaurentPoly& f, const LaurentPoly& g, const MomentTable& m) {
    if (f.is_zero() || g.is_zero()) return Complex(0.0, 0.0);
    int spread = std::max(std::abs(g.hi() - f.lo()), std::abs(f.hi() - g.lo()));
    if (spread > m.range())
        throw MomentRangeExceeded("exponent spread " + std::to_string(spread) +
                                  " beyond K = " + std::to_string(m.range()));
    Complex acc(0.0, 0.0);
    for (int a = f.lo(); a <= f.hi(); ++a) {
        if (f.coeff(a) == Complex(0.0, 0.0)) continue;
        for (int b = g.lo(); b <= g.hi(); ++b)
            acc += f.coeff(a) * std::conj(g.coeff(b)) * m.mu(b - a);
    }
    return acc;
}

} // namespace szegoq
