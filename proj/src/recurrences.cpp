#include "szegoq/recurrences.hpp"

#include <cassert>
#include <cmath>
#include <limits>

#include "szegoq/measures.hpp"

namespace szegoq {

namespace {

Complex delta_at(const std::vector<Complex>& delta, int n) {
    if (n == 0) return Complex(1.0, 0.0);
    if (n < 1 || n > static_cast<int>(delta.size()))
        throw IndexOutOfRange("delta_" + std::to_string(n));
    return delta[static_cast<std::size_t>(n - 1)];
}

double eta_sq_at(const std::vector<Complex>& delta, int n) {
    return 1.0 - std::norm(delta_at(delta, n));
}

} // namespace

std::vector<SzegoPair> szego_family(const SchurSequence& s, int n) {
    if (n < 0 || n > s.n_max())
        throw IndexOutOfRange("szego_family degree " + std::to_string(n));
    std::vector<SzegoPair> fam;
    fam.reserve(static_cast<std::size_t>(n + 1));
    fam.push_back({LaurentPoly::constant(1.0), LaurentPoly::constant(1.0), 1.0});
    for (int k = 1; k <= n; ++k) {
        const SzegoPair& prev = fam.back();
        Complex d = s.delta(k);
        LaurentPoly zrho = shift_exp(prev.rho, 1);
        LaurentPoly rho = zrho + d * prev.rho_star;
        LaurentPoly rho_star = std::conj(d) * zrho + prev.rho_star;
        fam.push_back({std::move(rho), std::move(rho_star), prev.norm_sq * s.eta_sq(k)});
    }
    return fam;
}

SzegoPair szego_monic(const SchurSequence& s, int n) {
    return szego_family(s, n).back();
}

LaurentPoly szego_orthonormal(const SchurSequence& s, int n) {
    if (!s.positive_definite())
        throw QuasiDefiniteUnsupported("orthonormal family needs |delta| < 1");
    SzegoPair pair = szego_monic(s, n);
    return (1.0 / std::sqrt(pair.norm_sq)) * pair.rho;
}

LaurentPoly laurent_from_szego(const SchurSequence& s, const GeneratingSequence& ord,
                               int n, PolyVariant variant) {
    if (n < 0) throw IndexOutOfRange("degree must be >= 0");
    if (variant == PolyVariant::orthonormal && !s.positive_definite())
        throw QuasiDefiniteUnsupported("orthonormal family needs |delta| < 1");
    SzegoPair pair = szego_monic(s, n);
    LaurentPoly out = (ord.s(n) == 0) ? pair.rho : pair.rho_star;
    out = shift_exp(out, -ord.p(n));
    if (variant == PolyVariant::orthonormal) out *= 1.0 / std::sqrt(pair.norm_sq);
    return out;
}

bool substar_duality_check(const SchurSequence& s, const GeneratingSequence& ord,
                           int n, double tol) {
    GeneratingSequence dual = ord.dual();
    for (PolyVariant v : {PolyVariant::monic, PolyVariant::orthonormal}) {
        LaurentPoly xi = laurent_from_szego(s, dual, n, v);
        LaurentPoly psi = laurent_from_szego(s, ord, n, v);
        if (max_coeff_diff(xi, substar(psi)) > tol) return false;
    }
    return true;
}

GeneralRecurrenceCoeffs three_term_coeffs(const std::vector<Complex>& delta,
                                          const GeneratingSequence& ord, int n) {
    if (n < 2) throw IndexOutOfRange("three-term step needs n >= 2");
    Complex dn = delta_at(delta, n);
    Complex dp = delta_at(delta, n - 1);
    int sn = ord.s(n), s1 = ord.s(n - 1), s2 = ord.s(n - 2);
    if (s1 == s2 && dp == Complex(0.0, 0.0))
        throw ZeroSchurParameterInDegenerateCase(
            "delta_" + std::to_string(n - 1) + " = 0 with s(n-2) = s(n-1)");

    Complex one(1.0, 0.0);
    switch (sn * 4 + s1 * 2 + s2) {
    case 0: // (0,0,0)
        return {dn / dp, one, 1, -dn / dp, 1};
    case 1: // (0,0,1)
        return {dn * std::conj(dp), one, 1, dn, 0};
    case 2: // (0,1,0)
        return {dn, dp, 1, one, 1};
    case 3: // (0,1,1)
        return {dn, one / std::conj(dp), 1, -one / std::conj(dp), 0};
    case 4: // (1,0,0)
        return {std::conj(dn), one / dp, -1, -one / dp, 0};
    case 5: // (1,0,1)
        return {std::conj(dn), std::conj(dp), -1, one, -1};
    case 6: // (1,1,0)
        return {std::conj(dn) * dp, one, -1, std::conj(dn), 0};
    default: // (1,1,1)
        return {std::conj(dn) / std::conj(dp), one, -1,
                -std::conj(dn) / std::conj(dp), -1};
    }
}

GeneralRecurrenceCoeffs three_term_coeffs_condensed(const std::vector<Complex>& delta,
                                                    const GeneratingSequence& ord, int n) {
    if (n < 2) throw IndexOutOfRange("three-term step needs n >= 2");
    Complex dn = delta_at(delta, n);
    Complex dp = delta_at(delta, n - 1);
    int sn = ord.s(n), s1 = ord.s(n - 1), s2 = ord.s(n - 2);
    if (s1 == s2 && dp == Complex(0.0, 0.0))
        throw ZeroSchurParameterInDegenerateCase(
            "delta_" + std::to_string(n - 1) + " = 0 with s(n-2) = s(n-1)");

    auto ipow = [](Complex base, int e) {
        return e == 0 ? Complex(1.0, 0.0) : (e > 0 ? base : Complex(1.0, 0.0) / base);
    };
    Complex a = (sn != s1) ? Complex(1.0, 0.0)
              : (s2 == 0 ? ipow(dp, 2 * sn - 1) : ipow(std::conj(dp), 1 - 2 * sn));
    Complex b = (sn == 0) ? dn : std::conj(dn);
    Complex c = (sn == s1) ? Complex(1.0, 0.0)
              : (s2 == 0 ? ipow(dp, s1 - sn) : ipow(std::conj(dp), sn - s1));
    Complex d = (s1 == sn) ? ((sn == 0) ? dn : std::conj(dn)) : Complex(1.0, 0.0);
    Complex e = (s2 == s1) ? ((s1 == 0) ? Complex(1.0, 0.0) / dp
                                        : Complex(1.0, 0.0) / std::conj(dp))
                           : Complex(1.0, 0.0);
    double sign = ((1 + s2 - s1) % 2 == 0) ? 1.0 : -1.0;
    return {a * b, c, 1 - 2 * sn, sign * d * e, 1 - sn - s2};
}

namespace {

// Core three-term iteration shared by the SchurSequence and raw-list
// entry points. pow_eta = 2 runs the monic relation, pow_eta = 1 the
// orthonormal one (which then divides by eta_n).
std::vector<LaurentPoly> three_term_run(const std::vector<Complex>& delta,
                                        const GeneratingSequence& ord, int n,
                                        bool orthonormal) {
    if (n < 0 || n > static_cast<int>(delta.size()) || n > ord.n_max())
        throw IndexOutOfRange("three-term degree " + std::to_string(n));
    std::vector<LaurentPoly> fam;
    fam.reserve(static_cast<std::size_t>(n + 1));
    fam.push_back(LaurentPoly::constant(1.0));
    if (n == 0) return fam;

    Complex k1 = (ord.s(1) == 0) ? delta_at(delta, 1) : std::conj(delta_at(delta, 1));
    LaurentPoly phi1 = LaurentPoly::constant(k1) + LaurentPoly::monomial(1 - 2 * ord.s(1));
    if (orthonormal) {
        double e1 = eta_sq_at(delta, 1);
        if (e1 <= 0.0) throw QuasiDefiniteUnsupported("orthonormal family needs |delta| < 1");
        phi1 *= 1.0 / std::sqrt(e1);
    }
    fam.push_back(std::move(phi1));

    for (int k = 2; k <= n; ++k) {
        GeneralRecurrenceCoeffs co = three_term_coeffs(delta, ord, k);
#ifndef NDEBUG
        GeneralRecurrenceCoeffs cd = three_term_coeffs_condensed(delta, ord, k);
        assert(std::abs(co.mid_const - cd.mid_const) < 1e-12 &&
               std::abs(co.mid_z - cd.mid_z) < 1e-12 &&
               std::abs(co.prev2 - cd.prev2) < 1e-12 &&
               co.mid_exp == cd.mid_exp && co.prev2_exp == cd.prev2_exp);
#endif
        const LaurentPoly& p1 = fam[static_cast<std::size_t>(k - 1)];
        const LaurentPoly& p2 = fam[static_cast<std::size_t>(k - 2)];
        double esq = eta_sq_at(delta, k - 1);
        LaurentPoly mid = co.mid_const * p1 + co.mid_z * shift_exp(p1, co.mid_exp);
        double eta_factor = esq;
        double scale = 1.0;
        if (orthonormal) {
            if (esq <= 0.0 || eta_sq_at(delta, k) <= 0.0)
                throw QuasiDefiniteUnsupported("orthonormal family needs |delta| < 1");
            eta_factor = std::sqrt(esq);
            scale = 1.0 / std::sqrt(eta_sq_at(delta, k));
        }
        LaurentPoly next = mid + (co.prev2 * eta_factor) * shift_exp(p2, co.prev2_exp);
        next *= scale;
        fam.push_back(std::move(next));
    }
    return fam;
}

} // namespace

LaurentPoly three_term_general(const SchurSequence& s, const GeneratingSequence& ord,
                               int n, PolyVariant variant) {
    return three_term_run(s.deltas(), ord, n, variant == PolyVariant::orthonormal).back();
}

RecurrenceWithoutOrthogonality recurrence_without_orthogonality(
    const std::vector<Complex>& delta, const GeneratingSequence& ord, int n) {
    for (std::size_t i = 0; i < delta.size(); ++i)
        if (std::abs(delta[i]) == 1.0)
            throw DomainError("|delta_" + std::to_string(i + 1) + "| must differ from 1");

    std::vector<LaurentPoly> fam = three_term_run(delta, ord, n, false);
    std::vector<LaurentPoly> f(fam.size());
    for (int k = 0; k <= n; ++k) {
        LaurentPoly nk = shift_exp(fam[static_cast<std::size_t>(k)], ord.p(k));
        f[static_cast<std::size_t>(k)] = (ord.s(k) == 0) ? nk : reversed(nk, k);
    }
    double residual = 0.0;
    for (int k = 1; k <= n; ++k) {
        const LaurentPoly& fk = f[static_cast<std::size_t>(k)];
        const LaurentPoly& fp = f[static_cast<std::size_t>(k - 1)];
        LaurentPoly fp_star = reversed(fp, k - 1);
        Complex dk = delta_at(delta, k);
        residual = std::max(residual,
                            max_coeff_diff(fk, shift_exp(fp, 1) + dk * fp_star));
        residual = std::max(residual,
                            max_coeff_diff(reversed(fk, k),
                                           std::conj(dk) * shift_exp(fp, 1) + fp_star));
    }
    return {fam.back(), f.back(), residual};
}

FavardReport favard_verify(const std::vector<Complex>& delta, const GeneratingSequence& ord,
                           int n_max, double mu0, double tol) {
    if (!(mu0 > 0.0)) throw DomainError("mu0 must be > 0 in the positive-definite branch");
    SchurSequence s(delta); // enforces |delta| < 1
    MomentTable moments = moments_from_schur(s, n_max);
    std::vector<LaurentPoly> fam = three_term_run(delta, ord, n_max, false);

    double max_off = 0.0;
    double min_diag = std::numeric_limits<double>::infinity();
    for (int a = 0; a <= n_max; ++a) {
        for (int b = 0; b <= a; ++b) {
            Complex ip = mu0 * inner_product(fam[static_cast<std::size_t>(a)],
                                             fam[static_cast<std::size_t>(b)], moments);
            if (a == b)
                min_diag = std::min(min_diag, ip.real() - std::abs(ip.imag()));
            else
                max_off = std::max(max_off, std::abs(ip));
        }
    }
    bool pass = max_off <= tol * std::max(1.0, mu0) && min_diag > 0.0;
    return {n_max, max_off, min_diag, pass};
}

double q_binomial(int n, int j, double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    if (j < 0 || j > n) throw DomainError("need 0 <= j <= n");
    double acc = 1.0;
    for (int i = 1; i <= j; ++i)
        acc *= (1.0 - std::pow(q, n - j + i)) / (1.0 - std::pow(q, i));
    return acc;
}

LaurentPoly rs_laurent_explicit(double q, int n) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("q must lie in (0,1)");
    if (n < 0) throw DomainError("degree must be >= 0");
    if (n == 0) return LaurentPoly::constant(1.0);
    double sq = std::sqrt(q);
    if (n % 2 == 0) {
        int k = n / 2;
        // a_k = 1, descending to a_{-k}
        std::vector<Complex> c(static_cast<std::size_t>(2 * k + 1));
        c.back() = 1.0;
        for (int j = k - 1; j >= -k; --j) {
            Complex next = c[static_cast<std::size_t>(j + 1 + k)];
            c[static_cast<std::size_t>(j + k)] =
                -next * sq * (1.0 - std::pow(q, k + j + 1)) / (1.0 - std::pow(q, k - j));
        }
        return LaurentPoly(-k, std::move(c));
    }
    int k = (n - 1) / 2;
    // b_{-(k+1)} = 1, ascending to b_k
    std::vector<Complex> c(static_cast<std::size_t>(2 * k + 2));
    c.front() = 1.0;
    for (int j = -(k + 1); j <= k - 1; ++j) {
        Complex prev = c[static_cast<std::size_t>(j + k + 1)];
        c[static_cast<std::size_t>(j + k + 2)] =
            -prev * sq * (1.0 - std::pow(q, k - j)) / (1.0 - std::pow(q, k + j + 2));
    }
    return LaurentPoly(-(k + 1), std::move(c));
}

std::vector<Complex> orthonormal_values_at(const SchurSequence& s,
                                           const GeneratingSequence& ord, int n, Complex z) {
    if (n < 0 || n > s.n_max() || n > ord.n_max())
        throw IndexOutOfRange("orthonormal values degree " + std::to_string(n));
    if (z == Complex(0.0, 0.0)) throw EvalAtZero("chi has negative exponents");
    std::vector<Complex> out(static_cast<std::size_t>(n + 1));
    Complex phi(1.0, 0.0), phi_star(1.0, 0.0);
    Complex zinv_pow(1.0, 0.0); // z^{-p(k)}, updated as p grows
    Complex zinv = Complex(1.0, 0.0) / z;
    out[0] = 1.0;
    for (int k = 1; k <= n; ++k) {
        Complex d = s.delta(k);
        double eta = s.eta(k);
        Complex zphi = z * phi;
        Complex nphi = (zphi + d * phi_star) / eta;
        Complex nstar = (std::conj(d) * zphi + phi_star) / eta;
        phi = nphi;
        phi_star = nstar;
        if (ord.s(k) == 1) zinv_pow *= zinv;
        out[static_cast<std::size_t>(k)] = ((ord.s(k) == 0) ? phi : phi_star) * zinv_pow;
    }
    return out;
}

ValueDeriv orthonormal_value_deriv_at(const SchurSequence& s, const GeneratingSequence& ord,
                                      int n, Complex z) {
    if (n < 0 || n > s.n_max() || n > ord.n_max())
        throw IndexOutOfRange("orthonormal values degree " + std::to_string(n));
    if (z == Complex(0.0, 0.0)) throw EvalAtZero("chi has negative exponents");
    Complex phi(1.0, 0.0), phi_star(1.0, 0.0);
    Complex dphi(0.0, 0.0), dphi_star(0.0, 0.0);
    for (int k = 1; k <= n; ++k) {
        Complex d = s.delta(k);
        double eta = s.eta(k);
        Complex zphi = z * phi;
        Complex zphi_d = phi + z * dphi;
        Complex nphi = (zphi + d * phi_star) / eta;
        Complex ndphi = (zphi_d + d * dphi_star) / eta;
        Complex nstar = (std::conj(d) * zphi + phi_star) / eta;
        Complex ndstar = (std::conj(d) * zphi_d + dphi_star) / eta;
        phi = nphi;
        dphi = ndphi;
        phi_star = nstar;
        dphi_star = ndstar;
    }
    int p = ord.p(n);
    Complex g = (ord.s(n) == 0) ? phi : phi_star;
    Complex dg = (ord.s(n) == 0) ? dphi : dphi_star;
    Complex zp = std::pow(z, -p);
    return {g * zp, dg * zp - static_cast<double>(p) * g * zp / z};
}

} // namespace szegoq
