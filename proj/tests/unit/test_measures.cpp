#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "szegoq/measures.hpp"
#include "szegoq/quadrature.hpp"
#include "szegoq/recurrences.hpp"

using namespace szegoq;
using doctest::Approx;

TEST_CASE("wrapped-Gaussian weight") {
    for (double q : {0.1, 0.5, 0.9}) {
        for (double theta : {0.1, 1.3, 3.0})
            CHECK(rs_weight(theta, q) == Approx(rs_weight(-theta, q)).epsilon(1e-15));

        // (1/2pi) integral over one period is 1
        int grid = 4096;
        double acc = 0.0;
        for (int j = 0; j < grid; ++j)
            acc += rs_weight(-std::numbers::pi + 2.0 * std::numbers::pi * j / grid, q);
        CHECK(acc / grid == Approx(1.0).epsilon(1e-12));
    }
    CHECK_THROWS_AS(rs_weight(0.0, 1.5), DomainError);
    CHECK_THROWS_AS(rs_weight(0.0, 0.5, 0), DomainError);
}

TEST_CASE("numeric moments") {
    MomentTable leb = moments_numeric(Measure::lebesgue(), 5);
    CHECK(leb.mu(0) == Complex(1.0, 0.0));
    for (int k = 1; k <= 5; ++k) CHECK(std::abs(leb.mu(k)) < 1e-14);

    MomentTable rs = moments_numeric(Measure::rogers_szego(0.5), 4, 1e-13);
    CHECK(rs.mu(1).real() == Approx(std::sqrt(0.5)).epsilon(1e-9));
    CHECK(rs.mu(2).real() == Approx(0.25).epsilon(1e-9));
    for (int k = 1; k <= 4; ++k) CHECK(rs.mu(-k) == std::conj(rs.mu(k)));

    // derived regression: mu_k = q^(k^2/2)
    for (double q : {0.1, 0.5, 0.9}) {
        MomentTable m = moments_numeric(Measure::rogers_szego(q), 6, 1e-13);
        for (int k = 0; k <= 6; ++k) {
            CHECK(std::abs(m.mu(k).real() - std::pow(q, 0.5 * k * k)) < 1e-12);
            CHECK(std::abs(m.mu(k).imag()) < 1e-13);
        }
    }
}

TEST_CASE("small-q moments approach the Lebesgue ones") {
    MomentTable m = moments_numeric(Measure::rogers_szego(1e-8), 3, 1e-13);
    CHECK(m.mu(0).real() == Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 3; ++k) CHECK(std::abs(m.mu(k)) < 2e-4);
}

TEST_CASE("bootstrap moments") {
    SchurSequence rs = SchurSequence::rogers_szego(0.5, 8);
    MomentTable boot = moments_from_schur(rs, 8);
    MomentTable oracle = moments_numeric(Measure::rogers_szego(0.5), 8, 1e-13);
    for (int k = 0; k <= 8; ++k) CHECK(std::abs(boot.mu(k) - oracle.mu(k)) < 1e-9);

    SchurSequence zero = SchurSequence::lebesgue(6);
    MomentTable lboot = moments_from_schur(zero, 6);
    CHECK(lboot.mu(0).real() == Approx(1.0).epsilon(1e-12));
    for (int k = 1; k <= 6; ++k) CHECK(std::abs(lboot.mu(k)) < 1e-12);

    // rule-size independence: a larger exact rule gives the same moments
    SchurSequence s = testing::random_schur(11);
    MomentTable small = moments_from_schur(s, 8);
    QuadratureRule bigger = rule_via_cmv(s, 11, Complex(1.0, 0.0));
    for (int k = 0; k <= 8; ++k)
        CHECK(std::abs(small.mu(k) - apply_monomial(bigger, -k)) < 1e-10);
}

TEST_CASE("inner product by moment pairing") {
    MomentTable m = moments_numeric(Measure::rogers_szego(0.5), 10, 1e-13);
    for (int a = -3; a <= 3; ++a)
        for (int b = -3; b <= 3; ++b)
            CHECK(std::abs(inner_product(LaurentPoly::monomial(a), LaurentPoly::monomial(b), m) -
                           m.mu(b - a)) < 1e-15);

    SchurSequence rs = SchurSequence::rogers_szego(0.5, 10);
    LaurentPoly rho2 = szego_monic(rs, 2).rho;
    CHECK(std::abs(inner_product(rho2, LaurentPoly::monomial(1), m)) < 1e-11);

    for (int n = 1; n <= 10; ++n) {
        LaurentPoly phi = szego_monic(rs, n).rho;
        Complex ip = inner_product(phi, phi, m);
        CHECK(ip.real() == Approx(rs.e(n)).epsilon(1e-10));
    }

    CHECK_THROWS_AS(inner_product(LaurentPoly::monomial(11), LaurentPoly::constant(1.0), m),
                    MomentRangeExceeded);
}

TEST_CASE("toeplitz positive definiteness") {
    for (double q : {0.25, 0.75}) {
        MomentTable m = moments_numeric(Measure::rogers_szego(q), 8, 1e-13);
        for (int size = 1; size <= 8; ++size) {
            Eigen::MatrixXcd t(size, size);
            for (int r = 0; r < size; ++r)
                for (int c = 0; c < size; ++c) t(r, c) = m.mu(c - r);
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(t);
            CHECK(es.eigenvalues().minCoeff() > 0.0);
        }
    }
}

TEST_CASE("moment table validation") {
    CHECK_THROWS_AS(MomentTable({Complex(-1.0, 0.0)}, MomentSource::exact), DomainError);
    CHECK_THROWS_AS(MomentTable({Complex(1.0, 0.5)}, MomentSource::exact), DomainError);
    MomentTable m({Complex(1.0, 0.0), Complex(0.5, 0.25)}, MomentSource::exact);
    CHECK_THROWS_AS(m.mu(2), MomentRangeExceeded);
}

TEST_CASE("orthogonality of the laurent family (moment pairing, moderate sizes)") {
    MomentTable m = moments_numeric(Measure::rogers_szego(0.5), 11, 1e-13);
    SchurSequence s = SchurSequence::rogers_szego(0.5, 10);
    for (BalancedKind kind : {BalancedKind::floor_half, BalancedKind::ceil_half}) {
        GeneratingSequence ord = GeneratingSequence::balanced(kind, 10);
        std::vector<LaurentPoly> chi;
        for (int n = 0; n <= 10; ++n)
            chi.push_back(laurent_from_szego(s, ord, n, PolyVariant::orthonormal));
        for (int a = 0; a <= 10; ++a)
            for (int b = 0; b <= a; ++b) {
                Complex ip = inner_product(chi[static_cast<std::size_t>(a)],
                                           chi[static_cast<std::size_t>(b)], m);
                if (a == b)
                    CHECK(std::abs(ip - 1.0) < 1e-9);
                else
                    CHECK(std::abs(ip) < 1e-9);
            }
    }
}
