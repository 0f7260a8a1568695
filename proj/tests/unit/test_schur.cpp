#include <doctest.h>

#include <sstream>

#include "helpers.hpp"
#include "szegoq/schur.hpp"

using namespace szegoq;
using doctest::Approx;

TEST_CASE("eta values") {
    SchurSequence zero = SchurSequence::lebesgue(3);
    CHECK(zero.eta(1) == 1.0);
    SchurSequence s({Complex(0.6, 0.0)});
    CHECK(s.eta(1) == Approx(0.8).epsilon(1e-15));
    SchurSequence rs = SchurSequence::rogers_szego(0.25, 2);
    CHECK(rs.delta(1) == Complex(-0.5, 0.0));
    CHECK(rs.eta(1) == Approx(0.8660254037844386).epsilon(1e-15));
    CHECK_THROWS_AS(s.eta(2), IndexOutOfRange);
}

TEST_CASE("rogers-szego parameters") {
    SchurSequence rs = SchurSequence::rogers_szego(0.25, 3);
    CHECK(rs.delta(1).real() == Approx(-0.5).epsilon(1e-15));
    CHECK(rs.delta(2).real() == Approx(0.25).epsilon(1e-15));
    CHECK(rs.delta(3).real() == Approx(-0.125).epsilon(1e-15));
    CHECK(rs.delta(0) == Complex(1.0, 0.0));

    SchurSequence half = SchurSequence::rogers_szego(0.5, 2);
    CHECK(half.delta(2).real() == Approx(0.5).epsilon(1e-15));
    CHECK(half.eta(2) == Approx(std::sqrt(0.75)).epsilon(1e-15));

    // q -> 0+ limit: parameters collapse to the Lebesgue case
    SchurSequence small = SchurSequence::rogers_szego(1e-8, 4);
    for (int n = 1; n <= 4; ++n) CHECK(std::abs(small.delta(n)) <= 1e-4);

    CHECK_THROWS_AS(SchurSequence::rogers_szego(0.0, 3), DomainError);
    CHECK_THROWS_AS(SchurSequence::rogers_szego(1.0, 3), DomainError);
}

TEST_CASE("lebesgue parameters") {
    SchurSequence s = SchurSequence::lebesgue(3);
    for (int n = 1; n <= 3; ++n) {
        CHECK(s.delta(n) == Complex(0.0, 0.0));
        CHECK(s.eta(n) == 1.0);
    }
    CHECK(s.e(3) == 1.0);
}

TEST_CASE("validation modes") {
    CHECK_THROWS_AS(SchurSequence({Complex(1.0, 0.0)}), DomainError);
    CHECK_THROWS_AS(SchurSequence({Complex(1.5, 0.0)}), DomainError);
    SchurSequence quasi({Complex(1.5, 0.0)}, SchurValidation::quasi_definite);
    CHECK_FALSE(quasi.positive_definite());
    CHECK(quasi.eta_sq(1) == Approx(-1.25).epsilon(1e-15));
    CHECK_THROWS_AS(quasi.eta(1), QuasiDefiniteUnsupported);
    CHECK_THROWS_AS(SchurSequence({Complex(1.0, 0.0)}, SchurValidation::quasi_definite),
                    DomainError);
}

TEST_CASE("e is nonincreasing") {
    SchurSequence s = testing::random_schur(10);
    for (int n = 1; n <= 10; ++n) {
        CHECK(s.e(n) <= s.e(n - 1) + 1e-15);
        CHECK(s.e(n) > 0.0);
    }
}

TEST_CASE("schur file round trip") {
    SchurSequence s = testing::random_schur(6);
    std::stringstream buf;
    write_schur_file(buf, s);
    SchurSequence back = read_schur_file(buf);
    REQUIRE(back.n_max() == 6);
    for (int n = 1; n <= 6; ++n) CHECK(back.delta(n) == s.delta(n));
}

TEST_CASE("schur file parsing") {
    std::stringstream good("# comment\n0.5,0.25\n\n -0.1 , 0.0 # trailing\n");
    SchurSequence s = read_schur_file(good);
    REQUIRE(s.n_max() == 2);
    CHECK(s.delta(1) == Complex(0.5, 0.25));
    CHECK(s.delta(2) == Complex(-0.1, 0.0));

    std::stringstream bad("0.5\n");
    CHECK_THROWS_AS(read_schur_file(bad), ParseError);
    std::stringstream empty("# nothing\n");
    CHECK_THROWS_AS(read_schur_file(empty), ParseError);
}
