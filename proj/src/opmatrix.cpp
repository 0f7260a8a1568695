#include "szegoq/opmatrix.hpp"

#include <cmath>

#include "szegoq/recurrences.hpp"

namespace szegoq {

const char* to_string(MatrixKind kind) {
    switch (kind) {
    case MatrixKind::hessenberg: return "hessenberg";
    case MatrixKind::hessenberg_u: return "hessenberg_u";
    case MatrixKind::cmv: return "cmv";
    case MatrixKind::cmv_u: return "cmv_u";
    case MatrixKind::cmv_transpose: return "cmv_transpose";
    case MatrixKind::cmv_adjoint: return "cmv_adjoint";
    case MatrixKind::cmv_factor: return "cmv_factor";
    case MatrixKind::banded_general: return "banded_general";
    }
    return "unknown";
}

namespace {

void check_unimodular(Complex u) {
    if (std::abs(std::abs(u) - 1.0) > 1e-12)
        throw NonUnimodularU("|u| = " + std::to_string(std::abs(u)));
}

// Hessenberg body shared by the plain and u-truncated variants; the
// parameter list is delta_1..delta_n with the last one possibly u.
Eigen::MatrixXcd hessenberg_body(const std::vector<Complex>& d, int n) {
    auto delta = [&](int k) { return k == 0 ? Complex(1.0, 0.0) : d[static_cast<std::size_t>(k - 1)]; };
    auto eta = [&](int k) { return std::sqrt(1.0 - std::norm(delta(k))); };
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            Complex prod(1.0, 0.0);
            for (int k = j + 1; k <= i; ++k) prod *= eta(k);
            m(i, j) = -std::conj(delta(j)) * delta(i + 1) * prod;
        }
        if (i + 1 < n) m(i, i + 1) = eta(i + 1);
    }
    return m;
}

std::vector<Complex> take_deltas(const SchurSequence& s, int count) {
    std::vector<Complex> d(static_cast<std::size_t>(count));
    for (int k = 1; k <= count; ++k) d[static_cast<std::size_t>(k - 1)] = s.delta(k);
    return d;
}

// Five-diagonal body on an explicit parameter list delta_1..delta_n.
Eigen::MatrixXcd cmv_body(const std::vector<Complex>& d, int n) {
    auto delta = [&](int k) { return k == 0 ? Complex(1.0, 0.0) : d[static_cast<std::size_t>(k - 1)]; };
    auto eta = [&](int k) { return std::sqrt(1.0 - std::norm(delta(k))); };
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(n, n);
    auto put = [&](int r, int c, Complex v) {
        if (r >= 0 && r < n && c >= 0 && c < n) m(r, c) = v;
    };
    put(0, 0, -delta(1));
    put(0, 1, eta(1));
    for (int b = 1; 2 * b - 1 < n; ++b) {
        int r = 2 * b - 1; // odd row, paired with r+1
        put(r, r - 1, -eta(2 * b - 1) * delta(2 * b));
        put(r, r, -std::conj(delta(2 * b - 1)) * delta(2 * b));
        put(r, r + 1, -eta(2 * b) * delta(2 * b + 1));
        put(r, r + 2, eta(2 * b) * eta(2 * b + 1));
        put(r + 1, r - 1, eta(2 * b - 1) * eta(2 * b));
        put(r + 1, r, std::conj(delta(2 * b - 1)) * eta(2 * b));
        put(r + 1, r + 1, -std::conj(delta(2 * b)) * delta(2 * b + 1));
        put(r + 1, r + 2, std::conj(delta(2 * b)) * eta(2 * b + 1));
    }
    return m;
}

} // namespace

OperatorMatrix hessenberg(const SchurSequence& s, int n) {
    if (n < 1 || n > s.n_max()) throw IndexOutOfRange("hessenberg order " + std::to_string(n));
    return {hessenberg_body(take_deltas(s, n), n), MatrixKind::hessenberg};
}

OperatorMatrix hessenberg_truncated_u(const SchurSequence& s, int n, Complex u) {
    if (n < 1 || n > s.n_max() + 1)
        throw IndexOutOfRange("hessenberg order " + std::to_string(n));
    check_unimodular(u);
    std::vector<Complex> d = take_deltas(s, n - 1);
    d.push_back(u);
    return {hessenberg_body(d, n), MatrixKind::hessenberg_u};
}

OperatorMatrix cmv(const SchurSequence& s, int n) {
    if (n < 1 || n > s.n_max()) throw IndexOutOfRange("cmv order " + std::to_string(n));
    return {cmv_body(take_deltas(s, n), n), MatrixKind::cmv};
}

OperatorMatrix cmv_truncated_u(const SchurSequence& s, int n, Complex u) {
    if (n < 1 || n > s.n_max() + 1) throw IndexOutOfRange("cmv order " + std::to_string(n));
    check_unimodular(u);
    std::vector<Complex> d = take_deltas(s, n - 1);
    d.push_back(u);
    return {cmv_body(d, n), MatrixKind::cmv_u};
}

std::pair<OperatorMatrix, OperatorMatrix> cmv_factor(const SchurSequence& s, int n) {
    if (n < 1 || n > s.n_max()) throw IndexOutOfRange("cmv order " + std::to_string(n));
    Eigen::MatrixXcd even = Eigen::MatrixXcd::Zero(n, n);
    Eigen::MatrixXcd odd = Eigen::MatrixXcd::Zero(n, n);
    auto put = [n](Eigen::MatrixXcd& m, int r, int c, Complex v) {
        if (r >= 0 && r < n && c >= 0 && c < n) m(r, c) = v;
    };
    auto reflection = [&](Eigen::MatrixXcd& m, int top, int k) {
        Complex d = s.delta(k);
        double eta = s.eta(k);
        put(m, top, top, -d);
        put(m, top, top + 1, eta);
        put(m, top + 1, top, eta);
        put(m, top + 1, top + 1, std::conj(d));
    };
    even(0, 0) = Complex(1.0, 0.0);
    for (int k = 2; k - 1 < n; k += 2) reflection(even, k - 1, k);
    for (int k = 1; k - 1 < n; k += 2) reflection(odd, k - 1, k);
    return {OperatorMatrix{std::move(even), MatrixKind::cmv_factor},
            OperatorMatrix{std::move(odd), MatrixKind::cmv_factor}};
}

OperatorMatrix cmv_transpose_for_ceil_ordering(const SchurSequence& s, int n) {
    OperatorMatrix c = cmv(s, n);
    return {c.mat.transpose(), MatrixKind::cmv_transpose};
}

OperatorMatrix cmv_adjoint(const SchurSequence& s, int n) {
    OperatorMatrix c = cmv(s, n);
    return {c.mat.adjoint(), MatrixKind::cmv_adjoint};
}

OperatorMatrix banded_general(const SchurSequence& s, const GeneratingSequence& ord,
                              int n, const MomentTable& moments) {
    if (n < 1) throw IndexOutOfRange("order must be >= 1");
    std::vector<LaurentPoly> chi;
    chi.reserve(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k)
        chi.push_back(laurent_from_szego(s, ord, k, PolyVariant::orthonormal));

    Eigen::MatrixXcd m(n, n);
    for (int r = 0; r < n; ++r) {
        LaurentPoly zchi = shift_exp(chi[static_cast<std::size_t>(r)], 1);
        for (int c = 0; c < n; ++c)
            m(r, c) = inner_product(zchi, chi[static_cast<std::size_t>(c)], moments);
    }

    // Clamp entries the band theorem proves to vanish; anything larger
    // than 1e-12 out there means an inconsistent moment table.
    for (int r = 0; r < n; ++r) {
        int upper = n - 1; // no constraint when the rule is not closed in range
        try {
            upper = r + band_widths(ord, r).k;
        } catch (const InsufficientLookahead&) {
        }
        int lower = r - band_reach_below(ord, r);
        for (int c = 0; c < n; ++c) {
            if (c >= lower && c <= upper) continue;
            if (std::abs(m(r, c)) > 1e-12)
                throw InvariantViolation("entry (" + std::to_string(r) + "," + std::to_string(c) +
                                         ") outside the band has magnitude " +
                                         std::to_string(std::abs(m(r, c))));
            m(r, c) = Complex(0.0, 0.0);
        }
    }
    return {std::move(m), MatrixKind::banded_general};
}

int diagonal_count(const Eigen::MatrixXcd& m, double tol) {
    int above = 0, below = 0;
    for (int r = 0; r < m.rows(); ++r)
        for (int c = 0; c < m.cols(); ++c)
            if (std::abs(m(r, c)) > tol) {
                above = std::max(above, c - r);
                below = std::max(below, r - c);
            }
    return above + below + 1;
}

} // namespace szegoq
