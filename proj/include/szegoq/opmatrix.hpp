#pragma once

#include <utility>

#include <Eigen/Core>

#include "szegoq/measures.hpp"
#include "szegoq/ordering.hpp"
#include "szegoq/schur.hpp"

namespace szegoq {

enum class MatrixKind {
    hessenberg,
    hessenberg_u,
    cmv,
    cmv_u,
    cmv_transpose,
    cmv_adjoint,
    cmv_factor,
    banded_general,
};

const char* to_string(MatrixKind kind);

/// Dense matrix of the multiplication operator in some orthonormal
/// basis; row r holds the expansion of z*chi_r. Band structure is an
/// asserted property, not a storage format.
struct OperatorMatrix {
    Eigen::MatrixXcd mat;
    MatrixKind kind;

    int dim() const noexcept { return static_cast<int>(mat.rows()); }
};

/// Matrix of multiplication by z in the orthonormal polynomial basis:
/// h(i,j) = -conj(delta_j) delta_{i+1} prod_{k=j+1..i} eta_k for j <= i,
/// eta_{i+1} on the superdiagonal (0-based, delta_0 = 1).
OperatorMatrix hessenberg(const SchurSequence& s, int n);

/// Same with delta_n replaced by a unimodular u; the result is unitary
/// and its eigenvalues are quadrature nodes.
OperatorMatrix hessenberg_truncated_u(const SchurSequence& s, int n, Complex u);

/// Five-diagonal representation for the ordering p(n) = floor(n/2).
OperatorMatrix cmv(const SchurSequence& s, int n);

/// Truncation with delta_n -> u; unitary.
OperatorMatrix cmv_truncated_u(const SchurSequence& s, int n, Complex u);

/// The two tridiagonal block-diagonal factors whose product is cmv(s, n):
/// diag(1, R(delta_2), R(delta_4), ...) * diag(R(delta_1), R(delta_3), ...)
/// with R(d) = [[-d, eta], [eta, conj(d)]].
std::pair<OperatorMatrix, OperatorMatrix> cmv_factor(const SchurSequence& s, int n);

/// Representation under the other balanced ordering p(n) = floor((n+1)/2).
OperatorMatrix cmv_transpose_for_ceil_ordering(const SchurSequence& s, int n);

/// Conjugate transpose; represents multiplication by 1/z under the
/// floor-half ordering.
OperatorMatrix cmv_adjoint(const SchurSequence& s, int n);

/// Entry (r, c) = <z chi_r, chi_c> computed through the moment table
/// for an arbitrary ordering. Entries that the band theorem proves to
/// vanish are asserted below 1e-12 and clamped to exact zero.
OperatorMatrix banded_general(const SchurSequence& s, const GeneratingSequence& ord,
                              int n, const MomentTable& moments);

/// Number of nonzero diagonals: max (c-r) reach + max (r-c) reach + 1
/// over entries with magnitude above tol.
int diagonal_count(const Eigen::MatrixXcd& m, double tol = 1e-12);

} // namespace szegoq
