#pragma once

#include <vector>

#include "szegoq/opmatrix.hpp"

namespace szegoq {

/// Eigenvalues with the first components of the unit-norm eigenvectors
/// (the only eigenvector data the weight formulas need) and the
/// per-pair residuals ||A v - lambda v||_2.
struct EigenResult {
    std::vector<Complex> values;
    std::vector<Complex> first_components;
    std::vector<double> residuals;
};

/// Full dense eigensolve. Eigenvector phases are arbitrary; only
/// |first component| is contract-bearing.
EigenResult eigen_full(const OperatorMatrix& m);

/// Roots of c_0 + c_1 z + ... + c_d z^d as eigenvalues of the
/// companion matrix. Leading zeros in c are rejected.
std::vector<Complex> companion_roots(const std::vector<Complex>& coeffs);

} // namespace szegoq
