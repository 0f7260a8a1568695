#pragma once

#include <functional>
#include <vector>

#include "szegoq/eigsolve.hpp"
#include "szegoq/measures.hpp"
#include "szegoq/ordering.hpp"
#include "szegoq/recurrences.hpp"
#include "szegoq/schur.hpp"

namespace szegoq {

enum class QuadratureRoute { hessenberg, cmv, roots };

const char* to_string(QuadratureRoute route);

/// Sort key for nodes: the principal argument in (-pi, pi], with a
/// small band just above -pi folded onto +pi so that a node at -1
/// lands at the same end regardless of rounding jitter in its
/// imaginary part.
double node_sort_angle(Complex z);

/// n-point rule on the unit circle: unimodular nodes sorted by
/// increasing principal argument in (-pi, pi], positive weights
/// summing to mu_0, exact on the Laurent span z^{-(n-1)}..z^{n-1}.
struct QuadratureRule {
    std::vector<Complex> nodes;
    std::vector<double> weights;
    Complex u;
    QuadratureRoute route;
    double mu0 = 1.0;

    int size() const noexcept { return static_cast<int>(nodes.size()); }
};

/// Para-orthogonal polynomial P_n(z, u) = z rho_{n-1} + u rho*_{n-1};
/// monic of degree n with n simple zeros on the circle.
LaurentPoly para_orthogonal(const SchurSequence& s, int n, Complex u);

/// Same zero set expressed in the orthonormal Laurent family of a
/// balanced ordering: R_n(z, u) = eta_n chi_n + tau_n chi_{n-1} with
/// tau_n = u - delta_n (s(n) = 0) or its conjugate (s(n) = 1).
LaurentPoly para_laurent(const SchurSequence& s, const GeneratingSequence& ord,
                         int n, Complex u);

/// Nodes as eigenvalues of the u-truncated Hessenberg / five-diagonal
/// matrix, weights as mu0 * |first eigenvector component|^2.
QuadratureRule rule_via_hessenberg(const SchurSequence& s, int n, Complex u, double mu0 = 1.0);
QuadratureRule rule_via_cmv(const SchurSequence& s, int n, Complex u, double mu0 = 1.0);

/// Nodes as Newton-polished companion roots of P_n(z, u); weights by
/// the reciprocal Christoffel sum 1/sum_k |chi_k(z_j)|^2, cross-checked
/// against the derivative formula (WeightFormulaMismatch on
/// disagreement beyond 1e-9).
QuadratureRule rule_via_roots(const SchurSequence& s, const GeneratingSequence& ord,
                              int n, Complex u, double mu0 = 1.0);

/// sum_j lambda_j f(z_j).
Complex apply(const QuadratureRule& rule, const std::function<Complex(Complex)>& f);

/// sum_j lambda_j z_j^k.
Complex apply_monomial(const QuadratureRule& rule, int k);

struct ExactnessReport {
    double max_error;
    int worst_k;
    double tol;
    bool pass;
};

/// max_k |I_n(z^k) - mu_k| over |k| <= n-1.
ExactnessReport verify_exactness(const QuadratureRule& rule, const MomentTable& moments,
                                 double tol = 1e-9);

} // namespace szegoq
