#pragma once

#include <vector>

#include "szegoq/laurent.hpp"
#include "szegoq/ordering.hpp"
#include "szegoq/schur.hpp"

namespace szegoq {

/// Monic Szego polynomial rho_n with its reversed partner and squared
/// norm e_n = <rho_n, rho_n>.
struct SzegoPair {
    LaurentPoly rho;
    LaurentPoly rho_star;
    double norm_sq;
};

enum class PolyVariant { monic, orthonormal };

/// Forward recurrence rho_n = z rho_{n-1} + delta_n rho*_{n-1},
/// rho*_n = conj(delta_n) z rho_{n-1} + rho*_{n-1}.
SzegoPair szego_monic(const SchurSequence& s, int n);

/// All pairs 0..n in one sweep.
std::vector<SzegoPair> szego_family(const SchurSequence& s, int n);

/// phi_n = rho_n / sqrt(e_n); positive real leading coefficient.
LaurentPoly szego_orthonormal(const SchurSequence& s, int n);

/// The Laurent family for an ordering, from the Szego family:
/// rho_n / z^p(n) when s(n) = 0, rho*_n / z^p(n) when s(n) = 1
/// (orthonormal variant divides by sqrt(e_n)).
LaurentPoly laurent_from_szego(const SchurSequence& s, const GeneratingSequence& ord,
                               int n, PolyVariant variant);

/// Checks that the family for the dual ordering q(n) = n - p(n) equals
/// the substar of the family for p(n), coefficientwise, for both the
/// monic and orthonormal variants.
bool substar_duality_check(const SchurSequence& s, const GeneratingSequence& ord,
                           int n, double tol = 1e-12);

/// Coefficients of one step of the general three-term recurrence
///   phi_n = (mid_const + mid_z z^mid_exp) phi_{n-1}
///           + prev2 * eta_{n-1}^2 * z^prev2_exp * phi_{n-2}.
/// prev2 absorbs the sign; the eta factor stays separate because the
/// orthonormal form uses its first power.
struct GeneralRecurrenceCoeffs {
    Complex mid_const;
    Complex mid_z;
    int mid_exp;
    Complex prev2;
    int prev2_exp;
};

/// Case dispatch over the step triple (s(n), s(n-1), s(n-2)), written
/// out as the eight explicit branches. Throws
/// ZeroSchurParameterInDegenerateCase when s(n-2) = s(n-1) and
/// delta_{n-1} = 0.
GeneralRecurrenceCoeffs three_term_coeffs(const std::vector<Complex>& delta,
                                          const GeneratingSequence& ord, int n);

/// Same coefficients from the condensed A..E product form; kept as an
/// independent route and cross-checked against the explicit branches.
GeneralRecurrenceCoeffs three_term_coeffs_condensed(const std::vector<Complex>& delta,
                                                    const GeneratingSequence& ord, int n);

/// phi_n (or chi_n) computed purely by the three-term recurrence with
/// initial conditions phi_0 = 1, phi_1 = K_1 + z^(1-2s(1)).
LaurentPoly three_term_general(const SchurSequence& s, const GeneratingSequence& ord,
                               int n, PolyVariant variant);

/// Three-term run on an arbitrary parameter list (|delta_k| != 1, no
/// positivity assumed). Returns phi_n, the polynomial F_n extracted
/// from N_n = z^p(n) phi_n, and the largest coefficient residual of
/// the forward (Szego-shaped) identities satisfied by the F_k.
struct RecurrenceWithoutOrthogonality {
    LaurentPoly phi;
    LaurentPoly f;
    double forward_residual;
};
RecurrenceWithoutOrthogonality recurrence_without_orthogonality(
    const std::vector<Complex>& delta, const GeneratingSequence& ord, int n);

/// Reconstructs the moment functional from the parameters (exact
/// quadrature bootstrap) and checks orthogonality of the
/// recurrence-generated family against it.
struct FavardReport {
    int n_max;
    double max_off_diagonal;
    double min_diagonal;
    bool pass;
};
FavardReport favard_verify(const std::vector<Complex>& delta, const GeneratingSequence& ord,
                           int n_max, double mu0, double tol = 1e-10);

/// Gaussian binomial coefficient [n j]_q.
double q_binomial(int n, int j, double q);

/// Closed-form monic Laurent polynomial for the wrapped-Gaussian
/// measure (ordering p(n) = floor((n+1)/2)), via the stable
/// coefficient recursions.
LaurentPoly rs_laurent_explicit(double q, int n);

/// Values chi_0(z)..chi_n(z) of the orthonormal Laurent family at a
/// point, by the forward recurrence on values.
std::vector<Complex> orthonormal_values_at(const SchurSequence& s,
                                           const GeneratingSequence& ord, int n, Complex z);

/// chi_n(z) and chi_n'(z) together.
struct ValueDeriv {
    Complex value;
    Complex deriv;
};
ValueDeriv orthonormal_value_deriv_at(const SchurSequence& s, const GeneratingSequence& ord,
                                      int n, Complex z);

} // namespace szegoq
