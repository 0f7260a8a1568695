#pragma once

#include <cmath>
#include <complex>
#include <iosfwd>
#include <string>
#include <vector>

#include "szegoq/errors.hpp"

namespace szegoq {

using Complex = std::complex<double>;

enum class SchurValidation {
    positive_definite, // |delta_n| < 1 (default)
    quasi_definite     // |delta_n| != 1
};

enum class SchurSource { explicit_list, rogers_szego, lebesgue };

/// Schur (reflection) parameter sequence delta_1..delta_N; delta_0 = 1
/// is implicit and never stored. All indexing is 1-based to match the
/// forward recurrences. Immutable.
class SchurSequence {
public:
    explicit SchurSequence(std::vector<Complex> delta,
                           SchurValidation mode = SchurValidation::positive_definite,
                           SchurSource source = SchurSource::explicit_list,
                           double q = 0.0);

    /// delta_n = (-1)^n q^(n/2); the wrapped-Gaussian measure on the circle.
    static SchurSequence rogers_szego(double q, int n_max);
    /// All parameters zero (normalized Lebesgue measure).
    static SchurSequence lebesgue(int n_max);

    int n_max() const noexcept { return static_cast<int>(delta_.size()); }
    bool positive_definite() const noexcept { return mode_ == SchurValidation::positive_definite; }
    SchurSource source() const noexcept { return source_; }
    double rs_q() const noexcept { return q_; }

    /// delta_n for 0 <= n <= N (delta_0 = 1).
    Complex delta(int n) const;
    /// eta_n = sqrt(1 - |delta_n|^2), defined for the positive-definite case.
    double eta(int n) const;
    /// 1 - |delta_n|^2; may be negative in the quasi-definite case.
    double eta_sq(int n) const;
    /// e_n = prod_{k<=n} eta_k^2, with e_0 = 1; equals <rho_n, rho_n>.
    double e(int n) const;
    /// l_n = sqrt(e_n).
    double l(int n) const { return std::sqrt(e(n)); }

    const std::vector<Complex>& deltas() const noexcept { return delta_; }

private:
    std::vector<Complex> delta_;
    SchurValidation mode_;
    SchurSource source_;
    double q_;
};

/// Text format: one "re,im" line per delta_n starting at n = 1;
/// '#' starts a comment, blank lines ignored.
SchurSequence read_schur_file(std::istream& in,
                              SchurValidation mode = SchurValidation::positive_definite);
SchurSequence read_schur_file(const std::string& path,
                              SchurValidation mode = SchurValidation::positive_definite);
void write_schur_file(std::ostream& out, const SchurSequence& s);

} // namespace szegoq
