#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "szegoq/errors.hpp"

namespace szegoq {

/// Band reach of one row of the multiplication-operator matrix:
/// z*chi_n lives in span{chi_{n-t}, ..., chi_{n+k}}.
struct BandWidths {
    int k; // reach above the diagonal
    int t; // reach below the diagonal
};

enum class BalancedKind { floor_half, ceil_half };

/// An ordering of the Laurent space: nondecreasing p(n) with steps
/// s(n) = p(n) - p(n-1) in {0,1}, fixing when negative powers enter
/// the basis. Stored as the finite step list s(1..N); p(0) = 0 and
/// s(0) = 0 are implicit. Immutable after construction.
class GeneratingSequence {
public:
    explicit GeneratingSequence(std::vector<int> steps);

    static GeneratingSequence balanced(BalancedKind kind, int n_max);
    static GeneratingSequence polynomial(int n_max); // all steps 0

    /// Accepts "0101...", or the aliases "balanced0" (p = floor(n/2)),
    /// "balanced1" (p = floor((n+1)/2)) and "poly" (all zeros), the
    /// aliases expanded to n_max steps.
    static GeneratingSequence parse(const std::string& spec, int n_max);

    int n_max() const noexcept { return static_cast<int>(steps_.size()); }

    /// s(n) for 0 <= n <= N, with s(0) = 0.
    int s(int n) const;
    /// p(n) for -1 <= n <= N, with p(-1) = p(0) = 0.
    int p(int n) const;
    /// q(n) = n - p(n).
    int q(int n) const { return n - p(n); }
    /// lambda(n) = p(n) - p(n-2) in {0,1,2}.
    int lambda(int n) const { return p(n) - p(n - 2); }

    /// Ordering with steps flipped 0 <-> 1; generates the dual family.
    GeneratingSequence dual() const;

    bool operator==(const GeneratingSequence&) const = default;

    std::string to_string() const;

private:
    std::vector<int> steps_;
};

/// Row reach (k, t) of z*chi_n per the structure theorem: k = 1 when
/// s(n+1) = 0, otherwise the distance to the next 0 step; t = 1 when
/// s(n-1) = 1, otherwise the distance back to the previous 1 step,
/// capped at n since nothing lies below chi_0. Throws
/// InsufficientLookahead when the forward pattern is not closed
/// within the stored steps.
BandWidths band_widths(const GeneratingSequence& ord, int n);

/// Dual rule (0 and 1 exchanged) governing the matrix of the inverse
/// multiplication operator.
BandWidths inverse_band_widths(const GeneratingSequence& ord, int n);

/// The downward reach t(n) alone; total on 0..N (t(0) = 0) since it
/// needs no lookahead.
int band_reach_below(const GeneratingSequence& ord, int n);

/// True iff the steps alternate strictly, i.e. the ordering is one of
/// the two balanced ones; these are exactly the orderings whose
/// operator matrix is five-diagonal. Requires at least 4 steps.
bool is_minimal_five_diagonal(const GeneratingSequence& ord);

} // namespace szegoq
