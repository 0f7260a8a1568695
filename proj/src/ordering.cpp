#include "szegoq/ordering.hpp"

#include <algorithm>

namespace szegoq {

GeneratingSequence::GeneratingSequence(std::vector<int> steps)
    : steps_(std::move(steps)) {
    if (steps_.empty())
        throw DomainError("generating sequence needs at least one step");
    for (int v : steps_)
        if (v != 0 && v != 1)
            throw DomainError("steps must be 0 or 1");
}

GeneratingSequence GeneratingSequence::balanced(BalancedKind kind, int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    std::vector<int> st(static_cast<std::size_t>(n_max));
    for (int n = 1; n <= n_max; ++n) {
        // floor_half: p(n) = floor(n/2), steps 0,1,0,1,...
        // ceil_half:  p(n) = floor((n+1)/2), steps 1,0,1,0,...
        int even = (n % 2 == 0) ? 1 : 0;
        st[static_cast<std::size_t>(n - 1)] =
            (kind == BalancedKind::floor_half) ? even : 1 - even;
    }
    return GeneratingSequence(std::move(st));
}

GeneratingSequence GeneratingSequence::polynomial(int n_max) {
    if (n_max < 1) throw DomainError("n_max must be >= 1");
    return GeneratingSequence(std::vector<int>(static_cast<std::size_t>(n_max), 0));
}

GeneratingSequence GeneratingSequence::parse(const std::string& spec, int n_max) {
    if (spec == "balanced0") return balanced(BalancedKind::floor_half, n_max);
    if (spec == "balanced1") return balanced(BalancedKind::ceil_half, n_max);
    if (spec == "poly") return polynomial(n_max);
    std::vector<int> st;
    st.reserve(spec.size());
    for (char c : spec) {
        if (c != '0' && c != '1')
            throw ParseError("ordering spec must be digits 0/1 or an alias, got \"" + spec + "\"");
        st.push_back(c - '0');
    }
    if (st.empty()) throw ParseError("empty ordering spec");
    return GeneratingSequence(std::move(st));
}

int GeneratingSequence::s(int n) const {
    if (n == 0) return 0;
    if (n < 0 || n > n_max())
        throw IndexOutOfRange("s(" + std::to_string(n) + ") outside 0.." + std::to_string(n_max()));
    return steps_[static_cast<std::size_t>(n - 1)];
}

int GeneratingSequence::p(int n) const {
    if (n == -1 || n == 0) return 0;
    if (n < -1 || n > n_max())
        throw IndexOutOfRange("p(" + std::to_string(n) + ") outside -1.." + std::to_string(n_max()));
    int acc = 0;
    for (int m = 1; m <= n; ++m) acc += steps_[static_cast<std::size_t>(m - 1)];
    return acc;
}

GeneratingSequence GeneratingSequence::dual() const {
    std::vector<int> st(steps_.size());
    std::transform(steps_.begin(), steps_.end(), st.begin(), [](int v) { return 1 - v; });
    return GeneratingSequence(std::move(st));
}

std::string GeneratingSequence::to_string() const {
    std::string out;
    out.reserve(steps_.size());
    for (int v : steps_) out.push_back(static_cast<char>('0' + v));
    return out;
}

namespace {

// Shared scan for both width rules. `one_up` is the step value that
// terminates the upward scan (0 for the forward operator, 1 for the
// inverse one).
int upward_reach(const GeneratingSequence& ord, int n, int stop_value) {
    if (n < 0 || n > ord.n_max()) throw IndexOutOfRange("row index " + std::to_string(n));
    for (int k = 1;; ++k) {
        if (n + k > ord.n_max())
            throw InsufficientLookahead("pattern above row " + std::to_string(n) +
                                        " not closed within " + std::to_string(ord.n_max()) + " steps");
        if (ord.s(n + k) == stop_value) return k;
    }
}

int downward_reach(const GeneratingSequence& ord, int n, int stop_value) {
    if (n < 0 || n > ord.n_max()) throw IndexOutOfRange("row index " + std::to_string(n));
    // Orthogonality below chi_0 is vacuous, so the reach never exceeds n.
    for (int t = 1; t < n; ++t)
        if (ord.s(n - t) == stop_value) return t;
    return n;
}

} // namespace

BandWidths band_widths(const GeneratingSequence& ord, int n) {
    return {upward_reach(ord, n, 0), downward_reach(ord, n, 1)};
}

int band_reach_below(const GeneratingSequence& ord, int n) {
    return downward_reach(ord, n, 1);
}

BandWidths inverse_band_widths(const GeneratingSequence& ord, int n) {
    return {upward_reach(ord, n, 1), downward_reach(ord, n, 0)};
}

bool is_minimal_five_diagonal(const GeneratingSequence& ord) {
    if (ord.n_max() < 4) throw DomainError("need at least 4 steps to classify");
    for (int n = 2; n <= ord.n_max(); ++n)
        if (ord.s(n) == ord.s(n - 1)) return false;
    return true;
}

} // namespace szegoq
