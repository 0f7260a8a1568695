#pragma once

#include <complex>
#include <random>
#include <vector>

#include "szegoq/ordering.hpp"
#include "szegoq/schur.hpp"

namespace szegoq::testing {

inline std::mt19937& rng() {
    static std::mt19937 gen(0x5ee9);
    return gen;
}

inline Complex random_unit() {
    std::uniform_real_distribution<double> angle(-3.14159265358979, 3.14159265358979);
    return std::polar(1.0, angle(rng()));
}

inline std::vector<Complex> random_deltas(int count, double min_mod = 0.0,
                                          double max_mod = 0.9) {
    std::uniform_real_distribution<double> mod(min_mod, max_mod);
    std::vector<Complex> d(static_cast<std::size_t>(count));
    for (auto& v : d) v = std::polar(mod(rng()), std::arg(random_unit()));
    return d;
}

inline SchurSequence random_schur(int count, double max_mod = 0.9) {
    return SchurSequence(random_deltas(count, 0.0, max_mod));
}

/// Random step list with runs of equal steps capped (long runs with
/// small parameters make the degenerate-case divisions ill-conditioned
/// and prove nothing extra).
inline GeneratingSequence random_ordering(int length, int max_run = 3) {
    std::bernoulli_distribution bit(0.5);
    std::vector<int> steps(static_cast<std::size_t>(length));
    int run = 0;
    for (int i = 0; i < length; ++i) {
        int v = bit(rng()) ? 1 : 0;
        if (i > 0 && v == steps[static_cast<std::size_t>(i - 1)] && run >= max_run)
            v = 1 - v;
        run = (i > 0 && v == steps[static_cast<std::size_t>(i - 1)]) ? run + 1 : 1;
        steps[static_cast<std::size_t>(i)] = v;
    }
    return GeneratingSequence(std::move(steps));
}

} // namespace szegoq::testing
