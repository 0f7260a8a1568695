#pragma once

#include <vector>

#include "szegoq/schur.hpp"

namespace szegoq {

/// One published reference row: a node (re, im) and its weight. Rows
/// with im != 0 stand for a conjugate node pair sharing the weight.
struct ReferenceEntry {
    double re;
    double im;
    double weight;
};

/// Reference nodes and weights of the n-point rule (u = 1) for the
/// wrapped-Gaussian measure, as published: tables 1-5 hold n = 10 at
/// q = 0.1, 0.25, 0.5, 0.75, 0.9 to about 6 significant digits,
/// tables 6-10 hold n = 11 at the same q values to 8 decimals.
struct ReferenceTable {
    int index;
    double q;
    int n;
    double node_tol;   // comparison tolerance for nodes
    double weight_tol; // comparison tolerance for weights
    std::vector<ReferenceEntry> rows;
};

const std::vector<ReferenceTable>& reference_tables();

/// Expanded full node/weight lists, sorted by increasing principal
/// argument (matching QuadratureRule order).
struct ExpandedReference {
    std::vector<Complex> nodes;
    std::vector<double> weights;
};
ExpandedReference expand_reference(const ReferenceTable& table);

} // namespace szegoq
