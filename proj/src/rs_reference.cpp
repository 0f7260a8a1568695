#include "szegoq/rs_reference.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>

#include "szegoq/quadrature.hpp"

namespace szegoq {

const std::vector<ReferenceTable>& reference_tables() {
    static const std::vector<ReferenceTable> tables = {
        {1, 0.1, 10, 1e-4, 1e-4,
         {{-0.940400, 0.34007, 0.0459602},
          {-0.531157, 0.847273, 0.0669775},
          {0.0668824, 0.997761, 0.100057},
          {0.624424, 0.781086, 0.133157},
          {0.955949, 0.293533, 0.153848}}},
        {2, 0.25, 10, 1e-4, 1e-4,
         {{-0.922051, 0.387069, 0.0195773},
          {-0.473103, 0.881007, 0.0466391},
          {0.119954, 0.992779, 0.0947585},
          {0.650270, 0.759703, 0.150362},
          {0.959239, 0.282596, 0.188665}}},
        {3, 0.5, 10, 1e-4, 1e-4,
         {{-0.842988, 0.537932, 0.00312009},
          {-0.333209, 0.942853, 0.0207928},
          {0.234605, 0.972091, 0.0737936},
          {0.703537, 0.710659, 0.163017},
          {0.965879, 0.258994, 0.239274}}},
        {4, 0.75, 10, 1e-4, 1e-4,
         {{-0.517559, 0.855648, 0.000196919},
          {0.00961854, 0.999954, 0.00541542},
          {0.467501, 0.883993, 0.0439839},
          {0.801825, 0.597559, 0.158275},
          {0.977622, 0.210369, 0.292128}}},
        {5, 0.9, 10, 1e-4, 1e-4,
         {{0.112467, 0.993655, 0.0000221869},
          {0.475746, 0.879582, 0.000173911},
          {0.734593, 0.678508, 0.0276214},
          {0.904709, 0.426031, 0.146351},
          {0.989421, 0.145076, 0.324221}}},
        {6, 0.1, 11, 1e-5, 1e-6,
         {{-1.0, 0.0, 0.03873768},
          {-0.814432, 0.580259, 0.04723999},
          {-0.355944, 0.934507, 0.06942034},
          {0.199254, 0.979948, 0.09817396},
          {0.68359, 0.729866, 0.12485883},
          {0.963208, 0.268755, 0.14093668}}},
        {7, 0.25, 11, 1e-5, 1e-6,
         {{-1.0, 0.0, 0.01403402},
          {-0.778821, 0.627246, 0.00025263},
          {-0.301023, 0.953617, 0.05384075},
          {0.243118, 0.969997, 0.09739723},
          {0.70384, 0.710359, 0.14346753},
          {0.965731, 0.259545, 0.17367845}}},
        {8, 0.5, 11, 1e-5, 1e-6,
         {{-1.0, 0.0, 0.00105402},
          {-0.681725, 0.731608, 0.00606822},
          {-0.178603, 0.983921, 0.02834884},
          {0.335240, 0.942133, 0.08185750},
          {0.745084, 0.666970, 0.16052782},
          {0.970795, 0.239909, 0.22291291}}},
        {9, 0.75, 11, 1e-5, 1e-6,
         {{-1.0, 0.0, 0.00000331},
          {-0.400355, 0.91636, 0.00047627},
          {0.0972837, 0.995257, 0.00836960},
          {0.517853, 0.85547, 0.05348059},
          {0.821232, 0.570595, 0.16811708},
          {0.979848, 0.199745, 0.29160532}}},
        {10, 0.9, 11, 1e-5, 1e-6,
         {{-1.0, 0.0, 0.00000000058},
          {0.149722, 0.988728, 0.00005234},
          {0.498881, 0.866671, 0.00328985},
          {0.746631, 0.665238, 0.04447931},
          {0.909098, 0.416581, 0.21730036},
          {0.989911, 0.141688, 0.46353159}}},
    };
    return tables;
}

ExpandedReference expand_reference(const ReferenceTable& table) {
    std::vector<Complex> nodes;
    std::vector<double> weights;
    for (const ReferenceEntry& row : table.rows) {
        if (row.im == 0.0) {
            nodes.emplace_back(row.re, 0.0);
            weights.push_back(row.weight);
        } else {
            nodes.emplace_back(row.re, row.im);
            weights.push_back(row.weight);
            nodes.emplace_back(row.re, -row.im);
            weights.push_back(row.weight);
        }
    }
    std::vector<std::size_t> order(nodes.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return node_sort_angle(nodes[a]) < node_sort_angle(nodes[b]);
    });
    ExpandedReference out;
    for (std::size_t i : order) {
        out.nodes.push_back(nodes[i]);
        out.weights.push_back(weights[i]);
    }
    return out;
}

} // namespace szegoq
