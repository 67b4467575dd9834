#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "cutcol/graph.hpp"
#include "cutcol/rng.hpp"

namespace cutcol {

// Random weight function on vertex/color pairs, each uniform on [1, 2nq].
// The weight of a coloring is the sum of its pair weights.
struct WeightFunction {
    int n = 0, q = 0;
    std::vector<int> w;  // (v-1)*q + (c-1)

    int at(int v, int c) const { return w[static_cast<size_t>(v - 1) * q + (c - 1)]; }
    int max_total() const {
        // coloring weights never exceed this; the z tables live in [0, 2n^2 q]
        return 2 * n * n * q;
    }
};

inline WeightFunction sample_weights(const Graph& g, int q, Rng& rng) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    WeightFunction wf;
    wf.n = g.n;
    wf.q = q;
    wf.w.resize(static_cast<size_t>(g.n) * q);
    for (auto& x : wf.w) x = static_cast<int>(rng.uniform(1, 2LL * g.n * q));
    return wf;
}

}  // namespace cutcol
