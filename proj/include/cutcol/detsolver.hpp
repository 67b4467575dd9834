#pragma once

#include <cstdint>
#include <vector>

#include "cutcol/gf.hpp"
#include "cutcol/graph.hpp"

namespace cutcol {

// Set of colorings of an ordered vertex set X (the left endpoints of a cut).
// Rows are deduplicated; row order is meaningful (basis selection is
// insertion-order greedy).
struct PartialColoringSet {
    std::vector<int> domain;                   // sorted vertex ids
    std::vector<std::vector<uint8_t>> rows;    // colors in [1, q]
};

// Index set {s : 0 <= s_v <= cap_v} over X sorted by vertex id, enumerated
// lexicographically (first vertex most significant).
struct DegreeSequenceIndex {
    std::vector<int> verts;
    std::vector<int> caps;

    size_t size() const {
        size_t r = 1;
        for (int c : caps) r *= static_cast<size_t>(c) + 1;
        return r;
    }
    static DegreeSequenceIndex for_cut(const Cut& cut);
};

// Row of the factorization matrix L_H: entry at sequence s is
// prod_v x_v^{s_v} mod p, columns in the index order above.
std::vector<uint32_t> lh_row(const std::vector<uint8_t>& x, const DegreeSequenceIndex& idx, Gf f);

// Prune S to rows whose L_H rows form a row basis; the result H-represents S
// and has size at most prod_v (deg_C(v)+1). Deterministic: insertion-order
// scan, first-nonzero-column pivots.
PartialColoringSet reduce(const Cut& cut, const PartialColoringSet& S, Gf f);

// One step of the table transition: extend every row of `prev` by each
// admissible color of v_i (differing from all already-colored neighbors),
// project onto the new cut's left side, deduplicate keeping first occurrence.
PartialColoringSet extend_table(const PartialColoringSet& prev, int v_i, const Graph& g,
                                const Cut& cut_i, int q);

struct DetOptions {
    // Skip the reduce call at cuts where |S| <= this bound (tuning flag;
    // 0 = reduce at every cut).
    size_t skip_reduce_below = 0;
};

struct DetStats {
    size_t max_rows = 0;       // largest table seen
    size_t max_columns = 0;    // largest L_H index space eliminated
    int reduces_run = 0;
    int reduces_skipped = 0;
};

// Deterministic decision of q-colorability along a linear layout (tables over
// cuts, pruned to representative row bases). Exact, no randomness.
bool solve_cutwidth_det(const Graph& g, const LinearLayout& pi, int q,
                        const DetOptions& opts = {}, DetStats* stats = nullptr);

}  // namespace cutcol
