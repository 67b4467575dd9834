#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "cutcol/decomposition.hpp"
#include "cutcol/gf.hpp"
#include "cutcol/graph.hpp"
#include "cutcol/split.hpp"
#include "cutcol/weights.hpp"

namespace cutcol {

// Sparse DP table for one bag: values T^z[d, e] mod p keyed by
// z * index_size + packed, where packed is the mixed-radix encoding of the
// per-vertex indices (out-degree for L vertices, monomial exponent for R) in
// bag order, least-significant digit first. Absent keys are zero. z ranges
// over [0, 2 n^2 q] implicitly; only nonzero entries are stored.
struct TTable {
    uint32_t p = 0;
    std::vector<int> bag;    // vertex ids, introduction order
    std::vector<char> in_L;  // parallel
    std::vector<int> cap;    // parallel: l^i_v or r^i_v
    uint64_t index_size = 1; // prod (cap+1)
    std::vector<std::pair<uint64_t, uint32_t>> entries;  // sorted by key

    uint64_t stride_of(size_t pos) const;
    // digits of one packed index, bag order
    std::vector<int> unpack(uint64_t packed) const;
};

// Single transition of the table along one decomposition event.
// split_prev/split_next are the bag states before and after the event.
TTable dp_transition(const TTable& prev, const Event& ev, const SplitInfo& split_prev,
                     const SplitInfo& split_next, const WeightFunction& w, int q);

// Steps the DP across a whole decomposition, exposing each bag's table
// (used by the table-agreement checks).
class RandRunner {
public:
    RandRunner(const Graph& g, const NicePathDecomposition& npd, int q,
               const WeightFunction& w, uint32_t p);

    bool done() const { return tracker_.done(); }
    void step();
    const TTable& table() const { return table_; }
    const SplitInfo& split() const { return tracker_.state(); }
    int bag_index() const { return tracker_.state().bag_index; }

private:
    const Graph* g_;
    int q_;
    WeightFunction w_;
    BagTracker tracker_;
    TTable table_;
};

// P_G(z) mod p for every z with a nonzero stored value (all other z in
// [0, 2 n^2 q] are zero).
std::map<int64_t, uint32_t> compute_PG_all(const Graph& g, const NicePathDecomposition& npd,
                                           int q, const WeightFunction& w, uint32_t p);

struct RandTrial {
    uint64_t subseed = 0;
    uint32_t prime = 0;
    bool nonzero = false;
    int64_t witness_z = -1;
};

struct RandResult {
    bool yes = false;
    std::vector<RandTrial> trials;
};

// Monte Carlo decision: per trial fresh weights and a fresh random prime in
// [2^30, 2^31); yes iff some trial finds a nonzero P_G(z). Never answers yes
// on an uncolorable graph; false-negative probability decays per trial.
RandResult solve_pathwidth_rand(const Graph& g, const NicePathDecomposition& npd, int q,
                                int trials, uint64_t seed, int jobs = 1);

// Layout front end: converts to the layout-order nice path decomposition,
// then runs the pathwidth solver.
RandResult solve_cutwidth_rand(const Graph& g, const LinearLayout& pi, int q,
                               int trials, uint64_t seed, int jobs = 1);

}  // namespace cutcol
