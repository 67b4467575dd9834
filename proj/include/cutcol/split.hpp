#pragma once

#include <vector>

#include "cutcol/decomposition.hpp"
#include "cutcol/graph.hpp"

namespace cutcol {

// Bag state after a prefix of decomposition events. L holds the bag vertices
// with at most half their incident edges introduced, R the rest; cap is
// l^i_v = d_{E_i}(v) on the L side and r^i_v = d(v) - d_{E_i}(v) on the R side.
struct SplitInfo {
    int bag_index = 0;                 // number of events applied
    std::vector<int> bag;              // vertex ids in introduction order
    std::vector<char> in_L;            // parallel to bag
    std::vector<int> cap;              // parallel to bag
    std::vector<int> intro_rank;       // per vertex, 1-based order of its IV event (0 = not yet)
    std::vector<int> d_intro;          // per vertex, edges introduced so far
    std::vector<char> introduced, forgotten;

    bool is_L(int v) const;
    int bag_pos(int v) const;          // -1 if absent
};

// Recomputed from scratch by replaying the first i events.
SplitInfo split_bag(const Graph& g, const NicePathDecomposition& npd, int i);

// Incremental walker over the event stream; agrees with split_bag at every
// prefix (checked in tests).
class BagTracker {
public:
    BagTracker(const Graph& g, const NicePathDecomposition& npd);

    const SplitInfo& state() const { return s_; }
    bool done() const { return next_ == npd_->events.size(); }
    const Event& next_event() const { return npd_->events[next_]; }
    void advance();

private:
    const Graph* g_;
    const NicePathDecomposition* npd_;
    SplitInfo s_;
    size_t next_ = 0;
    int intro_count_ = 0;
};

}  // namespace cutcol
