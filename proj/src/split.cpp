#include "cutcol/split.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcol {

bool SplitInfo::is_L(int v) const {
    int p = bag_pos(v);
    if (p < 0) throw std::invalid_argument("vertex not in bag");
    return in_L[p];
}

int SplitInfo::bag_pos(int v) const {
    for (size_t k = 0; k < bag.size(); ++k)
        if (bag[k] == v) return static_cast<int>(k);
    return -1;
}

static void classify(const Graph& g, SplitInfo& s) {
    s.in_L.resize(s.bag.size());
    s.cap.resize(s.bag.size());
    for (size_t k = 0; k < s.bag.size(); ++k) {
        int v = s.bag[k];
        int di = s.d_intro[v];
        bool L = 2 * di <= g.degree(v);
        s.in_L[k] = L;
        s.cap[k] = L ? di : g.degree(v) - di;
    }
}

BagTracker::BagTracker(const Graph& g, const NicePathDecomposition& npd) : g_(&g), npd_(&npd) {
    s_.bag_index = 0;
    s_.intro_rank.assign(g.n + 1, 0);
    s_.d_intro.assign(g.n + 1, 0);
    s_.introduced.assign(g.n + 1, 0);
    s_.forgotten.assign(g.n + 1, 0);
}

void BagTracker::advance() {
    const Event& e = npd_->events.at(next_);
    switch (e.kind) {
        case Event::IntroduceVertex:
            if (s_.introduced[e.u]) throw std::logic_error("vertex introduced twice");
            s_.introduced[e.u] = 1;
            s_.intro_rank[e.u] = ++intro_count_;
            s_.bag.push_back(e.u);
            break;
        case Event::IntroduceEdge:
            if (s_.bag_pos(e.u) < 0 || s_.bag_pos(e.v) < 0)
                throw std::logic_error("edge endpoint not in bag");
            s_.d_intro[e.u]++;
            s_.d_intro[e.v]++;
            break;
        case Event::Forget: {
            int p = s_.bag_pos(e.u);
            if (p < 0) throw std::logic_error("forgetting a vertex not in bag");
            if (s_.d_intro[e.u] != g_->degree(e.u))
                throw std::logic_error("forgetting a vertex with pending edges");
            s_.bag.erase(s_.bag.begin() + p);
            s_.forgotten[e.u] = 1;
            break;
        }
    }
    ++next_;
    s_.bag_index = static_cast<int>(next_);
    classify(*g_, s_);
}

SplitInfo split_bag(const Graph& g, const NicePathDecomposition& npd, int i) {
    if (i < 0 || i > static_cast<int>(npd.events.size()))
        throw std::out_of_range("bag index out of range");
    BagTracker t(g, npd);
    for (int k = 0; k < i; ++k) t.advance();
    SplitInfo s = t.state();
    classify(g, s);
    return s;
}

}  // namespace cutcol
