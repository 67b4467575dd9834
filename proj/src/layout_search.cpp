#include "cutcol/layout_search.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <stdexcept>
#include <vector>

namespace cutcol {

static LinearLayout exact_layout(const Graph& g) {
    int n = g.n;
    std::vector<uint32_t> nbr(n, 0);  // 0-based adjacency masks
    for (auto [u, v] : g.edges) {
        nbr[u - 1] |= 1u << (v - 1);
        nbr[v - 1] |= 1u << (u - 1);
    }
    size_t total = size_t(1) << n;
    std::vector<int16_t> cut(total), best(total);
    cut[0] = 0;
    best[0] = 0;
    for (size_t mask = 1; mask < total; ++mask) {
        int low = std::countr_zero(static_cast<uint32_t>(mask));
        size_t rest = mask & (mask - 1);
        int inside = std::popcount(nbr[low] & static_cast<uint32_t>(rest));
        cut[mask] = static_cast<int16_t>(cut[rest] + g.degree(low + 1) - 2 * inside);
        int16_t m = std::numeric_limits<int16_t>::max();
        for (uint32_t s = static_cast<uint32_t>(mask); s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            m = std::min(m, best[mask ^ (size_t(1) << v)]);
        }
        best[mask] = std::max(cut[mask], m);
    }
    // reconstruct backwards, smallest vertex id on ties
    LinearLayout pi;
    pi.order.assign(n, 0);
    size_t mask = total - 1;
    for (int i = n - 1; i >= 0; --i) {
        int pick = -1;
        int16_t m = std::numeric_limits<int16_t>::max();
        for (uint32_t s = static_cast<uint32_t>(mask); s;) {
            int v = std::countr_zero(s);
            s &= s - 1;
            int16_t c = best[mask ^ (size_t(1) << v)];
            if (c < m) { m = c; pick = v; }
        }
        pi.order[i] = pick + 1;
        mask ^= size_t(1) << pick;
    }
    return pi;
}

static LinearLayout greedy_layout(const Graph& g) {
    int n = g.n;
    LinearLayout pi;
    std::vector<char> placed(n + 1, 0);
    int cur_cut = 0;
    for (int step = 0; step < n; ++step) {
        int pick = -1, pick_cut = std::numeric_limits<int>::max();
        for (int v = 1; v <= n; ++v) {
            if (placed[v]) continue;
            int inside = 0;
            for (int u : g.neighbors(v)) inside += placed[u];
            int c = cur_cut + g.degree(v) - 2 * inside;
            if (c < pick_cut) { pick_cut = c; pick = v; }
        }
        placed[pick] = 1;
        cur_cut = pick_cut;
        pi.order.push_back(pick);
    }
    return pi;
}

LinearLayout find_layout(const Graph& g, LayoutStrategy strategy, int exact_limit) {
    if (strategy == LayoutStrategy::Exact) {
        if (g.n > exact_limit || g.n > 20)
            throw std::invalid_argument("exact layout search refused above the node limit");
        if (g.n == 0) return {};
        return exact_layout(g);
    }
    if (g.n == 0) return {};
    return greedy_layout(g);
}

}  // namespace cutcol
