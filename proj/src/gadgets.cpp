#include "cutcol/gadgets.hpp"

#include <algorithm>
#include <stdexcept>

namespace cutcol {

CrossoverGadget build_hcol() {
    // terminals 1..4 (u, v, u', v'), boundary mids 5..8 (NW, NE, SE, SW),
    // inner 4-cycle 9..12 (N, E, S, W corners), center 13
    std::vector<std::pair<int, int>> es = {
        {1, 5}, {5, 2}, {2, 6}, {6, 3}, {3, 7}, {7, 4}, {4, 8}, {8, 1},  // boundary
        {9, 10}, {10, 11}, {11, 12}, {12, 9},                            // inner cycle
        {13, 9}, {13, 10}, {13, 11}, {13, 12},                           // center spokes
        {5, 9}, {6, 10}, {7, 11}, {8, 12},                               // mid to inner
        {1, 12}, {2, 9}, {3, 10}, {4, 11},                               // terminal to inner
    };
    CrossoverGadget h;
    h.g = Graph(13, std::move(es));
    return h;
}

CliqueChain chain_of_cliques(int t, int q) {
    if (t < 1 || q < 2) throw std::invalid_argument("need t >= 1, q >= 2");
    CliqueChain ch;
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < t; ++i) {
        int base = i * q;  // clique i occupies base+1 .. base+q; terminal = base+1
        ch.terminals.push_back(base + 1);
        std::vector<int> inner;
        for (int a = 1; a <= q; ++a) {
            if (a > 1) inner.push_back(base + a);
            for (int b = a + 1; b <= q; ++b) es.emplace_back(base + a, base + b);
        }
        ch.inner.push_back(std::move(inner));
        if (i > 0)
            for (int w : ch.inner[i - 1]) es.emplace_back(ch.terminals[i], w);
    }
    ch.g = Graph(t * q, std::move(es));
    return ch;
}

ListColoringInstance path_gadget(const std::vector<int>& c, int q) {
    int m = static_cast<int>(c.size());
    if (q < 3) throw std::invalid_argument("path gadget needs q >= 3");
    if (m < 1) throw std::invalid_argument("need at least one blocked position");
    for (int ck : c)
        if (ck < 1 || ck > q) throw std::invalid_argument("blocked color out of range");

    ListColoringInstance inst;
    auto mask = [](std::initializer_list<int> cols) {
        uint32_t m0 = 0;
        for (int col : cols) m0 |= 1u << (col - 1);
        return m0;
    };
    auto smallest_not = [&](std::initializer_list<int> avoid) {
        for (int col = 1; col <= q; ++col) {
            bool ok = true;
            for (int a : avoid)
                if (a == col) ok = false;
            if (ok) return col;
        }
        throw std::logic_error("palette exhausted");
    };

    if (m == 1) {
        // single forced-color vertex: avoiding d is possible iff d != c_1
        inst.g = Graph(1, {});
        inst.lists = {0, mask({c[0]})};
        inst.roles.resize(2);
        inst.roles[1] = {VertexRole::PathPi, 0, 0, 1};
        inst.distinguished = {1};
        return inst;
    }

    // "pending" signal colors: e_k is the waiting color of position k, E_k the
    // post-hit escape, chosen so a forced chain survives exactly until some
    // pi_k takes c_k
    std::vector<int> e(m + 1), E(m + 1);
    e[m] = smallest_not({c[m - 1]});
    for (int k = m - 1; k >= 1; --k)
        e[k] = e[k + 1] != c[k - 1] ? e[k + 1] : smallest_not({c[k - 1]});
    for (int k = 2; k <= m; ++k) E[k] = smallest_not({c[k - 1], e[k]});

    std::vector<uint32_t> lists{0};
    std::vector<VertexRole> roles{{}};
    std::vector<std::pair<int, int>> es;
    std::vector<int> distinguished;
    int last = 0;
    auto add = [&](uint32_t lst, VertexRole role) {
        lists.push_back(lst);
        roles.push_back(role);
        int id = static_cast<int>(lists.size()) - 1;
        if (last) es.emplace_back(last, id);
        last = id;
        return id;
    };

    for (int k = 1; k <= m; ++k) {
        uint32_t lst = k == 1 ? mask({c[0], e[1]}) : mask({c[k - 1], e[k], E[k]});
        distinguished.push_back(add(lst, {VertexRole::PathPi, 0, 0, k}));
        if (k < m) {
            if (e[k] == e[k + 1]) {
                add(mask({e[k], E[k + 1]}), {VertexRole::PathConn, 0, 0, k});
            } else {
                // recode the waiting color before the next position
                add(mask({e[k], e[k + 1]}), {VertexRole::PathConn, 0, 0, k});
                add(mask({e[k + 1], E[k + 1]}), {VertexRole::PathConn, 0, 0, k});
            }
        }
    }
    int omega = smallest_not({e[m]});
    add(mask({e[m], omega}), {VertexRole::PathConn, 0, 0, m});
    add(mask({omega}), {VertexRole::PathEnd, 0, 0, 0});

    inst.g = Graph(static_cast<int>(lists.size()) - 1, std::move(es));
    inst.lists = std::move(lists);
    inst.roles = std::move(roles);
    inst.distinguished = std::move(distinguished);
    return inst;
}

}  // namespace cutcol
