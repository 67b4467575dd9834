#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutcol/gadgets.hpp"

using namespace cutcol;

TEST_CASE("crossover gadget contract") {
    CrossoverGadget h = build_hcol();
    CHECK(h.g.n == 13);
    CHECK(h.g.m() <= 3 * h.g.n - 6);  // planarity necessary condition

    // enumerate all proper 3-colorings: terminals must pair up, and all nine
    // boundary classes must occur
    std::vector<int> col(h.g.n + 1, 0);
    int classes = 0;
    long long total = 0;
    bool force_ok = true;
    int v = 1;
    while (v >= 1) {
        if (v > h.g.n) {
            ++total;
            if (col[h.u] != col[h.u2] || col[h.v] != col[h.v2]) force_ok = false;
            else classes |= 1 << (3 * (col[h.u] - 1) + (col[h.v] - 1));
            --v;
            continue;
        }
        bool advanced = false;
        for (int c = col[v] + 1; c <= 3; ++c) {
            bool ok = true;
            for (int u : h.g.neighbors(v))
                if (u < v && col[u] == c) { ok = false; break; }
            if (ok) {
                col[v] = c;
                ++v;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            col[v] = 0;
            --v;
        }
    }
    CHECK(total > 0);
    CHECK(force_ok);
    CHECK(classes == (1 << 9) - 1);
}

TEST_CASE("chain of cliques") {
    // 2-chain of triangles: terminals always share a color
    CliqueChain ch = chain_of_cliques(2, 3);
    ColorLists none;
    auto count = count_proper_colorings(ch.g, 3);
    CHECK(!count.is_zero());
    // verify the forcing by enumeration with pinned distinct terminal colors
    ColorLists l = full_lists(ch.g.n, 3);
    l[ch.terminals[0]] = 0b001;
    l[ch.terminals[1]] = 0b010;
    CHECK(count_proper_colorings(ch.g, 3, l).is_zero());
    l[ch.terminals[1]] = 0b001;
    CHECK(!count_proper_colorings(ch.g, 3, l).is_zero());

    // max degree 2(q-1) for t >= 3
    for (int q = 2; q <= 4; ++q) {
        CliqueChain c3 = chain_of_cliques(3, q);
        int dmax = 0;
        for (int v = 1; v <= c3.g.n; ++v) dmax = std::max(dmax, c3.g.degree(v));
        CHECK(dmax == 2 * (q - 1));
    }
    // t = 1 is a plain clique
    CliqueChain one = chain_of_cliques(1, 4);
    CHECK(one.g.m() == 6);
}

// exhaustive contract verification: for every forbidden tuple c and every
// partner tuple d, the gadget (with partners pinned to d) is list-colorable
// iff d != c
static void verify_path_gadget(int m, int q) {
    std::vector<int> c(m, 1);
    for (;;) {
        ListColoringInstance inst = path_gadget(c, q);
        REQUIRE(inst.distinguished.size() == static_cast<size_t>(m));
        CHECK(inst.g.n <= 3 * m + 2);
        std::vector<int> d(m, 1);
        for (;;) {
            // pin the partners by removing d_k from pi_k's list
            ColorLists l = inst.lists;
            bool empty = false;
            for (int k = 0; k < m; ++k) {
                l[inst.distinguished[k]] &= ~(1u << (d[k] - 1));
                if (l[inst.distinguished[k]] == 0) empty = true;
            }
            bool colorable = !empty && !count_proper_colorings(inst.g, q, l).is_zero();
            CHECK(colorable == (d != c));
            size_t k = 0;
            while (k < static_cast<size_t>(m) && ++d[k] > q) d[k++] = 1;
            if (k == static_cast<size_t>(m)) break;
        }
        size_t k = 0;
        while (k < static_cast<size_t>(m) && ++c[k] > q) c[k++] = 1;
        if (k == static_cast<size_t>(m)) break;
    }
}

TEST_CASE("path gadget m=1 q=3") { verify_path_gadget(1, 3); }
TEST_CASE("path gadget m=2 q=3") { verify_path_gadget(2, 3); }
TEST_CASE("path gadget m=3 q=3") { verify_path_gadget(3, 3); }
TEST_CASE("path gadget m=2 q=4") { verify_path_gadget(2, 4); }
TEST_CASE("path gadget m=3 q=4") { verify_path_gadget(3, 4); }
TEST_CASE("path gadget rejects q<3") {
    CHECK_THROWS(path_gadget({1}, 2));
}
