#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "cutcol/oracle.hpp"
#include "cutcol/randsolver.hpp"

using namespace cutcol;

static LinearLayout ident(int n) {
    LinearLayout pi;
    for (int i = 1; i <= n; ++i) pi.order.push_back(i);
    return pi;
}

TEST_CASE("sample_weights ranges and determinism") {
    Graph g = path_graph(3);
    Rng r1(99), r2(99);
    WeightFunction a = sample_weights(g, 2, r1);
    WeightFunction b = sample_weights(g, 2, r2);
    CHECK(a.w == b.w);
    CHECK(a.w.size() == 6);
    for (int x : a.w) {
        CHECK(x >= 1);
        CHECK(x <= 12);
    }
    Graph one(1, {});
    Rng r3(5);
    WeightFunction c = sample_weights(one, 1, r3);
    CHECK(c.w.size() == 1);
    CHECK(c.w[0] >= 1);
    CHECK(c.w[0] <= 2);
}

TEST_CASE("split_bag examples") {
    // freshly introduced vertex: in L with cap 0
    Graph e1(2, {{1, 2}});
    auto npd = layout_to_nice_decomposition(e1, ident(2));
    SplitInfo s1 = split_bag(e1, npd, 1);
    CHECK(s1.bag == std::vector<int>{1});
    CHECK(s1.in_L[0]);
    CHECK(s1.cap[0] == 0);

    // degree-2 vertex with both edges introduced: R with cap 0
    Graph p3 = path_graph(3);
    auto np3 = layout_to_nice_decomposition(p3, ident(3));
    // events: IV1 IV2 IE12 FV1 IV3 IE23 FV2 FV3 ; after IE23 vertex 2 has 2/2
    int idx = 0;
    for (size_t k = 0; k < np3.events.size(); ++k)
        if (np3.events[k].kind == Event::IntroduceEdge && np3.events[k].u == 2) idx = static_cast<int>(k) + 1;
    SplitInfo s2 = split_bag(p3, np3, idx);
    int p = s2.bag_pos(2);
    REQUIRE(p >= 0);
    CHECK(!s2.in_L[p]);
    CHECK(s2.cap[p] == 0);

    // degree-3 vertex with exactly 1 edge introduced stays in L
    Graph star(4, {{1, 2}, {1, 3}, {1, 4}});
    NicePathDecomposition h;
    h.events = {Event::iv(1), Event::iv(2), Event::ie(1, 2)};
    SplitInfo s3 = split_bag(star, h, 3);
    CHECK(s3.is_L(1));
    CHECK(s3.cap[s3.bag_pos(1)] == 1);
}

TEST_CASE("incremental tracker agrees with split_bag") {
    Rng rng(17);
    for (int it = 0; it < 20; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 5));
        std::vector<std::pair<int, int>> es;
        for (int v = 2; v <= n; ++v) es.emplace_back(static_cast<int>(rng.uniform(1, v - 1)), v);
        Graph g(n, es);
        auto npd = random_nice_decomposition(g, rng);
        BagTracker t(g, npd);
        for (int i = 0; i <= static_cast<int>(npd.events.size()); ++i) {
            SplitInfo fresh = split_bag(g, npd, i);
            CHECK(fresh.bag == t.state().bag);
            CHECK(fresh.cap == t.state().cap);
            CHECK(std::equal(fresh.in_L.begin(), fresh.in_L.end(), t.state().in_L.begin()));
            if (i < static_cast<int>(npd.events.size())) t.advance();
        }
    }
}

TEST_CASE("dp base cases") {
    Graph e1(2, {{1, 2}});
    auto npd = layout_to_nice_decomposition(e1, ident(2));
    Rng rng(1);
    WeightFunction w = sample_weights(e1, 2, rng);
    RandRunner run(e1, npd, 2, w, 1000003);
    // leftmost: T^0[(),()] = 1
    CHECK(run.table().entries == std::vector<std::pair<uint64_t, uint32_t>>{{0, 1}});
    run.step();  // IV 1
    CHECK(run.table().entries == std::vector<std::pair<uint64_t, uint32_t>>{{0, 1}});
    CHECK(run.table().bag == std::vector<int>{1});
}

TEST_CASE("single edge full run matches stated example") {
    Graph e1(2, {{1, 2}});
    auto npd = layout_to_nice_decomposition(e1, ident(2));
    WeightFunction w;
    w.n = 2;
    w.q = 2;
    w.w = {1, 5, 7, 2};
    uint32_t p = 1000003;
    auto pg = compute_PG_all(e1, npd, 2, w, p);
    // oracle says P(3) = -1, and the mod-p table must agree everywhere
    auto oracle = eval_PG_all_bruteforce(e1, 2, w);
    CHECK(pg.count(3) == 1);
    CHECK(pg[3] == p - 1);
    for (auto& [z, val] : oracle) CHECK(pg[z] == val.mod_u32(p));
    for (auto& [z, val] : pg) {
        auto it = oracle.find(z);
        bool matches = it != oracle.end() ? it->second.mod_u32(p) == val : val == 0;
        CHECK(matches);
    }
}

// exhaustive table agreement on small random graphs and random decomposition
// orders; this exercises every introduce-edge subcase including the L->R
// endpoint flips
TEST_CASE("table agreement with the literal oracle") {
    Rng rng(23);
    int bags_checked = 0;
    for (int it = 0; it < 12; ++it) {
        int n = 2 + static_cast<int>(rng.uniform(0, 3));  // up to 5 vertices
        std::vector<std::pair<int, int>> es;
        for (int v = 2; v <= n; ++v) es.emplace_back(static_cast<int>(rng.uniform(1, v - 1)), v);
        for (int u = 1; u <= n; ++u)
            for (int v = u + 1; v <= n; ++v) {
                bool have = false;
                for (auto& e : es) have |= e == std::make_pair(u, v);
                if (!have && rng.uniform(0, 2) == 0) es.emplace_back(u, v);
            }
        Graph g(n, es);
        int q = 2 + static_cast<int>(rng.uniform(0, 1));
        auto npd = random_nice_decomposition(g, rng);
        WeightFunction w = sample_weights(g, q, rng);
        uint32_t p = 1000003;
        RandRunner run(g, npd, q, w, p);
        while (!run.done()) {
            run.step();
            ++bags_checked;
            const TTable& t = run.table();
            auto oracle = oracle_table_all(g, npd, run.bag_index(), q, w);
            // sorted-by-id views of the bag for key conversion
            std::vector<int> Ls, Rs;
            for (size_t k = 0; k < t.bag.size(); ++k) (t.in_L[k] ? Ls : Rs).push_back(t.bag[k]);
            std::sort(Ls.begin(), Ls.end());
            std::sort(Rs.begin(), Rs.end());
            size_t nonzero = 0;
            for (auto [key, val] : t.entries) {
                REQUIRE(val != 0);
                ++nonzero;
                int64_t z = static_cast<int64_t>(key / t.index_size);
                auto digits = t.unpack(key % t.index_size);
                std::vector<int> d(Ls.size()), e(Rs.size());
                for (size_t k = 0; k < t.bag.size(); ++k) {
                    if (t.in_L[k]) {
                        size_t pos = std::lower_bound(Ls.begin(), Ls.end(), t.bag[k]) - Ls.begin();
                        d[pos] = digits[k];
                    } else {
                        size_t pos = std::lower_bound(Rs.begin(), Rs.end(), t.bag[k]) - Rs.begin();
                        e[pos] = digits[k];
                    }
                }
                auto it = oracle.find({z, d, e});
                REQUIRE_MESSAGE(it != oracle.end(), "solver entry missing from oracle");
                CHECK(it->second.mod_u32(p) == val);
            }
            // oracle entries that are nonzero mod p must all be present
            size_t oracle_nonzero = 0;
            for (auto& [k, v] : oracle)
                if (v.mod_u32(p) != 0) ++oracle_nonzero;
            CHECK(oracle_nonzero == nonzero);
        }
    }
    CHECK(bags_checked > 50);
}

TEST_CASE("solver decisions") {
    // one-sided: K4 with q=3 is never yes
    auto r = solve_cutwidth_rand(complete_graph(4), ident(4), 3, 8, 123);
    CHECK(!r.yes);
    auto r2 = solve_cutwidth_rand(complete_graph(4), ident(4), 4, 32, 7);
    CHECK(r2.yes);
    CHECK(solve_cutwidth_rand(path_graph(10), ident(10), 2, 8, 1).yes);
    CHECK(!solve_cutwidth_rand(cycle_graph(5), ident(5), 2, 8, 2).yes);
    CHECK(solve_cutwidth_rand(cycle_graph(5), ident(5), 3, 16, 3).yes);
    // parallel trials give the same answer
    auto rp = solve_cutwidth_rand(complete_graph(4), ident(4), 4, 8, 7, 2);
    CHECK(rp.yes);
}
