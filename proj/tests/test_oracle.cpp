#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cutcol/decomposition.hpp"
#include "cutcol/gf.hpp"
#include "cutcol/oracle.hpp"

using namespace cutcol;

static LinearLayout ident(int n) {
    LinearLayout pi;
    for (int i = 1; i <= n; ++i) pi.order.push_back(i);
    return pi;
}

TEST_CASE("bigint arithmetic") {
    BigInt a(123456789), b(-987654321);
    BigInt sum = a;
    sum += b;
    CHECK(sum.to_string() == "-864197532");
    BigInt c = a * b;
    CHECK(c.to_string() == "-121932631112635269");
    BigInt big(1);
    for (int i = 0; i < 40; ++i) big = big * BigInt(10);
    CHECK(big.to_string() == "1" + std::string(40, '0'));
    BigInt s = big;
    s -= big;
    CHECK(s.is_zero());
    CHECK(BigInt(-7).mod_u32(5) == 3);
    CHECK(BigInt::from_i128((__int128)1 << 100).mod_u32(3) == ((1u << 10) % 3 * 0 + 1));  // 2^100 mod 3 = 1
}

TEST_CASE("count_proper_colorings basics") {
    CHECK(count_proper_colorings(complete_graph(3), 3).to_string() == "6");
    CHECK(count_proper_colorings(complete_graph(3), 2).to_string() == "0");
    CHECK(count_proper_colorings(path_graph(3), 2).to_string() == "2");
    CHECK(count_proper_colorings(petersen_graph(), 3).to_string() == "120");
    CHECK_THROWS_AS(count_proper_colorings(complete_graph(20), 4), BudgetExceeded);
    CHECK(decide_proper_coloring(petersen_graph(), 3));
    CHECK(!decide_proper_coloring(complete_graph(4), 3));
    // list variant
    ColorLists l = full_lists(3, 3);
    l[1] = 0b001;  // vertex 1 pinned to color 1
    CHECK(count_proper_colorings(complete_graph(3), 3, l).to_string() == "2");
}

TEST_CASE("eval_Mprime support and values") {
    Graph e1(2, {{1, 2}});
    Cut c = cut_at(e1, ident(2), 1);
    CHECK(eval_Mprime(c, {1}, {1}, 3, 5) == 0);
    CHECK(eval_Mprime(c, {1}, {2}, 3, 5) == 4);  // -1 mod 5
    CHECK_THROWS(eval_Mprime(c, {1}, {2}, 7, 5));  // p < q rejected
    // q=3 support pattern of a single edge is all-ones minus identity
    for (int a = 1; a <= 3; ++a)
        for (int b = 1; b <= 3; ++b)
            CHECK((eval_Mprime(c, {a}, {b}, 3, 5) != 0) == (a != b));
}

TEST_CASE("rank_of_Mprime small cases") {
    Graph e1(2, {{1, 2}});
    Cut c = cut_at(e1, ident(2), 1);
    CHECK(rank_of_Mprime(c, 3, 5) == 2);  // bound (1+1)
    // empty cut: single entry 1
    Cut c0 = cut_at(e1, ident(2), 0);
    CHECK(rank_of_Mprime(c0, 3, 5) == 1);
    // two edges sharing one left vertex: bound (2+1)
    Graph g(3, {{1, 2}, {1, 3}});
    Cut c2 = cut_at(g, ident(3), 1);
    CHECK(rank_of_Mprime(c2, 3, 5) <= 3);
}

TEST_CASE("P_G brute force examples") {
    // empty graph: P(0)=1, P(z)=0 otherwise
    Graph empty(0, {});
    WeightFunction w0;
    w0.n = 0;
    w0.q = 2;
    CHECK(eval_PGz_bruteforce(empty, 2, w0, 0).to_string() == "1");
    CHECK(eval_PGz_bruteforce(empty, 2, w0, 3).is_zero());

    // single edge, q=2, chosen weights: unique coloring (1,2) of weight 3 -> P(3) = -1
    Graph e1(2, {{1, 2}});
    WeightFunction w;
    w.n = 2;
    w.q = 2;
    w.w = {1, 5, 7, 2};  // w(1,1)=1 w(1,2)=5 w(2,1)=7 w(2,2)=2
    CHECK(eval_PGz_bruteforce(e1, 2, w, 3).to_string() == "-1");

    // all-ones weights: the two proper colorings cancel
    WeightFunction w1;
    w1.n = 2;
    w1.q = 2;
    w1.w = {1, 1, 1, 1};
    CHECK(eval_PGz_bruteforce(e1, 2, w1, 2).is_zero());

    // uncolorable: identically zero for any weights
    Rng rng(3);
    WeightFunction wk = sample_weights(complete_graph(4), 3, rng);
    auto all = eval_PG_all_bruteforce(complete_graph(4), 3, wk);
    CHECK(all.empty());
}

TEST_CASE("table entry oracle base cases") {
    Graph e1(2, {{1, 2}});
    auto npd = layout_to_nice_decomposition(e1, ident(2));
    Rng rng(1);
    WeightFunction w = sample_weights(e1, 2, rng);
    // leftmost bag: 1 iff z = 0
    CHECK(eval_table_entry_bruteforce(e1, npd, 0, {}, {}, 0, 2, w).to_string() == "1");
    CHECK(eval_table_entry_bruteforce(e1, npd, 0, {}, {}, 5, 2, w).is_zero());
    // right after IV 1: d = {(1,0)}, e = {} -> 1 at z = 0
    CHECK(eval_table_entry_bruteforce(e1, npd, 1, {0}, {}, 0, 2, w).to_string() == "1");
    // final bag equals P_G(z) for all z
    auto pg = eval_PG_all_bruteforce(e1, 2, w);
    auto tbl = oracle_table_all(e1, npd, static_cast<int>(npd.events.size()), 2, w);
    for (auto& [z, val] : pg) {
        auto it = tbl.find({z, {}, {}});
        REQUIRE(it != tbl.end());
        CHECK(it->second == val);
    }
    for (auto& [key, val] : tbl) {
        auto it = pg.find(std::get<0>(key));
        REQUIRE(it != pg.end());
        CHECK(it->second == val);
    }
}

TEST_CASE("row_basis deterministic and correct") {
    Gf f{5};
    std::vector<std::vector<uint32_t>> rows = {
        {1, 1}, {2, 2}, {0, 1}, {3, 0}};
    auto picked = row_basis(rows, f);
    CHECK(picked == std::vector<size_t>{0, 2});  // row 1 dependent on row 0
    CHECK(matrix_rank(rows, f) == 2);
    CHECK(smallest_prime_at_least(4) == 5);
    CHECK(smallest_prime_at_least(8) == 11);
    CHECK(smallest_prime_at_least(3) == 3);
}
