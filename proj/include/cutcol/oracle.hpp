#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <tuple>
#include <vector>

#include "cutcol/bigint.hpp"
#include "cutcol/decomposition.hpp"
#include "cutcol/graph.hpp"
#include "cutcol/split.hpp"
#include "cutcol/weights.hpp"

namespace cutcol {

// Brute-force reference implementations. Intentionally naive: exhaustive
// enumeration, exact integer arithmetic, no modular reduction, so that any
// field/transition bug in the fast solvers shows up as a mismatch.

struct BudgetExceeded : std::runtime_error {
    explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

inline constexpr uint64_t kDefaultBudget = uint64_t(1) << 24;

// color lists as bitmasks, index 1..n; bit c-1 = color c allowed
using ColorLists = std::vector<uint32_t>;

ColorLists full_lists(int n, int q);

// Exact number of proper (list-)colorings by backtracking in vertex id order,
// colors ascending. Refuses when the full enumeration space exceeds `budget`.
BigInt count_proper_colorings(const Graph& g, int q,
                              const std::optional<ColorLists>& lists = std::nullopt,
                              uint64_t budget = kDefaultBudget);

// Decision variant (count > 0) with early exit; `node_budget` caps visited
// search nodes instead of the a-priori product.
bool decide_proper_coloring(const Graph& g, int q,
                            const std::optional<ColorLists>& lists = std::nullopt,
                            uint64_t node_budget = uint64_t(1) << 34);

// M'_H[x,y] = prod over cut edges (v,w) of (x_v - y_w) in GF(p).
// x is indexed by cut.left, y by cut.right (both sorted by vertex id).
uint32_t eval_Mprime(const Cut& cut, const std::vector<int>& x, const std::vector<int>& y,
                     int q, uint32_t p);

// Rank of the full q^|X| x q^|Y| matrix M'_H over GF(p).
int rank_of_Mprime(const Cut& cut, int q, uint32_t p, uint64_t budget = kDefaultBudget);

// P_G(z): sum over colorings of weight z of prod_{(u,v)} (x_u - x_v), edges
// directed by `order` (vertex introduction order; identity when omitted).
BigInt eval_PGz_bruteforce(const Graph& g, int q, const WeightFunction& w, int64_t z,
                           const std::optional<std::vector<int>>& order = std::nullopt,
                           uint64_t budget = kDefaultBudget);

// All z at once (same enumeration, bucketed).
std::map<int64_t, BigInt> eval_PG_all_bruteforce(const Graph& g, int q, const WeightFunction& w,
                                                 const std::optional<std::vector<int>>& order = std::nullopt,
                                                 uint64_t budget = kDefaultBudget);

// One table entry of the randomized DP, evaluated literally: sum over
// colorings x of V_i \ L_i with weight z and orientations O of E_i with the
// prescribed out-degrees on L_i of
//   (-1)^rev(O) * prod_{u in V_i\L_i} x_u^{outdeg(u)} * prod_{u in R_i} x_u^{e_u}.
// d is indexed by L_i sorted by vertex id, e by R_i sorted by vertex id.
BigInt eval_table_entry_bruteforce(const Graph& g, const NicePathDecomposition& npd, int bag_index,
                                   const std::vector<int>& d, const std::vector<int>& e,
                                   int64_t z, int q, const WeightFunction& w,
                                   uint64_t budget = kDefaultBudget);

// All nonzero entries of one bag's table, keyed (z, d, e) with d over sorted
// L_i and e over sorted R_i. Shares one enumeration across entries.
using OracleTable = std::map<std::tuple<int64_t, std::vector<int>, std::vector<int>>, BigInt>;
OracleTable oracle_table_all(const Graph& g, const NicePathDecomposition& npd, int bag_index,
                             int q, const WeightFunction& w, uint64_t budget = kDefaultBudget);

}  // namespace cutcol
