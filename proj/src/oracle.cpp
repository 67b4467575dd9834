#include "cutcol/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <unordered_map>

#include "cutcol/gf.hpp"

namespace cutcol {

ColorLists full_lists(int n, int q) {
    ColorLists l(n + 1, 0);
    uint32_t full = q >= 32 ? ~0u : ((1u << q) - 1);
    for (int v = 1; v <= n; ++v) l[v] = full;
    return l;
}

static void check_lists(const Graph& g, int q, const ColorLists& lists) {
    if (static_cast<int>(lists.size()) != g.n + 1)
        throw std::invalid_argument("lists must cover every vertex");
    uint32_t full = q >= 32 ? ~0u : ((1u << q) - 1);
    for (int v = 1; v <= g.n; ++v) {
        if (lists[v] == 0) throw std::invalid_argument("empty color list");
        if (lists[v] & ~full) throw std::invalid_argument("list color out of range");
    }
}

BigInt count_proper_colorings(const Graph& g, int q, const std::optional<ColorLists>& lists,
                              uint64_t budget) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    ColorLists l = lists ? *lists : full_lists(g.n, q);
    check_lists(g, q, l);
    long double space = 1.0L;
    for (int v = 1; v <= g.n; ++v) space *= std::popcount(l[v]);
    if (space > static_cast<long double>(budget))
        throw BudgetExceeded("coloring enumeration above budget");

    if (g.n == 0) return BigInt(1);
    std::vector<int> color(g.n + 1, 0);
    uint64_t count = 0;
    // backtracking, vertices in id order, colors ascending
    int v = 1;
    while (v >= 1) {
        if (v > g.n) {
            ++count;
            --v;
            continue;
        }
        bool advanced = false;
        for (int c = color[v] + 1; c <= q; ++c) {
            if (!(l[v] & (1u << (c - 1)))) continue;
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (u < v && color[u] == c) { ok = false; break; }
            }
            if (ok) {
                color[v] = c;
                ++v;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            color[v] = 0;
            --v;
        }
    }
    return BigInt(static_cast<int64_t>(count));
}

bool decide_proper_coloring(const Graph& g, int q, const std::optional<ColorLists>& lists,
                            uint64_t node_budget) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    ColorLists l = lists ? *lists : full_lists(g.n, q);
    check_lists(g, q, l);
    if (g.n == 0) return true;
    std::vector<int> color(g.n + 1, 0);
    uint64_t nodes = 0;
    int v = 1;
    while (v >= 1) {
        if (v > g.n) return true;
        if (++nodes > node_budget) throw BudgetExceeded("decision search above node budget");
        bool advanced = false;
        for (int c = color[v] + 1; c <= q; ++c) {
            if (!(l[v] & (1u << (c - 1)))) continue;
            bool ok = true;
            for (int u : g.neighbors(v)) {
                if (u < v && color[u] == c) { ok = false; break; }
            }
            if (ok) {
                color[v] = c;
                ++v;
                advanced = true;
                break;
            }
        }
        if (!advanced) {
            color[v] = 0;
            --v;
        }
    }
    return false;
}

uint32_t eval_Mprime(const Cut& cut, const std::vector<int>& x, const std::vector<int>& y,
                     int q, uint32_t p) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
    if (p < static_cast<uint32_t>(q)) throw std::invalid_argument("field prime below q");
    if (x.size() != cut.left.size() || y.size() != cut.right.size())
        throw std::invalid_argument("coloring does not match cut sides");
    Gf f{p};
    auto side_color = [](const std::vector<int>& verts, const std::vector<int>& cols, int v) {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        return cols[it - verts.begin()];
    };
    uint32_t r = 1 % p;
    for (auto [u, w] : cut.crossing) {
        int xv = side_color(cut.left, x, u);
        int yw = side_color(cut.right, y, w);
        r = f.mul(r, f.from_int(xv - yw));
    }
    return r;
}

int rank_of_Mprime(const Cut& cut, int q, uint32_t p, uint64_t budget) {
    if (!is_prime_u64(p)) throw std::invalid_argument("p is not prime");
    if (p < static_cast<uint32_t>(q)) throw std::invalid_argument("field prime below q");
    size_t nx = cut.left.size(), ny = cut.right.size();
    long double space = 1.0L;
    for (size_t i = 0; i < nx + ny; ++i) space *= q;
    if (space > static_cast<long double>(budget)) throw BudgetExceeded("M' materialization above budget");
    size_t rows_n = 1, cols_n = 1;
    for (size_t i = 0; i < nx; ++i) rows_n *= q;
    for (size_t i = 0; i < ny; ++i) cols_n *= q;
    Gf f{p};
    std::vector<std::vector<uint32_t>> m(rows_n, std::vector<uint32_t>(cols_n));
    std::vector<int> x(nx, 1), y;
    for (size_t r = 0; r < rows_n; ++r) {
        y.assign(ny, 1);
        for (size_t c = 0; c < cols_n; ++c) {
            m[r][c] = eval_Mprime(cut, x, y, q, p);
            // odometer on y
            for (size_t k = 0; k < ny; ++k) {
                if (++y[k] <= q) break;
                y[k] = 1;
            }
        }
        for (size_t k = 0; k < nx; ++k) {
            if (++x[k] <= q) break;
            x[k] = 1;
        }
    }
    return static_cast<int>(matrix_rank(std::move(m), f));
}

// ---- P_G(z) ----

namespace {

struct I128Acc {
    __int128 v = 0;
    void add(__int128 t) {
        __int128 r = v + t;
        // overflow check: sign flip against same-sign addends
        if ((v > 0 && t > 0 && r < 0) || (v < 0 && t < 0 && r > 0))
            throw std::overflow_error("oracle accumulator overflow");
        v = r;
    }
};

std::vector<int> identity_order(int n) {
    std::vector<int> o(n);
    for (int i = 0; i < n; ++i) o[i] = i + 1;
    return o;
}

}  // namespace

std::map<int64_t, BigInt> eval_PG_all_bruteforce(const Graph& g, int q, const WeightFunction& w,
                                                 const std::optional<std::vector<int>>& order,
                                                 uint64_t budget) {
    if (w.n != g.n || w.q != q) throw std::invalid_argument("weight function mismatch");
    long double space = 1.0L;
    for (int i = 0; i < g.n; ++i) space *= q;
    if (space > static_cast<long double>(budget)) throw BudgetExceeded("P_G enumeration above budget");
    std::vector<int> ord = order ? *order : identity_order(g.n);
    std::vector<int> rank(g.n + 1, 0);
    for (int i = 0; i < g.n; ++i) rank[ord[i]] = i + 1;
    // edges as (earlier, later) in the order
    std::vector<std::pair<int, int>> des;
    for (auto [u, v] : g.edges) des.emplace_back(rank[u] < rank[v] ? u : v, rank[u] < rank[v] ? v : u);

    std::map<int64_t, I128Acc> acc;
    std::vector<int> x(g.n + 1, 1);
    for (;;) {
        int64_t z = 0;
        for (int v = 1; v <= g.n; ++v) z += w.at(v, x[v]);
        __int128 prod = 1;
        for (auto [u, v] : des) {
            prod *= (x[u] - x[v]);
            if (prod == 0) break;
        }
        if (prod != 0) acc[z].add(prod);
        int k = 1;
        while (k <= g.n && ++x[k] > q) x[k++] = 1;
        if (k > g.n) break;
    }
    std::map<int64_t, BigInt> out;
    for (auto& [z, a] : acc)
        if (a.v != 0) out[z] = BigInt::from_i128(a.v);
    return out;
}

BigInt eval_PGz_bruteforce(const Graph& g, int q, const WeightFunction& w, int64_t z,
                           const std::optional<std::vector<int>>& order, uint64_t budget) {
    if (g.n == 0) return BigInt(z == 0 ? 1 : 0);
    auto all = eval_PG_all_bruteforce(g, q, w, order, budget);
    auto it = all.find(z);
    return it == all.end() ? BigInt(0) : it->second;
}

// ---- table entries ----

OracleTable oracle_table_all(const Graph& g, const NicePathDecomposition& npd, int bag_index,
                             int q, const WeightFunction& w, uint64_t budget) {
    if (w.n != g.n || w.q != q) throw std::invalid_argument("weight function mismatch");
    SplitInfo s = split_bag(g, npd, bag_index);

    // edges of E_i in introduction order, as (earlier, later) by intro rank
    std::vector<std::pair<int, int>> ei;
    {
        BagTracker t(g, npd);
        for (int k = 0; k < bag_index; ++k) {
            const Event& e = t.next_event();
            if (e.kind == Event::IntroduceEdge) {
                int a = e.u, b = e.v;
                t.advance();
                if (t.state().intro_rank[a] > t.state().intro_rank[b]) std::swap(a, b);
                ei.emplace_back(a, b);
            } else {
                t.advance();
            }
        }
    }

    std::vector<int> Ls, Rs;  // sorted by id
    for (size_t k = 0; k < s.bag.size(); ++k) (s.in_L[k] ? Ls : Rs).push_back(s.bag[k]);
    std::sort(Ls.begin(), Ls.end());
    std::sort(Rs.begin(), Rs.end());
    std::vector<int> freeV;  // V_i \ L_i, sorted
    for (int v = 1; v <= g.n; ++v)
        if (s.introduced[v] && !(s.bag_pos(v) >= 0 && s.is_L(v))) freeV.push_back(v);

    long double space = 1.0L;
    for (size_t i = 0; i < freeV.size(); ++i) space *= q;
    space *= std::pow(2.0L, static_cast<long double>(ei.size()));
    if (space > static_cast<long double>(budget)) throw BudgetExceeded("table enumeration above budget");

    // caps: d over sorted L (<= introduced degree), e over sorted R
    std::vector<int> lcap, rcap;
    for (int v : Ls) lcap.push_back(s.d_intro[v]);
    for (int v : Rs) rcap.push_back(g.degree(v) - s.d_intro[v]);
    size_t e_count = 1;
    for (int c : rcap) e_count *= c + 1;
    uint64_t dspace = 1, espace = e_count;
    for (int c : lcap) dspace *= c + 1;
    if (dspace >= (1u << 20) || espace >= (1u << 20))
        throw BudgetExceeded("table index space too large for the oracle");

    // packed key: z * (dspace*espace) + dpack * espace + epack
    std::unordered_map<uint64_t, I128Acc> acc;
    std::vector<int> x(g.n + 1, 0);
    for (int v : freeV) x[v] = 1;
    std::vector<int> dprof(Ls.size());
    for (;;) {  // over colorings x of freeV
        int64_t z = 0;
        for (int v : freeV) z += w.at(v, x[v]);
        for (uint64_t mask = 0; mask < (uint64_t(1) << ei.size()); ++mask) {
            std::fill(dprof.begin(), dprof.end(), 0);
            __int128 term = (std::popcount(mask) & 1) ? -1 : 1;
            for (size_t j = 0; j < ei.size(); ++j) {
                int tail = (mask >> j) & 1 ? ei[j].second : ei[j].first;  // bit set = reversal
                auto it = std::lower_bound(Ls.begin(), Ls.end(), tail);
                if (it != Ls.end() && *it == tail) {
                    dprof[it - Ls.begin()]++;
                } else {
                    term *= x[tail];
                }
            }
            if (term == 0) continue;
            uint64_t dpack = 0;
            for (size_t k = Ls.size(); k-- > 0;) dpack = dpack * (lcap[k] + 1) + dprof[k];
            // fan out over all e <= rcap
            std::vector<int> e(Rs.size(), 0);
            for (size_t ec = 0; ec < e_count; ++ec) {
                __int128 t2 = term;
                for (size_t k = 0; k < Rs.size(); ++k)
                    for (int rep = 0; rep < e[k]; ++rep) t2 *= x[Rs[k]];
                acc[(uint64_t(z) * dspace + dpack) * espace + ec].add(t2);
                for (size_t k = 0; k < Rs.size(); ++k) {
                    if (++e[k] <= rcap[k]) break;
                    e[k] = 0;
                }
            }
        }
        // odometer over freeV
        size_t k = 0;
        while (k < freeV.size() && ++x[freeV[k]] > q) x[freeV[k++]] = 1;
        if (k == freeV.size()) break;
    }
    OracleTable out;
    for (auto& [key, a] : acc) {
        if (a.v == 0) continue;
        uint64_t epack = key % espace, rest = key / espace;
        uint64_t dpack = rest % dspace;
        int64_t z = static_cast<int64_t>(rest / dspace);
        std::vector<int> d(Ls.size()), e(Rs.size());
        for (size_t k = 0; k < Ls.size(); ++k) { d[k] = dpack % (lcap[k] + 1); dpack /= lcap[k] + 1; }
        for (size_t k = 0; k < Rs.size(); ++k) { e[k] = epack % (rcap[k] + 1); epack /= rcap[k] + 1; }
        out[{z, d, e}] = BigInt::from_i128(a.v);
    }
    return out;
}

BigInt eval_table_entry_bruteforce(const Graph& g, const NicePathDecomposition& npd, int bag_index,
                                   const std::vector<int>& d, const std::vector<int>& e,
                                   int64_t z, int q, const WeightFunction& w, uint64_t budget) {
    auto all = oracle_table_all(g, npd, bag_index, q, w, budget);
    auto it = all.find({z, d, e});
    return it == all.end() ? BigInt(0) : it->second;
}

}  // namespace cutcol
