#include "cutcol/gadgetgen.hpp"

#include <algorithm>
#include <stdexcept>
#include <tuple>

namespace cutcol {

namespace {

// literals of clause j sorted by variable index; (var, positive)
std::vector<std::pair<int, bool>> sorted_literals(const CnfFormula& phi, int j) {
    std::vector<std::pair<int, bool>> lits;
    for (int lit : phi.clauses[j]) lits.emplace_back(std::abs(lit), lit > 0);
    std::sort(lits.begin(), lits.end());
    return lits;
}

uint32_t lmask(std::initializer_list<int> cols) {
    uint32_t m = 0;
    for (int c : cols) m |= 1u << (c - 1);
    return m;
}

}  // namespace

ListColoringInstance cnf_to_list3col(const CnfFormula& phi) {
    auto bad = phi.validate();
    if (!bad.empty()) throw std::invalid_argument("malformed formula: " + bad.front());
    int n = phi.nvars, m = phi.nclauses();
    if (n < 1 || m < 1) throw std::invalid_argument("need at least one variable and one clause");

    ListColoringInstance inst;
    std::vector<std::pair<int, int>> es;
    // variable paths: T_{i,1} F_{i,1} ... T_{i,m} F_{i,m}
    auto T = [&](int i, int j) { return (i - 1) * 2 * m + 2 * (j - 1) + 1; };
    auto F = [&](int i, int j) { return T(i, j) + 1; };
    int base = n * 2 * m;
    std::vector<int> clause_base(m + 1);
    for (int j = 1; j <= m; ++j) {
        clause_base[j] = base;
        base += 2 * static_cast<int>(phi.clauses[j - 1].size());
    }
    auto A = [&](int j, int k) { return clause_base[j] + 2 * (k - 1) + 1; };
    auto B = [&](int j, int k) { return A(j, k) + 1; };

    int total = base;
    inst.lists.assign(total + 1, 0);
    inst.roles.assign(total + 1, {});

    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= m; ++j) {
            inst.lists[T(i, j)] = lmask({2, 3});
            inst.lists[F(i, j)] = lmask({2, 3});
            inst.roles[T(i, j)] = {VertexRole::VarT, i, j, 0};
            inst.roles[F(i, j)] = {VertexRole::VarF, i, j, 0};
            es.emplace_back(T(i, j), F(i, j));
            if (j < m) es.emplace_back(F(i, j), T(i, j + 1));
        }
    }
    for (int j = 1; j <= m; ++j) {
        auto lits = sorted_literals(phi, j - 1);
        int sz = static_cast<int>(lits.size());
        for (int k = 1; k <= sz; ++k) {
            inst.lists[A(j, k)] = k == 1 ? lmask({2, 3}) : lmask({1, 2, 3});
            inst.lists[B(j, k)] = k == sz ? lmask({2}) : lmask({1, 2});
            inst.roles[A(j, k)] = {VertexRole::ClauseA, 0, j, k};
            inst.roles[B(j, k)] = {VertexRole::ClauseB, 0, j, k};
            es.emplace_back(A(j, k), B(j, k));
            if (k < sz) es.emplace_back(B(j, k), A(j, k + 1));
            // literal connection to the variable path in column j
            auto [var, positive] = lits[k - 1];
            es.emplace_back(A(j, k), positive ? T(var, j) : F(var, j));
        }
    }
    inst.g = Graph(total, std::move(es));
    return inst;
}

namespace {

// id bookkeeping for G_2 = G_1 + three chains of 2nm triangles
struct G2Ids {
    int n, m, n1;  // n1 = |V(G_1)|
    int T(int i, int j) const { return (i - 1) * 2 * m + 2 * (j - 1) + 1; }
    int F(int i, int j) const { return T(i, j) + 1; }
    // chain c in 1..3, triangle t in 1..2nm
    int z(int c, int t) const { return n1 + (c - 1) * 6 * n * m + 3 * (t - 1) + 1; }
    int u1(int c, int t) const { return z(c, t) + 1; }
    int u2(int c, int t) const { return z(c, t) + 2; }
    int down(int i, int j) const { return (j - 1) * 2 * n + i; }  // triangle index
    int up(int i, int j) const { return (j - 1) * 2 * n + (2 * n + 1 - i); }
    int total() const { return n1 + 18 * n * m; }
};

int edge_index(const Graph& g, int u, int v) {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
    if (it == g.edges.end() || *it != std::make_pair(u, v))
        throw std::logic_error("edge lookup failed");
    return static_cast<int>(it - g.edges.begin());
}

}  // namespace

PlainInstance list3col_to_3col(const ListColoringInstance& inst, const CnfFormula& phi) {
    int n = phi.nvars, m = phi.nclauses();
    G2Ids id{n, m, inst.g.n};

    std::vector<std::pair<int, int>> es = inst.g.edges;
    for (int c = 1; c <= 3; ++c) {
        for (int t = 1; t <= 2 * n * m; ++t) {
            es.emplace_back(id.z(c, t), id.u1(c, t));
            es.emplace_back(id.z(c, t), id.u2(c, t));
            es.emplace_back(id.u1(c, t), id.u2(c, t));
            if (t < 2 * n * m) {
                es.emplace_back(id.z(c, t + 1), id.u1(c, t));
                es.emplace_back(id.z(c, t + 1), id.u2(c, t));
            }
        }
    }
    // palette triangle on the first terminals
    es.emplace_back(id.z(1, 1), id.z(2, 1));
    es.emplace_back(id.z(1, 1), id.z(3, 1));
    es.emplace_back(id.z(2, 1), id.z(3, 1));

    // list enforcement, exactly as indexed in the construction
    std::vector<std::vector<std::pair<int, int>>> clause_sp(m + 1);  // (row, A-id) per clause
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            es.emplace_back(id.T(i, j), id.z(1, id.down(i, j)));
            es.emplace_back(id.F(i, j), id.z(1, id.up(i, j)));
        }
    for (int j = 1; j <= m; ++j) {
        auto lits = sorted_literals(phi, j - 1);
        int sz = static_cast<int>(lits.size());
        for (int k = 1; k <= sz; ++k) {
            int row = lits[k - 1].first;
            int A = 0;
            for (int v = 1; v <= inst.g.n; ++v)
                if (inst.roles[v].kind == VertexRole::ClauseA && inst.roles[v].j == j &&
                    inst.roles[v].k == k) {
                    A = v;
                    break;
                }
            if (!A) throw std::logic_error("clause vertex not found");
            int B = A + 1;
            if (k == 1) es.emplace_back(A, id.z(1, id.down(row, j)));
            es.emplace_back(B, id.z(3, id.down(row, j)));
            if (k == sz) es.emplace_back(B, id.z(1, id.down(row, j)));
            clause_sp[j].emplace_back(row, A);
        }
    }

    PlainInstance out;
    out.g = Graph(id.total(), std::move(es));
    out.formula = phi;
    out.roles = inst.roles;
    out.roles.resize(id.total() + 1);
    for (int c = 1; c <= 3; ++c)
        for (int t = 1; t <= 2 * n * m; ++t) {
            out.roles[id.z(c, t)] = {VertexRole::ChainTerminal, c, t, 0};
            out.roles[id.u1(c, t)] = {VertexRole::ChainInner, c, t, 1};
            out.roles[id.u2(c, t)] = {VertexRole::ChainInner, c, t, 2};
        }

    // --- cells ---
    CellDrawing& dr = out.drawing;
    dr.nrows = n + 1;
    dr.ncols = m;
    dr.cell.assign(id.total() + 1, {0, 0});
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= m; ++j) {
            dr.cell[id.T(i, j)] = {i, j};
            dr.cell[id.F(i, j)] = {i, j};
            for (int c = 1; c <= 3; ++c)
                for (int t : {id.down(i, j), id.up(i, j)}) {
                    dr.cell[id.z(c, t)] = {i, j};
                    dr.cell[id.u1(c, t)] = {i, j};
                    dr.cell[id.u2(c, t)] = {i, j};
                }
        }
    for (int j = 1; j <= m; ++j)
        for (auto [row, A] : clause_sp[j]) {
            dr.cell[A] = {row, j};
            dr.cell[A + 1] = {row, j};
        }

    dr.oriented.assign(out.g.m(), {0, 0});
    auto orient = [&](int u, int v) {
        int e = edge_index(out.g, u, v);
        dr.oriented[e] = {u, v};
        return e;
    };

    // "lower" connector pair of a lane in a cell: the two edges linking this
    // cell's triangle toward the next triangle along the chain (downward for
    // down-lanes, toward the row below for up-lanes; the turnaround pair at
    // row n). Oriented upper vertex -> lower vertex.
    struct ConnPair {
        int e[2];
    };
    auto lower_pair_down = [&](int c, int i, int j) {
        int t = id.down(i, j);  // next triangle along the chain is t+1
        ConnPair p;
        p.e[0] = orient(id.u1(c, t), id.z(c, t + 1));
        p.e[1] = orient(id.u2(c, t), id.z(c, t + 1));
        return p;
    };
    auto lower_pair_up = [&](int c, int i, int j) {
        int t = id.up(i, j);  // previous triangle t-1 lies below (or turnaround)
        ConnPair p;
        p.e[0] = orient(id.z(c, t), id.u1(c, t - 1));
        p.e[1] = orient(id.z(c, t), id.u2(c, t - 1));
        return p;
    };

    // type (1): connector pairs across e_TF(i, j), i < n
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i < n; ++i) {
            int etf = orient(id.T(i, j), id.F(i, j));
            int slot = 0;
            auto put = [&](ConnPair p) {
                for (int w = 0; w < 2; ++w)
                    dr.crossings.push_back({etf, p.e[w], slot++, 1000, i, j, false});
            };
            for (int c = 1; c <= 3; ++c) put(lower_pair_down(c, i, j));  // lanes 1..3
            slot = 7;                                                    // slot 6 = clause descent
            for (int c = 3; c >= 1; --c) put(lower_pair_up(c, i, j));    // lanes 5..7
        }

    // type (2): clause descent across the variable-path edges it passes
    for (int j = 1; j <= m; ++j) {
        auto& sp = clause_sp[j];
        for (size_t k = 0; k + 1 < sp.size(); ++k) {
            int b = sp[k].second + 1, a2 = sp[k + 1].second;
            int desc = orient(b, a2);
            for (int row = sp[k].first; row < sp[k + 1].first; ++row) {
                int etf = edge_index(out.g, id.T(row, j), id.F(row, j));
                dr.crossings.push_back({desc, etf, row, 6, row, j, true});
            }
        }
    }

    // type (3): attachment edges across the connector pairs of traversed
    // lanes; connector-side keys stack a-edges above b-edges, both above the
    // e_TF crossing (key 1000)
    for (int j = 1; j <= m; ++j) {
        auto lits = sorted_literals(phi, j - 1);
        int sz = static_cast<int>(lits.size());
        for (int k = 1; k <= sz; ++k) {
            int row = lits[k - 1].first;
            bool positive = lits[k - 1].second;
            int A = clause_sp[j][k - 1].second, B = A + 1;
            auto walk = [&](int from, int to, std::initializer_list<ConnPair> pairs, int hbase) {
                int e1 = orient(from, to);
                int key = 1, h = hbase;
                for (const ConnPair& p : pairs)
                    for (int w = 0; w < 2; ++w)
                        dr.crossings.push_back({e1, p.e[w], key++, h++, row, j, true});
            };
            if (positive) {  // a -> T crosses down lanes 3, 2, 1
                walk(A, id.T(row, j),
                     {lower_pair_down(3, row, j), lower_pair_down(2, row, j),
                      lower_pair_down(1, row, j)},
                     10);
            } else {  // a -> F crosses up lanes (chains 3, 2, 1)
                walk(A, id.F(row, j),
                     {lower_pair_up(3, row, j), lower_pair_up(2, row, j), lower_pair_up(1, row, j)},
                     10);
            }
            if (k == 1)  // a_{j,1} -> z_1 enforcement crosses down lanes 3, 2
                walk(A, id.z(1, id.down(row, j)),
                     {lower_pair_down(3, row, j), lower_pair_down(2, row, j)}, 30);
            if (k == sz)  // last b -> z_1 enforcement crosses down lanes 3, 2
                walk(B, id.z(1, id.down(row, j)),
                     {lower_pair_down(3, row, j), lower_pair_down(2, row, j)}, 50);
            // b -> z_3 attaches to the adjacent lane: no crossings
        }
    }

    // --- column-major layout pi_2 ---
    LinearLayout& pi = out.layout;
    for (int j = 1; j <= m; ++j)
        for (int i = 1; i <= n; ++i) {  // bottom cells hold no vertices
            pi.order.push_back(id.T(i, j));
            for (int c = 1; c <= 3; ++c) {
                int t = id.down(i, j);
                pi.order.push_back(id.z(c, t));
                pi.order.push_back(id.u1(c, t));
                pi.order.push_back(id.u2(c, t));
            }
            for (auto [row, A] : clause_sp[j])
                if (row == i) {
                    pi.order.push_back(A);
                    pi.order.push_back(A + 1);
                }
            for (int c = 3; c >= 1; --c) {
                int t = id.up(i, j);
                pi.order.push_back(id.z(c, t));
                pi.order.push_back(id.u1(c, t));
                pi.order.push_back(id.u2(c, t));
            }
            pi.order.push_back(id.F(i, j));
        }
    if (static_cast<int>(pi.order.size()) != out.g.n)
        throw std::logic_error("layout misses vertices");
    return out;
}

GadgetInstance planarize_3col(const PlainInstance& inst) {
    const Graph& g = inst.g;
    const CellDrawing& dr = inst.drawing;

    // crossing-discipline checks
    std::vector<std::vector<std::pair<int, int>>> per_edge(g.m());  // (key, crossing idx)
    for (size_t ci = 0; ci < dr.crossings.size(); ++ci) {
        const auto& c = dr.crossings[ci];
        if (c.e1 == c.e2) throw std::invalid_argument("self-crossing");
        for (int side = 0; side < 2; ++side) {
            int e = side == 0 ? c.e1 : c.e2;
            auto [u, v] = g.edges[e];
            if (dr.cell[u].second != dr.cell[v].second)
                throw std::invalid_argument("crossed edge spans columns");
            if (dr.oriented[e] == std::make_pair(0, 0))
                throw std::invalid_argument("crossed edge lacks an orientation");
            per_edge[e].emplace_back(side == 0 ? c.key1 : c.key2, static_cast<int>(ci));
        }
        if (c.row < 1 || c.row > dr.nrows || c.col < 1 || c.col > dr.ncols)
            throw std::invalid_argument("crossing outside the cell grid");
    }
    for (auto& lst : per_edge) {
        std::sort(lst.begin(), lst.end());
        for (size_t i = 1; i < lst.size(); ++i)
            if (lst[i].first == lst[i - 1].first)
                throw std::invalid_argument("ambiguous crossing order along an edge");
    }

    // fresh subdivision vertices per crossed edge (edge index order, along the
    // stored orientation; the distinguished endpoint, the smaller vertex id,
    // is identified with its nearest new vertex), then gadget internals per
    // crossing (cells column-major, clause-side crossings first)
    int next_id = g.n;
    struct CrossTerm {
        int a1 = 0, b1 = 0, a2 = 0, b2 = 0;  // segment ends along e1 and e2
    };
    std::vector<CrossTerm> terms(dr.crossings.size());
    std::vector<std::pair<int, int>> g3_edges;
    std::vector<char> crossed(g.m(), 0);
    std::vector<std::pair<int, int>> cells3;  // cell per fresh vertex, in id order

    auto cell_of_crossing = [&](int ci) {
        return std::make_pair(dr.crossings[ci].row, dr.crossings[ci].col);
    };

    for (int e = 0; e < g.m(); ++e) {
        if (per_edge[e].empty()) continue;
        crossed[e] = 1;
        auto [from, to] = dr.oriented[e];
        int r = static_cast<int>(per_edge[e].size());
        int dist = std::min(from, to);
        std::vector<int> nodes(r + 1, 0);
        if (dist == from) {
            nodes[0] = from;
            for (int t = 1; t <= r; ++t) {
                nodes[t] = ++next_id;
                cells3.push_back(cell_of_crossing(per_edge[e][t - 1].second));
            }
            g3_edges.emplace_back(nodes[r], to);
        } else {
            for (int t = 0; t < r; ++t) {
                nodes[t] = ++next_id;
                cells3.push_back(cell_of_crossing(per_edge[e][t == 0 ? 0 : t - 1].second));
            }
            nodes[r] = to;
            g3_edges.emplace_back(from, nodes[0]);
        }
        for (int t = 1; t <= r; ++t) {
            int ci = per_edge[e][t - 1].second;
            if (dr.crossings[ci].e1 == e) {
                terms[ci].a1 = nodes[t - 1];
                terms[ci].b1 = nodes[t];
            } else {
                terms[ci].a2 = nodes[t - 1];
                terms[ci].b2 = nodes[t];
            }
        }
    }
    for (int e = 0; e < g.m(); ++e)
        if (!crossed[e]) g3_edges.push_back(g.edges[e]);

    std::vector<int> order(dr.crossings.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        const auto& a = dr.crossings[x];
        const auto& b = dr.crossings[y];
        return std::tuple(a.col, a.row, !a.clause_side, a.e1, a.key1) <
               std::tuple(b.col, b.row, !b.clause_side, b.e1, b.key1);
    });
    CrossoverGadget hc = build_hcol();
    for (int ci : order) {
        std::vector<int> map13(14, 0);
        map13[hc.u] = terms[ci].a1;
        map13[hc.u2] = terms[ci].b1;
        map13[hc.v] = terms[ci].a2;
        map13[hc.v2] = terms[ci].b2;
        for (int x = 1; x <= 13; ++x)
            if (!map13[x]) {
                map13[x] = ++next_id;
                cells3.push_back(cell_of_crossing(ci));
            }
        for (auto [a, b] : hc.g.edges) g3_edges.emplace_back(map13[a], map13[b]);
    }

    // column-major over cells; inside a cell the members are appended
    // greedily, always picking the vertex that keeps the running cut
    // smallest (ties by id), so gadget internals sit next to the structures
    // they were inserted into
    int n3 = next_id;
    std::vector<std::pair<int, int>> cellv(n3 + 1, {0, 0});
    for (int v = 1; v <= g.n; ++v) cellv[v] = dr.cell[v];
    for (int v = g.n + 1; v <= n3; ++v) cellv[v] = cells3[v - g.n - 1];

    Graph pre(n3, g3_edges);
    std::vector<int> orderv;
    orderv.reserve(n3);
    {
        std::vector<std::vector<int>> members(dr.nrows * dr.ncols + 1);
        auto cidx = [&](std::pair<int, int> rc) { return (rc.second - 1) * dr.nrows + rc.first; };
        for (int v = 1; v <= n3; ++v) members[cidx(cellv[v])].push_back(v);
        std::vector<char> placed(n3 + 1, 0);
        for (int j = 1; j <= dr.ncols; ++j)
            for (int i = 1; i <= dr.nrows; ++i) {
                auto& cell = members[cidx({i, j})];
                std::vector<char> used(cell.size(), 0);
                for (size_t step = 0; step < cell.size(); ++step) {
                    int pick = -1, pick_delta = 0;
                    for (size_t k = 0; k < cell.size(); ++k) {
                        if (used[k]) continue;
                        int v = cell[k];
                        int inside = 0;
                        for (int u : pre.neighbors(v)) inside += placed[u];
                        int delta = pre.degree(v) - 2 * inside;
                        if (pick < 0 || delta < pick_delta) {
                            pick = static_cast<int>(k);
                            pick_delta = delta;
                        }
                    }
                    used[pick] = 1;
                    placed[cell[pick]] = 1;
                    orderv.push_back(cell[pick]);
                }
            }
        if (orderv.size() != static_cast<size_t>(n3))
            throw std::logic_error("layout merge lost vertices");
    }
    std::vector<int> newid(n3 + 1, 0);
    for (int pos = 0; pos < n3; ++pos) newid[orderv[pos]] = pos + 1;
    std::vector<std::pair<int, int>> es3;
    es3.reserve(g3_edges.size());
    for (auto [a, b] : g3_edges) es3.emplace_back(newid[a], newid[b]);

    GadgetInstance out;
    out.graph = Graph(n3, std::move(es3));
    LinearLayout pi3;
    pi3.order.resize(n3);
    for (int pos = 0; pos < n3; ++pos) pi3.order[pos] = pos + 1;
    out.layout = pi3;
    out.formula = inst.formula;
    out.family = "planar3col";
    int64_t subdiv = 0;
    for (int e = 0; e < g.m(); ++e)
        if (crossed[e]) subdiv += static_cast<int64_t>(per_edge[e].size());
    out.provenance["crossings"] = static_cast<int64_t>(dr.crossings.size());
    out.provenance["crossover_gadgets"] = static_cast<int64_t>(dr.crossings.size());
    out.provenance["subdivision_vertices"] = subdiv;
    out.provenance["g2_vertices"] = g.n;
    out.provenance["vertices"] = n3;
    out.params["n_vars"] = inst.formula.nvars;
    out.params["m_clauses"] = inst.formula.nclauses();
    return out;
}

GadgetInstance cnf_to_planar3col(const CnfFormula& phi) {
    ListColoringInstance l = cnf_to_list3col(phi);
    PlainInstance p = list3col_to_3col(l, phi);
    return planarize_3col(p);
}

}  // namespace cutcol
