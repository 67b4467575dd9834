// cutcolor: exact q-coloring over small edge separators.
//
// solve   decide colorability (deterministic rank-based DP over a layout,
//         randomized algebraic DP over a nice path decomposition, or the
//         brute-force oracle)
// gen     compile a CNF formula into one of the lower-bound families
// verify  oracle cross-checks (certificates, reduce, rank, tables, gadgets)
// bench   timing corpus with the per-unit-cutwidth growth fit
//
// Exit codes: 0 = yes/pass, 1 = no/fail, 2 = error.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>

#include "cutcol/bench.hpp"
#include "cutcol/decomposition.hpp"
#include "cutcol/detsolver.hpp"
#include "cutcol/gadgetgen.hpp"
#include "cutcol/layout_search.hpp"
#include "cutcol/oracle.hpp"
#include "cutcol/randsolver.hpp"

using json = nlohmann::ordered_json;
using namespace cutcol;

namespace {

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

uint64_t oracle_budget() {
    if (const char* s = std::getenv("CUTCOLOR_BUDGET")) return std::strtoull(s, nullptr, 10);
    return kDefaultBudget;
}

void emit(const json& report, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << report.dump(2) << "\n";
    } else {
        std::ofstream f(out_path);
        f << report.dump(2) << "\n";
    }
}

LinearLayout identity_layout(int n) {
    LinearLayout pi;
    for (int v = 1; v <= n; ++v) pi.order.push_back(v);
    return pi;
}

int run_solve(const std::string& alg, int q, const std::string& graph_path,
              const std::string& layout_path, const std::string& decomp_path,
              const std::string& auto_layout, int trials, uint64_t seed, int jobs,
              size_t skip_reduce, const std::string& out_path) {
    json rep;
    rep["command"] = "solve";
    rep["algorithm"] = alg;
    rep["q"] = q;
    rep["seed"] = seed;
    rep["graph"] = graph_path;
    auto t0 = std::chrono::steady_clock::now();

    Graph g0 = load_graph(graph_path);
    auto isolated = g0.isolated_vertices();
    std::vector<int> old_id;
    Graph g = isolated.empty() ? g0 : g0.without_vertices(isolated, &old_id);
    rep["n"] = g0.n;
    rep["m"] = g0.m();
    rep["stripped_isolated"] = isolated;

    bool yes = false;
    if (alg == "brute") {
        if (!layout_path.empty() || !decomp_path.empty())
            throw std::runtime_error("brute force takes no certificate");
        BigInt cnt = count_proper_colorings(g0, q, std::nullopt, oracle_budget());
        yes = !cnt.is_zero();
        rep["count"] = cnt.to_string();
        rep["certificate"] = "none";
    } else {
        // structured solvers insist on an explicit certificate unless the
        // caller opts into layout search
        if (!layout_path.empty() && !decomp_path.empty())
            throw std::runtime_error("give either a layout or a decomposition, not both");
        if (layout_path.empty() && decomp_path.empty() && auto_layout.empty())
            throw std::runtime_error(
                "no certificate: pass --layout/--decomp or opt in with --auto-layout");

        if (alg == "det") {
            LinearLayout pi;
            if (!layout_path.empty()) {
                LinearLayout pi0 = load_layout(graph_path.empty() ? layout_path : layout_path);
                // restrict to the non-isolated vertices, keeping order
                std::vector<int> keep;
                std::vector<int> newid(g0.n + 1, 0);
                for (size_t i = 0; i < old_id.size(); ++i) newid[old_id[i]] = static_cast<int>(i);
                if (isolated.empty()) {
                    pi = pi0;
                } else {
                    for (int v : pi0.order)
                        if (g0.degree(v) > 0) pi.order.push_back(newid[v]);
                }
                rep["certificate"] = "layout";
            } else if (!auto_layout.empty()) {
                pi = find_layout(g, auto_layout == "exact" ? LayoutStrategy::Exact
                                                           : LayoutStrategy::Greedy);
                rep["certificate"] = "auto-layout-" + auto_layout;
            } else {
                throw std::runtime_error("det solver needs a layout");
            }
            rep["cutwidth"] = cutwidth_of(g, pi);
            DetOptions opts;
            opts.skip_reduce_below = skip_reduce;
            DetStats stats;
            yes = solve_cutwidth_det(g, pi, q, opts, &stats);
            rep["max_table_rows"] = stats.max_rows;
            rep["reduces_run"] = stats.reduces_run;
            rep["reduces_skipped"] = stats.reduces_skipped;
            rep["trials"] = nullptr;
        } else if (alg == "rand") {
            RandResult rr;
            if (!decomp_path.empty()) {
                NicePathDecomposition npd = load_decomposition(decomp_path);
                rep["certificate"] = "decomposition";
                rep["pathwidth"] = pathwidth_of(npd);
                if (npd.events.empty()) rep["empty_decomposition"] = true;
                rr = solve_pathwidth_rand(g, npd, q, trials, seed, jobs);
            } else {
                LinearLayout pi;
                if (!layout_path.empty()) {
                    LinearLayout pi0 = load_layout(layout_path);
                    if (isolated.empty()) {
                        pi = pi0;
                    } else {
                        std::vector<int> newid(g0.n + 1, 0);
                        for (size_t i = 0; i < old_id.size(); ++i)
                            newid[old_id[i]] = static_cast<int>(i);
                        for (int v : pi0.order)
                            if (g0.degree(v) > 0) pi.order.push_back(newid[v]);
                    }
                    rep["certificate"] = "layout";
                } else {
                    pi = find_layout(g, auto_layout == "exact" ? LayoutStrategy::Exact
                                                               : LayoutStrategy::Greedy);
                    rep["certificate"] = "auto-layout-" + auto_layout;
                }
                rep["cutwidth"] = cutwidth_of(g, pi);
                rr = solve_cutwidth_rand(g, pi, q, trials, seed, jobs);
            }
            yes = rr.yes;
            rep["trials_requested"] = trials;
            rep["trials_run"] = rr.trials.size();
            json tj = json::array();
            for (const auto& t : rr.trials)
                tj.push_back({{"prime", t.prime}, {"nonzero", t.nonzero}, {"witness_z", t.witness_z}});
            rep["trials"] = tj;
        } else {
            throw std::runtime_error("unknown algorithm: " + alg);
        }
    }
    rep["answer"] = yes ? "yes" : "no";
    rep["wall_ms"] = ms_since(t0);
    emit(rep, out_path);
    return yes ? 0 : 1;
}

int run_gen(const std::string& family, const std::string& cnf_path, const std::string& out_dir,
            int d, int p, bool mini, const std::string& out_path) {
    CnfFormula phi = load_cnf(cnf_path);
    GadgetInstance gi;
    if (family == "planar3col") {
        gi = cnf_to_planar3col(phi);
    } else if (family == "degree") {
        DegreeGenOptions opts;
        opts.mini = mini;
        gi = sat_to_degree_coloring(phi, d, p, opts);
    } else {
        throw std::runtime_error("unknown family: " + family);
    }
    std::string prefix = out_dir;
    if (!prefix.empty() && prefix.back() != '/') prefix += '/';
    save_graph(prefix + "graph.col", gi.graph);

    json meta;
    meta["family"] = gi.family;
    meta["formula_hash"] = formula_hash(phi);
    meta["n_vertices"] = gi.graph.n;
    meta["m_edges"] = gi.graph.m();
    int dmax = 0;
    for (int v = 1; v <= gi.graph.n; ++v) dmax = std::max(dmax, gi.graph.degree(v));
    meta["max_degree"] = dmax;
    for (auto& [k, v] : gi.params) meta["params"][k] = v;
    for (auto& [k, v] : gi.provenance) meta["provenance"][k] = v;
    if (gi.layout) {
        save_layout(prefix + "layout.lay", *gi.layout);
        meta["certificate"] = "layout.lay";
        int ctw = cutwidth_of(gi.graph, *gi.layout);
        meta["cutwidth"] = ctw;
        meta["cutwidth_minus_n"] = ctw - phi.nvars;
    }
    if (gi.npd) {
        save_decomposition(prefix + "decomp.npd", *gi.npd);
        meta["certificate"] = "decomp.npd";
        meta["pathwidth"] = pathwidth_of(*gi.npd);
        meta["decomposition_valid"] = validate_decomposition(gi.graph, *gi.npd).empty();
    }
    std::ofstream mf(prefix + "meta.json");
    mf << meta.dump(2) << "\n";
    if (!out_path.empty()) emit(meta, out_path);
    std::cout << meta.dump(2) << "\n";
    return 0;
}

int run_verify(const std::string& check, const std::string& graph_path,
               const std::string& layout_path, const std::string& decomp_path, int q,
               uint64_t seed, const std::string& out_path) {
    json rep;
    rep["command"] = "verify";
    rep["check"] = check;
    rep["seed"] = seed;
    bool pass = false;
    json detail;

    if (check == "decomp") {
        Graph g = load_graph(graph_path);
        NicePathDecomposition npd = load_decomposition(decomp_path);
        auto bad = validate_decomposition(g, npd);
        pass = bad.empty();
        detail["violations"] = bad;
    } else if (check == "layout") {
        Graph g = load_graph(graph_path);
        LinearLayout pi = load_layout(layout_path);
        pass = layout_valid(g, pi);
        if (pass) detail["cutwidth"] = cutwidth_of(g, pi);
    } else if (check == "reduce") {
        // random cuts of the given graph: reduce output must represent its
        // input exhaustively over all right-side colorings
        Graph g = load_graph(graph_path);
        LinearLayout pi = layout_path.empty() ? identity_layout(g.n) : load_layout(layout_path);
        Rng rng(seed);
        Gf f{smallest_prime_at_least(static_cast<uint32_t>(q))};
        pass = true;
        int checked = 0;
        for (int it = 0; it < 24 && pass; ++it) {
            int i = static_cast<int>(rng.uniform(1, std::max(1, g.n - 1)));
            Cut cut = cut_at(g, pi, i);
            if (cut.size() > 6 || cut.right.size() > 6) continue;
            ++checked;
            PartialColoringSet S;
            S.domain = cut.left;
            int rows = 1 + static_cast<int>(rng.uniform(0, 40));
            for (int r = 0; r < rows; ++r) {
                std::vector<uint8_t> x;
                for (size_t k = 0; k < cut.left.size(); ++k)
                    x.push_back(static_cast<uint8_t>(rng.uniform(1, q)));
                bool dup = false;
                for (auto& e : S.rows) dup |= e == x;
                if (!dup) S.rows.push_back(x);
            }
            PartialColoringSet S2 = reduce(cut, S, f);
            size_t bound = 1;
            for (int v : cut.left) bound *= cut.degree_of(v) + 1;
            if (S2.rows.size() > bound) pass = false;
            // exhaustive biconditional over y
            std::vector<int> y(cut.right.size(), 1);
            for (;;) {
                auto compat = [&](const std::vector<uint8_t>& x) {
                    for (auto [u, w] : cut.crossing) {
                        size_t iu = std::lower_bound(cut.left.begin(), cut.left.end(), u) -
                                    cut.left.begin();
                        size_t iw = std::lower_bound(cut.right.begin(), cut.right.end(), w) -
                                    cut.right.begin();
                        if (x[iu] == y[iw]) return false;
                    }
                    return true;
                };
                bool a = false, b = false;
                for (auto& x : S.rows)
                    if (compat(x)) { a = true; break; }
                for (auto& x : S2.rows)
                    if (compat(x)) { b = true; break; }
                if (a != b) {
                    pass = false;
                    detail["counterexample_cut"] = i;
                    break;
                }
                size_t k = 0;
                while (k < y.size() && ++y[k] > q) y[k++] = 1;
                if (k == y.size() || y.empty()) break;
            }
        }
        detail["cuts_checked"] = checked;
    } else if (check == "rank") {
        Graph g = load_graph(graph_path);
        LinearLayout pi = layout_path.empty() ? identity_layout(g.n) : load_layout(layout_path);
        Rng rng(seed);
        uint32_t prime = smallest_prime_at_least(static_cast<uint32_t>(q));
        pass = true;
        for (int it = 0; it < 16 && pass; ++it) {
            int i = static_cast<int>(rng.uniform(1, std::max(1, g.n - 1)));
            Cut cut = cut_at(g, pi, i);
            if (cut.left.size() > 3 || cut.right.size() > 3) continue;
            int rank = rank_of_Mprime(cut, q, prime);
            size_t bound = 1;
            for (int v : cut.left) bound *= cut.degree_of(v) + 1;
            if (static_cast<size_t>(rank) > bound) {
                pass = false;
                detail["counterexample_cut"] = i;
            }
        }
    } else if (check == "table") {
        Graph g = load_graph(graph_path);
        NicePathDecomposition npd = decomp_path.empty()
                                        ? layout_to_nice_decomposition(g, identity_layout(g.n))
                                        : load_decomposition(decomp_path);
        Rng rng(seed);
        WeightFunction w = sample_weights(g, q, rng);
        uint32_t prime = 1000003;
        RandRunner run(g, npd, q, w, prime);
        pass = true;
        while (!run.done() && pass) {
            run.step();
            auto oracle = oracle_table_all(g, npd, run.bag_index(), q, w, oracle_budget());
            const TTable& t = run.table();
            std::vector<int> Ls, Rs;
            for (size_t k = 0; k < t.bag.size(); ++k) (t.in_L[k] ? Ls : Rs).push_back(t.bag[k]);
            std::sort(Ls.begin(), Ls.end());
            std::sort(Rs.begin(), Rs.end());
            size_t nonzero = 0;
            for (auto [key, val] : t.entries) {
                int64_t z = static_cast<int64_t>(key / t.index_size);
                auto digits = t.unpack(key % t.index_size);
                std::vector<int> dv(Ls.size()), ev(Rs.size());
                for (size_t k = 0; k < t.bag.size(); ++k) {
                    auto& side = t.in_L[k] ? Ls : Rs;
                    auto& vec = t.in_L[k] ? dv : ev;
                    size_t pos =
                        std::lower_bound(side.begin(), side.end(), t.bag[k]) - side.begin();
                    vec[pos] = digits[k];
                }
                auto it = oracle.find({z, dv, ev});
                if (it == oracle.end() || it->second.mod_u32(prime) != val) {
                    pass = false;
                    detail["counterexample_bag"] = run.bag_index();
                    break;
                }
                ++nonzero;
            }
            size_t oracle_nonzero = 0;
            for (auto& [k, v] : oracle)
                if (v.mod_u32(prime) != 0) ++oracle_nonzero;
            if (oracle_nonzero != nonzero) {
                pass = false;
                detail["counterexample_bag"] = run.bag_index();
            }
        }
    } else if (check == "mprime") {
        Graph g = load_graph(graph_path);
        LinearLayout pi = layout_path.empty() ? identity_layout(g.n) : load_layout(layout_path);
        Rng rng(seed);
        uint32_t prime = smallest_prime_at_least(static_cast<uint32_t>(q));
        pass = true;
        for (int it = 0; it < 16 && pass; ++it) {
            int i = static_cast<int>(rng.uniform(0, g.n));
            Cut cut = cut_at(g, pi, i);
            if (cut.left.size() > 4 || cut.right.size() > 4) continue;
            std::vector<int> x, y;
            for (size_t k = 0; k < cut.left.size(); ++k)
                x.push_back(static_cast<int>(rng.uniform(1, q)));
            for (size_t k = 0; k < cut.right.size(); ++k)
                y.push_back(static_cast<int>(rng.uniform(1, q)));
            bool proper = true;
            for (auto [u, w2] : cut.crossing) {
                size_t iu = std::lower_bound(cut.left.begin(), cut.left.end(), u) - cut.left.begin();
                size_t iw = std::lower_bound(cut.right.begin(), cut.right.end(), w2) - cut.right.begin();
                if (x[iu] == y[iw]) proper = false;
            }
            bool nonzero = eval_Mprime(cut, x, y, q, prime) != 0;
            if (nonzero != proper) {
                pass = false;
                detail["counterexample_cut"] = i;
            }
        }
    } else if (check == "hcol") {
        CrossoverGadget h = build_hcol();
        pass = true;
        // all nine boundary classes extend, and no proper coloring breaks a
        // terminal pair
        ColorLists l0 = full_lists(h.g.n, 3);
        for (int a = 1; a <= 3 && pass; ++a)
            for (int b = 1; b <= 3 && pass; ++b) {
                ColorLists l = l0;
                l[h.u] = l[h.u2] = 1u << (a - 1);
                l[h.v] = l[h.v2] = 1u << (b - 1);
                if (count_proper_colorings(h.g, 3, l).is_zero()) {
                    pass = false;
                    detail["unextendable_class"] = {a, b};
                }
            }
        if (pass) {
            // forcing: pinning unequal pairs must leave nothing
            for (int a = 1; a <= 3 && pass; ++a)
                for (int b = 1; b <= 3 && pass; ++b) {
                    if (a == b) continue;
                    ColorLists l = l0;
                    l[h.u] = 1u << (a - 1);
                    l[h.u2] = 1u << (b - 1);
                    if (!count_proper_colorings(h.g, 3, l).is_zero()) pass = false;
                }
        }
    } else if (check == "pathgadget") {
        pass = true;
        for (int m = 1; m <= 3 && pass; ++m) {
            for (int qq : {3, 4}) {
                std::vector<int> c(m, 1);
                for (;;) {
                    ListColoringInstance inst = path_gadget(c, qq);
                    std::vector<int> dvec(m, 1);
                    for (;;) {
                        ColorLists l = inst.lists;
                        bool empty = false;
                        for (int k = 0; k < m; ++k) {
                            l[inst.distinguished[k]] &= ~(1u << (dvec[k] - 1));
                            if (!l[inst.distinguished[k]]) empty = true;
                        }
                        bool col = !empty && !count_proper_colorings(inst.g, qq, l).is_zero();
                        if (col != (dvec != c)) {
                            pass = false;
                            break;
                        }
                        size_t k = 0;
                        while (k < static_cast<size_t>(m) && ++dvec[k] > qq) dvec[k++] = 1;
                        if (k == static_cast<size_t>(m)) break;
                    }
                    if (!pass) break;
                    size_t k = 0;
                    while (k < static_cast<size_t>(m) && ++c[k] > qq) c[k++] = 1;
                    if (k == static_cast<size_t>(m)) break;
                }
                if (!pass) break;
            }
        }
    } else if (check == "chain") {
        pass = true;
        for (int qq = 2; qq <= 4 && pass; ++qq) {
            CliqueChain ch = chain_of_cliques(3, qq);
            ColorLists l = full_lists(ch.g.n, qq);
            l[ch.terminals[0]] = 1;          // pin terminal 1 to color 1
            l[ch.terminals[2]] = ~1u & ((1u << qq) - 1);  // forbid color 1 at terminal 3
            if (!count_proper_colorings(ch.g, qq, l).is_zero()) pass = false;
            int dmax = 0;
            for (int v = 1; v <= ch.g.n; ++v) dmax = std::max(dmax, ch.g.degree(v));
            if (dmax != 2 * (qq - 1)) pass = false;
        }
    } else if (check == "isolation") {
        Graph g = load_graph(graph_path);
        int trials = 50;
        int hits = 0;
        for (int t = 0; t < trials; ++t) {
            Rng rng = Rng(seed).split(t);
            WeightFunction w = sample_weights(g, q, rng);
            uint32_t prime = random_prime_31(rng);
            auto npd = layout_to_nice_decomposition(g, identity_layout(g.n));
            auto pg = compute_PG_all(g, npd, q, w, prime);
            for (auto& [z, v] : pg)
                if (v) { ++hits; break; }
        }
        detail["success_fraction"] = static_cast<double>(hits) / trials;
        pass = hits >= trials * 2 / 5;
    } else {
        throw std::runtime_error("unknown check: " + check);
    }

    rep["pass"] = pass;
    rep["detail"] = detail;
    emit(rep, out_path);
    return pass ? 0 : 1;
}

int run_bench(int q, uint64_t seed, int trials, const std::string& out_path) {
    BenchReport br = cutcol::run_bench(q, seed, trials);
    json rep;
    rep["command"] = "bench";
    rep["q"] = q;
    rep["seed"] = seed;
    json rows = json::array();
    for (const auto& r : br.rows) {
        rows.push_back({{"name", r.name},
                        {"family", r.family},
                        {"n", r.n},
                        {"m", r.m},
                        {"cutwidth", r.ctw},
                        {"pathwidth", r.pw},
                        {"rand_ms", r.rand_ms},
                        {"det_ms", r.det_ms},
                        {"rand_yes", r.rand_yes},
                        {"det_yes", r.det_yes},
                        {"qpw_refused", r.qpw_refused}});
    }
    rep["instances"] = rows;
    rep["growth_factor_per_cutwidth"] = br.growth_factor;
    emit(rep, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact q-coloring solvers over small edge separators"};
    app.require_subcommand(1);

    // solve
    auto* solve = app.add_subcommand("solve", "decide q-colorability");
    std::string alg = "det", graph_path, layout_path, decomp_path, auto_layout, out_path;
    int q = 3, trials = 64, jobs = 1;
    uint64_t seed = 0;
    size_t skip_reduce = 0;
    solve->add_option("--alg", alg, "det | rand | brute")->required();
    solve->add_option("--q", q, "number of colors")->required();
    solve->add_option("--graph", graph_path)->required();
    solve->add_option("--layout", layout_path);
    solve->add_option("--decomp", decomp_path);
    solve->add_option("--auto-layout", auto_layout, "greedy | exact (explicit opt-in)");
    solve->add_option("--trials", trials, "randomized trials (default 64)");
    solve->add_option("--seed", seed, "rng seed (default 0)");
    solve->add_option("--jobs", jobs, "parallel trial workers");
    solve->add_option("--skip-reduce-below", skip_reduce,
                      "skip reduce at cuts where the table has at most this many rows");
    solve->add_option("--out", out_path, "write the JSON report here instead of stdout");

    // gen
    auto* gen = app.add_subcommand("gen", "compile CNF into a benchmark instance");
    std::string family, cnf_path, out_dir;
    int dparam = 5, pparam = 1;
    bool mini = false;
    gen->add_option("--family", family, "planar3col | degree")->required();
    gen->add_option("--cnf", cnf_path)->required();
    gen->add_option("--out", out_dir, "output directory")->required();
    gen->add_option("--d", dparam, "degree bound (degree family, odd >= 5)");
    gen->add_option("--p", pparam, "group-size parameter (degree family)");
    gen->add_flag("--mini", mini, "test-only chain-length trimming");

    // verify
    auto* verify = app.add_subcommand("verify", "oracle cross-checks");
    std::string check;
    verify->add_option("--check", check,
                       "decomp|layout|reduce|rank|mprime|table|hcol|pathgadget|chain|isolation")
        ->required();
    verify->add_option("--graph", graph_path);
    verify->add_option("--layout", layout_path);
    verify->add_option("--decomp", decomp_path);
    verify->add_option("--q", q);
    verify->add_option("--seed", seed);
    verify->add_option("--out", out_path);

    // bench
    auto* bench = app.add_subcommand("bench", "timing corpus and growth fit");
    int bench_q = 8, bench_trials = 1;
    bench->add_option("--q", bench_q, "colors (default 8)");
    bench->add_option("--trials", bench_trials, "randomized trials per instance (default 1)");
    bench->add_option("--seed", seed);
    bench->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (solve->parsed())
            return run_solve(alg, q, graph_path, layout_path, decomp_path, auto_layout, trials,
                             seed, jobs, skip_reduce, out_path);
        if (gen->parsed()) return run_gen(family, cnf_path, out_dir, dparam, pparam, mini, out_path);
        if (verify->parsed())
            return run_verify(check, graph_path, layout_path, decomp_path, q, seed, out_path);
        if (bench->parsed()) return run_bench(bench_q, seed, bench_trials, out_path);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
