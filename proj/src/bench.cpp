#include "cutcol/bench.hpp"

#include <chrono>
#include <cmath>
#include <stdexcept>

#include "cutcol/decomposition.hpp"
#include "cutcol/detsolver.hpp"
#include "cutcol/oracle.hpp"
#include "cutcol/randsolver.hpp"

namespace cutcol {

namespace {

// distance-set graph on a fixed vertex count: edges {i, i+delta} for each
// delta in D; interior cuts have |D| distinct left endpoints per delta and
// cutwidth sum(D)
Graph band_graph(int n, const std::vector<int>& deltas) {
    std::vector<std::pair<int, int>> es;
    for (int d : deltas)
        for (int i = 1; i + d <= n; ++i) es.emplace_back(i, i + d);
    // keep consecutive vertices connected so nothing is isolated
    bool has1 = false;
    for (int d : deltas) has1 |= d == 1;
    if (!has1)
        for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

// k parallel strands a_i - b_i criss-crossing one hub gap; pw ~ k with a
// cut of k degree-1 endpoints at the hub
Graph hub_graph(int k) {
    int n = 2 * k;
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < k; ++i) es.emplace_back(i, i + 1);          // left path
    for (int i = k + 1; i < 2 * k; ++i) es.emplace_back(i, i + 1);  // right path
    for (int i = 1; i <= k; ++i) es.emplace_back(i, k + i);         // matching
    return Graph(n, std::move(es));
}

double ms_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

std::vector<BenchInstance> bench_corpus() {
    std::vector<BenchInstance> out;
    // scaling family: cutwidth 8..14, interior cut degrees <= 2, fixed n
    // (long bands so the peak-width region dominates the runtime)
    const int n = 24;
    std::vector<std::vector<int>> dsets = {
        {3, 4}, {3, 5}, {4, 5}, {4, 6}, {5, 6}, {5, 7}, {6, 7}};
    for (const auto& ds : dsets) {
        BenchInstance bi;
        bi.family = "scaling";
        bi.g = band_graph(n, ds);
        LinearLayout id;
        for (int v = 1; v <= n; ++v) id.order.push_back(v);
        bi.ctw = cutwidth_of(bi.g, id);
        bi.name = "band_ctw" + std::to_string(bi.ctw);
        out.push_back(std::move(bi));
    }
    for (int k : {9, 10}) {
        BenchInstance bi;
        bi.family = "hub";
        bi.g = hub_graph(k);
        LinearLayout id;
        for (int v = 1; v <= bi.g.n; ++v) id.order.push_back(v);
        bi.ctw = cutwidth_of(bi.g, id);
        bi.name = "hub" + std::to_string(k);
        out.push_back(std::move(bi));
    }
    return out;
}

BenchReport run_bench(int q, uint64_t seed, int trials) {
    BenchReport rep;
    rep.q = q;
    rep.seed = seed;
    auto corpus = bench_corpus();
    std::vector<double> xs, ys;
    for (auto& inst : corpus) {
        BenchRow row;
        row.name = inst.name;
        row.family = inst.family;
        row.n = inst.g.n;
        row.m = inst.g.m();
        row.ctw = inst.ctw;
        LinearLayout id;
        for (int v = 1; v <= inst.g.n; ++v) id.order.push_back(v);
        auto npd = layout_to_nice_decomposition(inst.g, id);
        row.pw = pathwidth_of(npd);
        // q^pw dynamic-programming comparison: the standard table has q^pw
        // points per bag boundary; refused when that exceeds the oracle budget
        long double qpw = std::pow(static_cast<long double>(q), row.pw);
        row.qpw_refused = qpw > static_cast<long double>(kDefaultBudget);

        auto t0 = std::chrono::steady_clock::now();
        auto rr = solve_pathwidth_rand(inst.g, npd, q, trials, seed);
        row.rand_ms = ms_since(t0);
        row.rand_yes = rr.yes;

        if (inst.family == "hub" || row.ctw <= 9) {
            DetOptions opts;  // reduce at every cut
            t0 = std::chrono::steady_clock::now();
            row.det_yes = solve_cutwidth_det(inst.g, id, q);
            row.det_ms = ms_since(t0);
            if (row.det_yes != row.rand_yes && rr.yes)
                throw std::logic_error("solver disagreement in bench");
            (void)opts;
        }
        if (inst.family == "scaling") {
            xs.push_back(row.ctw);
            ys.push_back(std::log2(std::max(row.rand_ms, 1e-3)));
        }
        rep.rows.push_back(std::move(row));
    }
    // least-squares slope of log2(time) against cutwidth
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < xs.size(); ++i) {
        sx += xs[i];
        sy += ys[i];
        sxx += xs[i] * xs[i];
        sxy += xs[i] * ys[i];
    }
    double k = xs.size();
    double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
    rep.growth_factor = std::pow(2.0, slope);
    return rep;
}

}  // namespace cutcol
