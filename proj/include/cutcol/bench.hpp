#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cutcol/graph.hpp"

namespace cutcol {

// Benchmark corpus: a scaling family whose cuts spread over distinct vertices
// with bounded bag sizes (drives the per-unit-cutwidth growth fit), and a hub
// family with wide bags but concentrated cuts (where the plain q^pw dynamic
// program is refused and the deterministic solver still runs).
struct BenchInstance {
    std::string name;
    std::string family;  // "scaling" | "hub"
    Graph g;
    int ctw = 0;  // measured on the natural layout (identity order)
};

std::vector<BenchInstance> bench_corpus();

struct BenchRow {
    std::string name;
    std::string family;
    int n = 0, m = 0, ctw = 0, pw = 0;
    double rand_ms = 0;
    double det_ms = -1;           // -1 = not run
    bool rand_yes = false, det_yes = false;
    bool qpw_refused = false;     // q^pw above the oracle budget
};

struct BenchReport {
    int q = 8;
    uint64_t seed = 0;
    std::vector<BenchRow> rows;
    double growth_factor = 0;  // fitted per-unit-cutwidth time factor (scaling family)
};

BenchReport run_bench(int q, uint64_t seed, int trials);

}  // namespace cutcol
