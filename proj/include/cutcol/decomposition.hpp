#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "cutcol/graph.hpp"
#include "cutcol/rng.hpp"

namespace cutcol {

// Event stream of a nice path decomposition. The first and last bags are
// implicitly empty; every event transforms the current bag.
struct Event {
    enum Kind { IntroduceVertex, IntroduceEdge, Forget } kind;
    int u = 0;
    int v = 0;  // second endpoint for IntroduceEdge, else unused

    static Event iv(int v) { return {IntroduceVertex, v, 0}; }
    static Event ie(int u, int v) { return {IntroduceEdge, u, v}; }
    static Event fv(int v) { return {Forget, v, 0}; }

    bool operator==(const Event& o) const { return kind == o.kind && u == o.u && v == o.v; }
};

struct NicePathDecomposition {
    std::vector<Event> events;
};

// Vertices introduced in layout order; after v_i all edges to earlier
// vertices are introduced (earlier neighbor in position order); a vertex is
// forgotten directly after the edge introduction that finished its last
// incident edge. Requires a graph with no isolated vertices.
NicePathDecomposition layout_to_nice_decomposition(const Graph& g, const LinearLayout& pi);

// Empty list means valid. Checks: endpoints in range, vertices introduced and
// forgotten exactly once in order, edges introduced exactly once with both
// endpoints in the bag, full coverage of vertices and edges.
std::vector<std::string> validate_decomposition(const Graph& g, const NicePathDecomposition& npd);

// Max bag size minus one; 0 for an empty event list (callers can see the
// empty case via npd.events.empty() and flag it in reports).
int pathwidth_of(const NicePathDecomposition& npd);

// Valid decomposition with randomized introduce order, edge placement and
// forget delays; used to exercise solver transitions on shapes a layout
// never produces.
NicePathDecomposition random_nice_decomposition(const Graph& g, Rng& rng);

// file format: one event per line: "IV <v>" / "IE <u> <v>" / "FV <v>"
NicePathDecomposition read_decomposition(std::istream& in);
void write_decomposition(std::ostream& out, const NicePathDecomposition& npd);
NicePathDecomposition load_decomposition(const std::string& path);
void save_decomposition(const std::string& path, const NicePathDecomposition& npd);

}  // namespace cutcol
