#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cutcol/cnf.hpp"
#include "cutcol/decomposition.hpp"
#include "cutcol/gadgets.hpp"
#include "cutcol/graph.hpp"

namespace cutcol {

// Combinatorial stand-in for the column drawing: every vertex lives in a
// cell (row 1..n+1, column 1..m); crossings are recorded per edge pair with
// an order key along each edge. Chains wind down and up inside each column;
// their connector edges carry the row-line crossings, clause paths descend
// across variable-path edges, and attachment edges cross the connector pairs
// of the lanes they traverse.
struct CellDrawing {
    int nrows = 0, ncols = 0;
    std::vector<std::pair<int, int>> cell;  // 1-based vertex -> (row, col)
    struct Crossing {
        int e1 = -1, e2 = -1;    // indices into g.edges; e2 is always a chain edge
        int key1 = 0, key2 = 0;  // position along e1 / e2 in stored orientation
        int row = 0, col = 0;
        bool clause_side = false;  // e1 belongs to a clause path
    };
    std::vector<Crossing> crossings;
    // orientation used by the keys, per edge index (from, to); (0,0) = unused
    std::vector<std::pair<int, int>> oriented;
};

// step (I): CNF -> List-3-Coloring with variable paths and clause paths
ListColoringInstance cnf_to_list3col(const CnfFormula& phi);

// step (II) output: plain 3-coloring instance with its drawing and the
// column-major layout
struct PlainInstance {
    Graph g;
    std::vector<VertexRole> roles;
    CellDrawing drawing;
    LinearLayout layout;  // pi_2
    CnfFormula formula;
};
PlainInstance list3col_to_3col(const ListColoringInstance& inst, const CnfFormula& phi);

// final artifact of either family
struct GadgetInstance {
    Graph graph;
    std::optional<LinearLayout> layout;       // family 1 certificate
    std::optional<NicePathDecomposition> npd; // family 2 certificate
    CnfFormula formula;
    std::string family;
    std::map<std::string, int64_t> provenance;  // vertex counts per gadget type
    std::map<std::string, int64_t> params;
};

// step (III): replace every crossing by the crossover gadget; the emitted
// layout is column-major over the enriched cells
GadgetInstance planarize_3col(const PlainInstance& inst);

// whole pipeline (I) -> (II) -> (III)
GadgetInstance cnf_to_planar3col(const CnfFormula& phi);

// --- family 2: bounded-degree construction over clique chains ---

struct DegreeGenOptions {
    // Test-only miniaturization: trim chains to the wiring slots actually
    // used. Production mode (false) uses the full lengths M and N*M.
    bool mini = false;
};

GadgetInstance sat_to_degree_coloring(const CnfFormula& phi, int d, int p,
                                      const DegreeGenOptions& opts = {});

}  // namespace cutcol
