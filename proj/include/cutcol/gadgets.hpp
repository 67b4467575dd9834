#pragma once

#include <vector>

#include "cutcol/graph.hpp"
#include "cutcol/oracle.hpp"

namespace cutcol {

// List-coloring instance with tagged vertices (who produced what).
struct VertexRole {
    enum Kind {
        VarT, VarF,          // variable-path vertices T_{i,j} / F_{i,j}
        ClauseA, ClauseB,    // clause-path vertices a_{j,k} / b_{j,k}
        ChainTerminal, ChainInner,
        PathPi, PathConn, PathEnd,
        CrossTerminal, CrossInner, Subdivision,
        Palette, Other
    } kind = Other;
    int i = 0, j = 0, k = 0;
};

struct ListColoringInstance {
    Graph g;
    ColorLists lists;                 // index 1..n
    std::vector<VertexRole> roles;    // index 1..n
    std::vector<int> distinguished;   // path gadgets: pi_1..pi_m
};

// 13-vertex planar crossover gadget for 3-coloring with terminals
// u=1, v=2, u'=3, v'=4 on the outer face in this cyclic order. Every proper
// 3-coloring gives u,u' equal colors and v,v' equal colors, and every
// boundary coloring with those equalities extends to the whole gadget.
struct CrossoverGadget {
    Graph g;        // 13 vertices
    int u = 1, v = 2, u2 = 3, v2 = 4;
};
CrossoverGadget build_hcol();

// t disjoint q-cliques; terminal of clique i+1 joined to the q-1 non-terminal
// vertices of clique i. All terminals share one color in any proper
// q-coloring.
struct CliqueChain {
    Graph g;
    std::vector<int> terminals;            // z_1..z_t
    std::vector<std::vector<int>> inner;   // non-terminals per clique
};
CliqueChain chain_of_cliques(int t, int q);

// Path gadget blocking exactly the color tuple `c` on its distinguished
// vertices: a proper list-coloring avoiding (d_1..d_m) on (pi_1..pi_m)
// exists iff (d) != (c). Built from a forced "pending" signal that only a
// hit pi_k = c_k can dissolve.
ListColoringInstance path_gadget(const std::vector<int>& c, int q);

}  // namespace cutcol
