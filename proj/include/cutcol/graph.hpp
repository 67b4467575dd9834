#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace cutcol {

// Simple undirected graph on vertices 1..n. Edges are stored canonically with
// the smaller endpoint first, sorted, no duplicates, no self-loops.
struct Graph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;

    Graph() = default;
    Graph(int n_, std::vector<std::pair<int, int>> edges_);

    int m() const { return static_cast<int>(edges.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(int u, int v) const;
    std::vector<int> isolated_vertices() const;

    // Induced copy without the given vertices; survivors renumbered 1..n',
    // old id of new vertex i returned in old_id[i].
    Graph without_vertices(const std::vector<int>& drop, std::vector<int>* old_id = nullptr) const;

private:
    std::vector<std::vector<int>> adj_;
};

// Position -> vertex permutation of [1..n].
struct LinearLayout {
    std::vector<int> order;

    int n() const { return static_cast<int>(order.size()); }
    // position of each vertex, 1-based; index 0 unused
    std::vector<int> positions() const;
};

bool layout_valid(const Graph& g, const LinearLayout& pi);

// The i'th cut of a layout: edges with one endpoint at position <= i and the
// other after i, each stored (left, right) in layout orientation.
struct Cut {
    int index = 0;
    std::vector<std::pair<int, int>> crossing;  // (left endpoint, right endpoint)
    std::vector<int> left;                      // X_i, sorted by vertex id
    std::vector<int> right;                     // Y_i, sorted by vertex id

    int size() const { return static_cast<int>(crossing.size()); }
    // edges of the cut incident to v
    int degree_of(int v) const;
};

Cut cut_at(const Graph& g, const LinearLayout& pi, int i);
int cutwidth_of(const Graph& g, const LinearLayout& pi);

// --- file formats ---
// graph:  "p edge <n> <m>" header, "e <u> <v>" lines, "c" comments
// layout: "layout <n>" then the permutation in position order

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);
Graph load_graph(const std::string& path);
void save_graph(const std::string& path, const Graph& g);

LinearLayout read_layout(std::istream& in);
void write_layout(std::ostream& out, const LinearLayout& pi);
LinearLayout load_layout(const std::string& path);
void save_layout(const std::string& path, const LinearLayout& pi);

// small constructions used all over the tests
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);
Graph petersen_graph();

}  // namespace cutcol
