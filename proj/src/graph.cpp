#include "cutcol/graph.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cutcol {

Graph::Graph(int n_, std::vector<std::pair<int, int>> edges_) : n(n_), edges(std::move(edges_)) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edges) {
        if (u == v) throw std::invalid_argument("self-loop");
        if (u < 1 || u > n || v < 1 || v > n) throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(n + 1, {});
    for (auto [u, v] : edges) {
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 1 || u > n || v < 1 || v > n) return false;
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<int> Graph::isolated_vertices() const {
    std::vector<int> r;
    for (int v = 1; v <= n; ++v)
        if (adj_[v].empty()) r.push_back(v);
    return r;
}

Graph Graph::without_vertices(const std::vector<int>& drop, std::vector<int>* old_id) const {
    std::vector<bool> dead(n + 1, false);
    for (int v : drop) dead[v] = true;
    std::vector<int> newid(n + 1, 0), oldid(1, 0);
    int k = 0;
    for (int v = 1; v <= n; ++v)
        if (!dead[v]) { newid[v] = ++k; oldid.push_back(v); }
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : edges)
        if (!dead[u] && !dead[v]) es.emplace_back(newid[u], newid[v]);
    if (old_id) *old_id = oldid;
    return Graph(k, std::move(es));
}

std::vector<int> LinearLayout::positions() const {
    std::vector<int> pos(order.size() + 1, 0);
    for (int i = 0; i < static_cast<int>(order.size()); ++i) {
        int v = order[i];
        if (v < 1 || v > static_cast<int>(order.size()) || pos[v] != 0)
            throw std::invalid_argument("layout is not a permutation");
        pos[v] = i + 1;
    }
    return pos;
}

bool layout_valid(const Graph& g, const LinearLayout& pi) {
    if (pi.n() != g.n) return false;
    try {
        pi.positions();
    } catch (const std::invalid_argument&) {
        return false;
    }
    return true;
}

int Cut::degree_of(int v) const {
    int d = 0;
    for (auto [a, b] : crossing) d += (a == v) + (b == v);
    return d;
}

Cut cut_at(const Graph& g, const LinearLayout& pi, int i) {
    if (!layout_valid(g, pi)) throw std::invalid_argument("invalid layout");
    if (i < 0 || i > g.n) throw std::out_of_range("cut position out of range");
    auto pos = pi.positions();
    Cut c;
    c.index = i;
    for (auto [u, v] : g.edges) {
        int pu = pos[u], pv = pos[v];
        if (pu > pv) { std::swap(u, v); std::swap(pu, pv); }
        if (pu <= i && pv > i) {
            c.crossing.emplace_back(u, v);
            c.left.push_back(u);
            c.right.push_back(v);
        }
    }
    auto uniq = [](std::vector<int>& xs) {
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    };
    uniq(c.left);
    uniq(c.right);
    return c;
}

int cutwidth_of(const Graph& g, const LinearLayout& pi) {
    if (!layout_valid(g, pi)) throw std::invalid_argument("invalid layout");
    auto pos = pi.positions();
    // sweep: edge {u,v} crosses gaps pos[u] .. pos[v]-1
    std::vector<int> delta(g.n + 2, 0);
    for (auto [u, v] : g.edges) {
        int a = std::min(pos[u], pos[v]), b = std::max(pos[u], pos[v]);
        delta[a] += 1;
        delta[b] -= 1;
    }
    int cur = 0, best = 0;
    for (int i = 1; i <= g.n - 1; ++i) {
        cur += delta[i];
        best = std::max(best, cur);
    }
    return best;
}

// --- io ---

Graph read_graph(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<std::pair<int, int>> es;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "p") {
            std::string kind;
            int m;
            if (!(ss >> kind >> n >> m) || kind != "edge") throw std::runtime_error("bad graph header");
        } else if (tag == "e") {
            int u, v;
            if (!(ss >> u >> v)) throw std::runtime_error("bad edge line");
            es.emplace_back(u, v);
        } else {
            throw std::runtime_error("unknown line in graph file: " + line);
        }
    }
    if (n < 0) throw std::runtime_error("graph file missing header");
    return Graph(n, std::move(es));
}

void write_graph(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n << ' ' << g.m() << '\n';
    for (auto [u, v] : g.edges) out << "e " << u << ' ' << v << '\n';
}

Graph load_graph(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_graph(f);
}

void save_graph(const std::string& path, const Graph& g) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_graph(f, g);
}

LinearLayout read_layout(std::istream& in) {
    std::string tag;
    int n;
    if (!(in >> tag >> n) || tag != "layout") throw std::runtime_error("bad layout header");
    LinearLayout pi;
    pi.order.resize(n);
    for (int i = 0; i < n; ++i)
        if (!(in >> pi.order[i])) throw std::runtime_error("truncated layout file");
    return pi;
}

void write_layout(std::ostream& out, const LinearLayout& pi) {
    out << "layout " << pi.n() << '\n';
    for (int i = 0; i < pi.n(); ++i) out << pi.order[i] << (i + 1 == pi.n() ? '\n' : ' ');
}

LinearLayout load_layout(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_layout(f);
}

void save_layout(const std::string& path, const LinearLayout& pi) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_layout(f, pi);
}

Graph path_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
    return Graph(n, std::move(es));
}

Graph cycle_graph(int n) {
    auto es = path_graph(n).edges;
    if (n >= 3) es.emplace_back(1, n);
    return Graph(n, std::move(es));
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
    return Graph(n, std::move(es));
}

Graph petersen_graph() {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i + 1, (i + 1) % 5 + 1);        // outer 5-cycle
        es.emplace_back(i + 6, (i + 2) % 5 + 6);        // inner 5-cycle with step 2
        es.emplace_back(i + 1, i + 6);                  // spokes
    }
    return Graph(10, std::move(es));
}

}  // namespace cutcol
