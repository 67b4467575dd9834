#include "cutcol/decomposition.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace cutcol {

NicePathDecomposition layout_to_nice_decomposition(const Graph& g, const LinearLayout& pi) {
    if (!layout_valid(g, pi)) throw std::invalid_argument("invalid layout");
    if (!g.isolated_vertices().empty())
        throw std::invalid_argument("graph has isolated vertices; strip them first");
    auto pos = pi.positions();
    NicePathDecomposition npd;
    std::vector<int> remaining(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) remaining[v] = g.degree(v);
    for (int i = 0; i < g.n; ++i) {
        int v = pi.order[i];
        npd.events.push_back(Event::iv(v));
        // back edges in position order of the earlier endpoint
        std::vector<int> earlier;
        for (int u : g.neighbors(v))
            if (pos[u] < pos[v]) earlier.push_back(u);
        std::sort(earlier.begin(), earlier.end(), [&](int a, int b) { return pos[a] < pos[b]; });
        for (int u : earlier) {
            npd.events.push_back(Event::ie(u, v));
            if (--remaining[u] == 0) npd.events.push_back(Event::fv(u));
            --remaining[v];
        }
        if (remaining[v] == 0) npd.events.push_back(Event::fv(v));
    }
    return npd;
}

std::vector<std::string> validate_decomposition(const Graph& g, const NicePathDecomposition& npd) {
    std::vector<std::string> bad;
    std::vector<int> state(g.n + 1, 0);  // 0 = unseen, 1 = in bag, 2 = forgotten
    std::vector<char> seen_edge(g.edges.size(), 0);
    auto edge_index = [&](int u, int v) -> int {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(g.edges.begin(), g.edges.end(), std::make_pair(u, v));
        if (it == g.edges.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - g.edges.begin());
    };
    int step = 0;
    for (const Event& e : npd.events) {
        ++step;
        auto where = " at event " + std::to_string(step);
        switch (e.kind) {
            case Event::IntroduceVertex:
                if (e.u < 1 || e.u > g.n) { bad.push_back("introduced vertex out of range" + where); break; }
                if (state[e.u] == 1) bad.push_back("vertex " + std::to_string(e.u) + " introduced twice" + where);
                else if (state[e.u] == 2) bad.push_back("vertex " + std::to_string(e.u) + " reintroduced after forget" + where);
                else state[e.u] = 1;
                break;
            case Event::IntroduceEdge: {
                if (e.u < 1 || e.u > g.n || e.v < 1 || e.v > g.n) { bad.push_back("edge endpoint out of range" + where); break; }
                int idx = edge_index(e.u, e.v);
                if (idx < 0) { bad.push_back("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} not in graph" + where); break; }
                if (state[e.u] != 1 || state[e.v] != 1)
                    bad.push_back("endpoint not in bag for edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "}" + where);
                if (seen_edge[idx]) bad.push_back("edge {" + std::to_string(e.u) + "," + std::to_string(e.v) + "} introduced twice" + where);
                seen_edge[idx] = 1;
                break;
            }
            case Event::Forget:
                if (e.u < 1 || e.u > g.n) { bad.push_back("forgotten vertex out of range" + where); break; }
                if (state[e.u] != 1) bad.push_back("vertex " + std::to_string(e.u) + " forgotten while not in bag" + where);
                else state[e.u] = 2;
                break;
        }
    }
    for (int v = 1; v <= g.n; ++v) {
        if (state[v] == 0) bad.push_back("vertex " + std::to_string(v) + " never introduced");
        else if (state[v] == 1) bad.push_back("vertex " + std::to_string(v) + " never forgotten");
    }
    for (size_t i = 0; i < seen_edge.size(); ++i)
        if (!seen_edge[i])
            bad.push_back("edge {" + std::to_string(g.edges[i].first) + "," +
                          std::to_string(g.edges[i].second) + "} never introduced");
    return bad;
}

int pathwidth_of(const NicePathDecomposition& npd) {
    int cur = 0, best = 0;
    for (const Event& e : npd.events) {
        if (e.kind == Event::IntroduceVertex) cur++;
        else if (e.kind == Event::Forget) cur--;
        best = std::max(best, cur);
    }
    return best == 0 ? 0 : best - 1;
}

NicePathDecomposition random_nice_decomposition(const Graph& g, Rng& rng) {
    if (!g.isolated_vertices().empty())
        throw std::invalid_argument("graph has isolated vertices");
    std::vector<int> order(g.n);
    for (int i = 0; i < g.n; ++i) order[i] = i + 1;
    for (int i = g.n - 1; i > 0; --i)
        std::swap(order[i], order[rng.uniform(0, i)]);

    NicePathDecomposition npd;
    std::vector<char> inbag(g.n + 1, 0);
    std::vector<int> remaining(g.n + 1, 0);
    for (int v = 1; v <= g.n; ++v) remaining[v] = g.degree(v);
    std::vector<std::pair<int, int>> pending;  // introducible edges
    for (int i = 0; i < g.n; ++i) {
        int v = order[i];
        npd.events.push_back(Event::iv(v));
        inbag[v] = 1;
        for (int u : g.neighbors(v))
            if (inbag[u]) pending.emplace_back(std::min(u, v), std::max(u, v));
        // introduce a random nonempty chunk of pending edges, but everything
        // pending must go in before the final vertex's bag closes
        while (!pending.empty()) {
            size_t k = static_cast<size_t>(rng.uniform(0, static_cast<int64_t>(pending.size()) - 1));
            auto [a, b] = pending[k];
            pending.erase(pending.begin() + k);
            npd.events.push_back(Event::ie(a, b));
            if (--remaining[a] == 0) { npd.events.push_back(Event::fv(a)); inbag[a] = 0; }
            if (--remaining[b] == 0) { npd.events.push_back(Event::fv(b)); inbag[b] = 0; }
            if (i + 1 < g.n && rng.uniform(0, 2) == 0) break;  // defer the rest past the next introduce
        }
    }
    return npd;
}

NicePathDecomposition read_decomposition(std::istream& in) {
    NicePathDecomposition npd;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        std::string tag;
        ss >> tag;
        if (tag == "IV") {
            int v; if (!(ss >> v)) throw std::runtime_error("bad IV line");
            npd.events.push_back(Event::iv(v));
        } else if (tag == "IE") {
            int u, v; if (!(ss >> u >> v)) throw std::runtime_error("bad IE line");
            npd.events.push_back(Event::ie(u, v));
        } else if (tag == "FV") {
            int v; if (!(ss >> v)) throw std::runtime_error("bad FV line");
            npd.events.push_back(Event::fv(v));
        } else {
            throw std::runtime_error("unknown event: " + line);
        }
    }
    return npd;
}

void write_decomposition(std::ostream& out, const NicePathDecomposition& npd) {
    for (const Event& e : npd.events) {
        switch (e.kind) {
            case Event::IntroduceVertex: out << "IV " << e.u << '\n'; break;
            case Event::IntroduceEdge: out << "IE " << e.u << ' ' << e.v << '\n'; break;
            case Event::Forget: out << "FV " << e.u << '\n'; break;
        }
    }
}

NicePathDecomposition load_decomposition(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    return read_decomposition(f);
}

void save_decomposition(const std::string& path, const NicePathDecomposition& npd) {
    std::ofstream f(path);
    if (!f) throw std::runtime_error("cannot open " + path);
    write_decomposition(f, npd);
}

}  // namespace cutcol
