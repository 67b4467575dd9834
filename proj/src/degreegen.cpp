#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "cutcol/gadgetgen.hpp"

namespace cutcol {

namespace {

int64_t ipow_checked(int64_t b, int e, int64_t cap) {
    int64_t r = 1;
    for (int i = 0; i < e; ++i) {
        r *= b;
        if (r > cap) throw std::invalid_argument("degree-construction parameters too large");
    }
    return r;
}

// incremental builder: vertex ids are assigned in introduction order, so the
// construction order doubles as a low-cutwidth linear layout
struct Builder {
    std::vector<std::pair<int, int>> edges;
    std::vector<Event> events;
    int n = 0;

    int iv() {
        events.push_back(Event::iv(++n));
        return n;
    }
    void ie(int u, int v) {
        events.push_back(Event::ie(u, v));
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    void fv(int v) { events.push_back(Event::fv(v)); }
};

struct ChainState {
    int terminal = 0;   // frontier terminal id
    int64_t index = 1;  // 1-based clique index of the frontier
    int q;

    // introduce the current clique's non-terminals and edges, move the
    // frontier one clique forward, release everything behind it
    void advance(Builder& b) {
        std::vector<int> nts;
        for (int a = 1; a < q; ++a) nts.push_back(b.iv());
        for (int x : nts) b.ie(terminal, x);
        for (size_t a = 0; a < nts.size(); ++a)
            for (size_t c = a + 1; c < nts.size(); ++c) b.ie(nts[a], nts[c]);
        int nxt = b.iv();
        for (int x : nts) b.ie(nxt, x);
        b.fv(terminal);
        for (int x : nts) b.fv(x);
        terminal = nxt;
        ++index;
    }
    // close the chain: introduce the last clique's interior and forget it all
    void finish(Builder& b) {
        std::vector<int> nts;
        for (int a = 1; a < q; ++a) nts.push_back(b.iv());
        for (int x : nts) b.ie(terminal, x);
        for (size_t a = 0; a < nts.size(); ++a)
            for (size_t c = a + 1; c < nts.size(); ++c) b.ie(nts[a], nts[c]);
        b.fv(terminal);
        for (int x : nts) b.fv(x);
        terminal = 0;
    }
};

}  // namespace

GadgetInstance sat_to_degree_coloring(const CnfFormula& phi, int d, int p,
                                      const DegreeGenOptions& opts) {
    if (d < 5 || d % 2 == 0) throw std::invalid_argument("d must be an odd integer >= 5");
    if (p < 1) throw std::invalid_argument("p must be >= 1");
    auto badf = phi.validate();
    if (!badf.empty()) throw std::invalid_argument("malformed formula: " + badf.front());
    if (!phi.every_variable_occurs())
        throw std::invalid_argument("every variable must occur in some clause");
    int n = phi.nvars, m = phi.nclauses();
    if (n < 1 || m < 1) throw std::invalid_argument("need at least one variable and one clause");

    int q = (d + 1) / 2;  // q_d = floor(d/2) + 1
    int s = phi.max_clause_size();
    // beta = floor(p log2 q): largest b with 2^b <= q^p
    int64_t qp = ipow_checked(q, p, int64_t(1) << 40);
    int beta = 0;
    while ((int64_t(1) << (beta + 1)) <= qp) ++beta;
    int t = (n + beta - 1) / beta;
    std::vector<std::pair<int, int>> group_range(t + 1);  // [lo, hi] variables
    for (int g = 1; g <= t; ++g)
        group_range[g] = {(g - 1) * beta + 1, std::min(g * beta, n)};
    auto group_of = [&](int var) { return (var - 1) / beta + 1; };

    int64_t slots_per_clause = ipow_checked(q, p * s, 1 << 24);
    int N = 3 * p * s + 2;  // uniform bound on the path-gadget size

    // enumerate bad tuples per clause
    struct Wire {
        int group, chain;  // chain in 1..p
    };
    struct GadgetPlan {
        int clause;       // 1-based
        int64_t r;        // 1-based tuple index within the clause block
        std::vector<int> tuple;  // blocked colors, (group asc, chain asc)
        std::vector<Wire> wires;
    };
    std::vector<GadgetPlan> plans;
    for (int j = 1; j <= m; ++j) {
        std::vector<int> groups;
        for (int lit : phi.clauses[j - 1]) groups.push_back(group_of(std::abs(lit)));
        std::sort(groups.begin(), groups.end());
        groups.erase(std::unique(groups.begin(), groups.end()), groups.end());
        int s2 = static_cast<int>(groups.size());
        int64_t tuples = ipow_checked(q, p * s2, 1 << 24);
        for (int64_t r = 1; r <= tuples; ++r) {
            int64_t val = r - 1;
            std::vector<int> tuple(p * s2);
            for (int& c : tuple) {
                c = static_cast<int>(val % q) + 1;
                val /= q;
            }
            // decode group assignments; out-of-image colorings are bad
            bool invalid = false;
            std::vector<uint32_t> assign(s2, 0);
            for (int l = 0; l < s2 && !invalid; ++l) {
                int64_t a = 0;
                for (int j2 = p - 1; j2 >= 0; --j2) a = a * q + (tuple[l * p + j2] - 1);
                int bits = group_range[groups[l]].second - group_range[groups[l]].first + 1;
                if (a >= (int64_t(1) << bits)) invalid = true;
                else assign[l] = static_cast<uint32_t>(a);
            }
            bool bad;
            if (invalid) {
                bad = true;
            } else {
                bool sat = false;
                for (int lit : phi.clauses[j - 1]) {
                    int var = std::abs(lit);
                    int g = group_of(var);
                    int l = static_cast<int>(std::lower_bound(groups.begin(), groups.end(), g) -
                                             groups.begin());
                    int bit = var - group_range[g].first;
                    bool value = (assign[l] >> bit) & 1;
                    if (value == (lit > 0)) { sat = true; break; }
                }
                bad = !sat;
            }
            if (!bad) continue;
            GadgetPlan plan;
            plan.clause = j;
            plan.r = r;
            plan.tuple = tuple;
            for (int l = 0; l < s2; ++l)
                for (int j2 = 1; j2 <= p; ++j2) plan.wires.push_back({groups[l], j2});
            plans.push_back(std::move(plan));
        }
    }

    // slot schedule: production walks every (clause, r) slot to keep the
    // wiring indices verbatim; mini keeps only the used slots
    int64_t total_slots = opts.mini ? static_cast<int64_t>(plans.size())
                                    : static_cast<int64_t>(m) * slots_per_clause;
    if (total_slots < 1) total_slots = 1;

    Builder b;
    // color chains + palette first
    std::vector<ChainState> color(q + 1);
    for (int c = 1; c <= q; ++c) {
        color[c].q = q;
        color[c].terminal = b.iv();
    }
    for (int c1 = 1; c1 <= q; ++c1)
        for (int c2 = c1 + 1; c2 <= q; ++c2) b.ie(color[c1].terminal, color[c2].terminal);
    // variable-encoding chains
    std::vector<std::vector<ChainState>> var(t + 1, std::vector<ChainState>(p + 1));
    for (int g = 1; g <= t; ++g)
        for (int j2 = 1; j2 <= p; ++j2) {
            var[g][j2].q = q;
            var[g][j2].terminal = b.iv();
        }

    size_t next_plan = 0;
    int64_t gadget_vertices = 0;
    int64_t color_base = 0;  // enforcement indices consumed by earlier slots
    for (int64_t sidx = 1; sidx <= total_slots; ++sidx) {
        if (sidx >= 2)
            for (int g = 1; g <= t; ++g)
                for (int j2 = 1; j2 <= p; ++j2) var[g][j2].advance(b);
        const GadgetPlan* plan = nullptr;
        if (opts.mini) {
            plan = &plans[static_cast<size_t>(sidx - 1)];
        } else if (next_plan < plans.size()) {
            int64_t here = (plans[next_plan].clause - 1) * slots_per_clause + plans[next_plan].r;
            if (here == sidx) plan = &plans[next_plan];
        }
        int advanced = 0;
        auto color_step = [&]() {  // frontier -> enforcement index color_base + advanced + 1
            int64_t target = color_base + advanced + 1;
            for (int c = 1; c <= q; ++c)
                while (color[c].index < target) color[c].advance(b);
            ++advanced;
        };
        if (plan) {
            ++next_plan;
            ListColoringInstance pg = path_gadget(plan->tuple, q);
            if (pg.g.n > N) throw std::logic_error("path gadget exceeds its size bound");
            gadget_vertices += pg.g.n;
            std::vector<int> ids(pg.g.n + 1, 0);
            std::vector<char> dist(pg.g.n + 1, 0);
            std::vector<int> dpos(pg.g.n + 1, 0);
            for (size_t l = 0; l < pg.distinguished.size(); ++l) {
                dist[pg.distinguished[l]] = 1;
                dpos[pg.distinguished[l]] = static_cast<int>(l);
            }
            for (int ell = 1; ell <= pg.g.n; ++ell) {
                color_step();
                ids[ell] = b.iv();
                if (ell > 1) b.ie(ids[ell - 1], ids[ell]);
                for (int c = 1; c <= q; ++c)
                    if (!(pg.lists[ell] & (1u << (c - 1)))) b.ie(ids[ell], color[c].terminal);
                if (dist[ell]) {
                    const Wire& w = plan->wires[dpos[ell]];
                    b.ie(ids[ell], var[w.group][w.chain].terminal);
                }
                if (ell > 1) b.fv(ids[ell - 1]);
            }
            b.fv(ids[pg.g.n]);
        }
        // production keeps the verbatim stride N per slot; mini trims the
        // unused enforcement slack
        if (!opts.mini)
            while (advanced < N) color_step();
        color_base += advanced;
    }
    // close every chain
    for (int g = 1; g <= t; ++g)
        for (int j2 = 1; j2 <= p; ++j2) var[g][j2].finish(b);
    for (int c = 1; c <= q; ++c) color[c].finish(b);

    GadgetInstance out;
    out.graph = Graph(b.n, std::move(b.edges));
    NicePathDecomposition npd;
    npd.events = std::move(b.events);
    out.npd = std::move(npd);
    out.formula = phi;
    out.family = "degree";
    out.params["q"] = q;
    out.params["d"] = d;
    out.params["p"] = p;
    out.params["s"] = s;
    out.params["t"] = t;
    out.params["beta"] = beta;
    out.params["N"] = N;
    out.params["slots"] = total_slots;
    out.params["mini"] = opts.mini ? 1 : 0;
    out.provenance["bad_tuples"] = static_cast<int64_t>(plans.size());
    out.provenance["gadget_vertices"] = gadget_vertices;
    out.provenance["variable_chains"] = static_cast<int64_t>(t) * p;
    out.provenance["color_chains"] = q;
    out.provenance["vertices"] = b.n;
    return out;
}

}  // namespace cutcol
