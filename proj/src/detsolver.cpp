#include "cutcol/detsolver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace cutcol {

DegreeSequenceIndex DegreeSequenceIndex::for_cut(const Cut& cut) {
    DegreeSequenceIndex idx;
    idx.verts = cut.left;  // sorted by id
    for (int v : idx.verts) idx.caps.push_back(cut.degree_of(v));
    return idx;
}

std::vector<uint32_t> lh_row(const std::vector<uint8_t>& x, const DegreeSequenceIndex& idx, Gf f) {
    if (x.size() != idx.verts.size()) throw std::invalid_argument("coloring/index mismatch");
    size_t cols = idx.size();
    std::vector<uint32_t> row(cols);
    std::vector<std::vector<uint32_t>> pw(idx.caps.size());
    for (size_t k = 0; k < idx.caps.size(); ++k) {
        pw[k].resize(idx.caps[k] + 1);
        pw[k][0] = 1 % f.p;
        uint32_t base = f.from_int(x[k]);
        for (int e = 1; e <= idx.caps[k]; ++e) pw[k][e] = f.mul(pw[k][e - 1], base);
    }
    // s enumerated lexicographically: last coordinate runs fastest
    std::vector<int> s(idx.caps.size(), 0);
    for (size_t j = 0; j < cols; ++j) {
        uint32_t val = 1 % f.p;
        for (size_t k = 0; k < s.size(); ++k) val = f.mul(val, pw[k][s[k]]);
        row[j] = val;
        for (size_t k = s.size(); k-- > 0;) {
            if (++s[k] <= idx.caps[k]) break;
            s[k] = 0;
        }
    }
    return row;
}

PartialColoringSet reduce(const Cut& cut, const PartialColoringSet& S, Gf f) {
    if (S.domain != cut.left) throw std::invalid_argument("set domain does not match cut left side");
    DegreeSequenceIndex idx = DegreeSequenceIndex::for_cut(cut);
    std::vector<std::vector<uint32_t>> m;
    m.reserve(S.rows.size());
    for (const auto& x : S.rows) m.push_back(lh_row(x, idx, f));
    std::vector<size_t> picked = row_basis(m, f);
    PartialColoringSet out;
    out.domain = S.domain;
    out.rows.reserve(picked.size());
    for (size_t r : picked) out.rows.push_back(S.rows[r]);
    return out;
}

PartialColoringSet extend_table(const PartialColoringSet& prev, int v_i, const Graph& g,
                                const Cut& cut_i, int q) {
    PartialColoringSet out;
    out.domain = cut_i.left;
    // positions of the new domain inside (prev.domain, v_i)
    std::vector<int> src;  // -1 = v_i itself
    for (int v : out.domain) {
        if (v == v_i) { src.push_back(-1); continue; }
        auto it = std::lower_bound(prev.domain.begin(), prev.domain.end(), v);
        if (it == prev.domain.end() || *it != v)
            throw std::invalid_argument("new cut vertex missing from previous domain");
        src.push_back(static_cast<int>(it - prev.domain.begin()));
    }
    std::vector<int> nbr_pos;  // earlier neighbors of v_i, as positions in prev.domain
    for (int u : g.neighbors(v_i)) {
        auto it = std::lower_bound(prev.domain.begin(), prev.domain.end(), u);
        if (it != prev.domain.end() && *it == u)
            nbr_pos.push_back(static_cast<int>(it - prev.domain.begin()));
    }
    std::vector<uint8_t> nrow(out.domain.size());
    // dedup: pack rows into words when they fit, else fall back to strings
    int bits = q <= 3 ? 2 : q <= 15 ? 4 : 8;
    bool packable = out.domain.size() * bits <= 64;
    std::unordered_set<uint64_t> seen_packed;
    std::unordered_set<std::string> seen_str;
    auto fresh = [&](const std::vector<uint8_t>& r) {
        if (packable) {
            uint64_t key = 0;
            for (uint8_t c : r) key = key << bits | c;
            return seen_packed.insert(key).second;
        }
        return seen_str.insert(std::string(r.begin(), r.end())).second;
    };
    for (const auto& x : prev.rows) {
        for (int c = 1; c <= q; ++c) {
            bool ok = true;
            for (int p : nbr_pos)
                if (x[p] == c) { ok = false; break; }
            if (!ok) continue;
            for (size_t k = 0; k < src.size(); ++k)
                nrow[k] = src[k] < 0 ? static_cast<uint8_t>(c) : x[src[k]];
            if (fresh(nrow)) out.rows.push_back(nrow);
        }
    }
    return out;
}

bool solve_cutwidth_det(const Graph& g, const LinearLayout& pi, int q,
                        const DetOptions& opts, DetStats* stats) {
    if (q < 1) throw std::invalid_argument("q must be positive");
    if (!layout_valid(g, pi)) throw std::invalid_argument("invalid layout");
    Gf f{smallest_prime_at_least(static_cast<uint32_t>(q))};
    PartialColoringSet table;  // T'[0] = { empty vector } over X_0 = {}
    table.rows.push_back({});
    DetStats local;
    for (int i = 1; i <= g.n; ++i) {
        Cut ci = cut_at(g, pi, i);
        table = extend_table(table, pi.order[i - 1], g, ci, q);
        local.max_rows = std::max(local.max_rows, table.rows.size());
        if (opts.skip_reduce_below > 0 && table.rows.size() <= opts.skip_reduce_below) {
            local.reduces_skipped++;
        } else {
            local.max_columns = std::max(local.max_columns, DegreeSequenceIndex::for_cut(ci).size());
            table = reduce(ci, table, f);
            local.reduces_run++;
        }
    }
    if (stats) *stats = local;
    return !table.rows.empty();
}

}  // namespace cutcol
