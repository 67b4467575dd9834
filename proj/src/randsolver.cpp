#include "cutcol/randsolver.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "cutcol/layout_search.hpp"

namespace cutcol {

uint64_t TTable::stride_of(size_t pos) const {
    uint64_t s = 1;
    for (size_t k = 0; k < pos; ++k) s *= static_cast<uint64_t>(cap[k]) + 1;
    return s;
}

std::vector<int> TTable::unpack(uint64_t packed) const {
    std::vector<int> d(bag.size());
    for (size_t k = 0; k < bag.size(); ++k) {
        uint64_t radix = static_cast<uint64_t>(cap[k]) + 1;
        d[k] = static_cast<int>(packed % radix);
        packed /= radix;
    }
    return d;
}

namespace {

TTable empty_table(uint32_t p) {
    TTable t;
    t.p = p;
    t.index_size = 1;
    t.entries.emplace_back(0, 1 % p);  // T^0[(),()] = 1
    return t;
}

TTable layout_from_split(const SplitInfo& s, uint32_t p) {
    TTable t;
    t.p = p;
    t.bag = s.bag;
    t.in_L.assign(s.in_L.begin(), s.in_L.end());
    t.cap = s.cap;
    t.index_size = 1;
    for (int c : t.cap) t.index_size *= static_cast<uint64_t>(c) + 1;
    return t;
}

// One endpoint's effect on its table digit under one oriented contribution.
struct DigitMove {
    int new_digit;
    int dz;        // weight shift added to z
    uint32_t mul;  // field multiplier
};

}  // namespace

TTable dp_transition(const TTable& prev, const Event& ev, const SplitInfo& split_prev,
                     const SplitInfo& split_next, const WeightFunction& w, int q) {
    Gf f{prev.p};
    TTable next = layout_from_split(split_next, prev.p);

    if (ev.kind == Event::IntroduceVertex) {
        // fresh vertex lands in L with cap 0 (radix 1) at the end of the bag:
        // packing and keys are unchanged
        if (next.index_size != prev.index_size) throw std::logic_error("introduce-vertex resized index");
        next.entries = prev.entries;
        return next;
    }
    if (ev.kind == Event::Forget) {
        // forgotten vertex sits in R with cap 0; dropping a radix-1 digit
        // leaves every packed value intact
        int pf = -1;
        for (size_t k = 0; k < prev.bag.size(); ++k)
            if (prev.bag[k] == ev.u) pf = static_cast<int>(k);
        if (pf < 0) throw std::logic_error("forget of vertex not in bag");
        if (prev.in_L[pf] || prev.cap[pf] != 0)
            throw std::logic_error("forget of a vertex with pending edges");
        if (next.index_size != prev.index_size) throw std::logic_error("forget resized index");
        next.entries = prev.entries;
        return next;
    }

    // introduce edge {u, v}
    int eu = ev.u, evtx = ev.v;
    int pu = -1, pv = -1;
    for (size_t k = 0; k < prev.bag.size(); ++k) {
        if (prev.bag[k] == eu) pu = static_cast<int>(k);
        if (prev.bag[k] == evtx) pv = static_cast<int>(k);
    }
    if (pu < 0 || pv < 0) throw std::logic_error("edge endpoint not in bag");

    // canonical direction: from the endpoint introduced first; the reversed
    // orientation carries a -1
    int a = eu, b = evtx;
    if (split_prev.intro_rank[a] > split_prev.intro_rank[b]) std::swap(a, b);

    struct Endpoint {
        int vertex;
        int pos;          // position in bag (same in prev and next layouts)
        bool wasL, isL;
        int prev_cap, next_cap;
    };
    auto mk = [&](int vtx) {
        Endpoint e;
        e.vertex = vtx;
        e.pos = vtx == eu ? pu : pv;
        e.wasL = prev.in_L[e.pos];
        e.isL = next.in_L[e.pos];
        e.prev_cap = prev.cap[e.pos];
        e.next_cap = next.cap[e.pos];
        if (!e.wasL && e.isL) throw std::logic_error("endpoint moved from R to L");
        return e;
    };

    // digit moves per endpoint, precomputed over (tail?, digit); avoids any
    // work in the per-entry loop
    auto build_moves = [&](const Endpoint& e) {
        std::vector<std::vector<DigitMove>> table(2 * (e.prev_cap + 1));
        for (int tail01 = 0; tail01 < 2; ++tail01) {
            bool tail = tail01;
            for (int digit = 0; digit <= e.prev_cap; ++digit) {
                auto& out = table[tail01 * (e.prev_cap + 1) + digit];
                if (e.wasL && e.isL) {
                    if (tail) out.push_back({digit + 1, 0, 1});  // the new edge adds an out-edge
                    else out.push_back({digit, 0, 1});
                } else if (!e.wasL) {  // R -> R
                    if (tail) {
                        if (digit >= 1) out.push_back({digit - 1, 0, 1});
                    } else {
                        if (digit <= e.next_cap) out.push_back({digit, 0, 1});
                    }
                } else {  // L -> R flip: close the partial evaluation over this vertex
                    int shift = tail ? 1 : 0;
                    for (int c = 1; c <= q; ++c) {
                        uint32_t base = f.from_int(c);
                        uint32_t m = f.pow(base, digit + shift);
                        int dz = w.at(e.vertex, c);
                        for (int eps = 0; eps <= e.next_cap; ++eps) {
                            out.push_back({eps, dz, m});
                            m = f.mul(m, base);  // exponent eps + digit + shift
                        }
                    }
                }
            }
        }
        return table;
    };

    Endpoint E1 = mk(std::min(pu, pv) == pu ? eu : evtx);  // lower bag position
    Endpoint E2 = mk(std::min(pu, pv) == pu ? evtx : eu);  // higher bag position

    // segment decomposition of packed indices around the two changed digits
    uint64_t s1 = prev.stride_of(E1.pos);
    uint64_t r1 = static_cast<uint64_t>(E1.prev_cap) + 1;
    uint64_t s1after = s1 * r1;
    uint64_t s2 = prev.stride_of(E2.pos);
    uint64_t midmod = s2 / s1after;
    uint64_t r2 = static_cast<uint64_t>(E2.prev_cap) + 1;
    uint64_t s2after = s2 * r2;

    uint64_t n1 = static_cast<uint64_t>(E1.next_cap) + 1;
    uint64_t n2 = static_cast<uint64_t>(E2.next_cap) + 1;
    uint64_t t1 = s1;             // new stride of E1.pos
    uint64_t t1after = t1 * n1;
    uint64_t t2 = t1after * midmod;
    uint64_t t2after = t2 * n2;

    auto tab1 = build_moves(E1);
    auto tab2 = build_moves(E2);

    // flip transitions fan out by q*(cap+1) per endpoint; above a few million
    // pushes, accumulate into a flat array over the (bounded) key space
    // instead of materializing the push stream
    size_t fan1 = 1, fan2 = 1;
    int maxdz = 0;
    for (const auto& lst : tab1) {
        fan1 = std::max(fan1, lst.size());
        for (const auto& mv : lst) maxdz = std::max(maxdz, mv.dz);
    }
    int maxdz2 = 0;
    for (const auto& lst : tab2) {
        fan2 = std::max(fan2, lst.size());
        for (const auto& mv : lst) maxdz2 = std::max(maxdz2, mv.dz);
    }
    uint64_t zmax_prev = prev.entries.empty() ? 0 : prev.entries.back().first / prev.index_size;
    uint64_t key_bound = (zmax_prev + maxdz + maxdz2 + 1) * next.index_size;
    uint64_t push_estimate = prev.entries.size() * fan1 * fan2 * 2;
    bool dense = push_estimate > (1u << 22) && key_bound <= (uint64_t(1) << 27);

    auto foreach_push = [&](auto&& sink) {
        for (auto [key, val] : prev.entries) {
            uint64_t z = key / prev.index_size;
            uint64_t packed = key % prev.index_size;
            uint64_t low = packed % s1;
            int d1 = static_cast<int>((packed / s1) % r1);
            uint64_t mid = (packed / s1after) % midmod;
            int d2 = static_cast<int>((packed / s2) % r2);
            uint64_t high = packed / s2after;
            uint64_t rebase = low + mid * t1after + high * t2after;

            for (int orient = 0; orient < 2; ++orient) {
                int tail = orient == 0 ? a : b;
                uint32_t sval = orient == 0 ? val : f.neg(val);
                const auto& m1 = tab1[(tail == E1.vertex ? 1 : 0) * (E1.prev_cap + 1) + d1];
                if (m1.empty()) continue;
                const auto& m2 = tab2[(tail == E2.vertex ? 1 : 0) * (E2.prev_cap + 1) + d2];
                for (const auto& a1 : m1) {
                    uint64_t base1 = rebase + static_cast<uint64_t>(a1.new_digit) * t1;
                    uint32_t v1 = f.mul(sval, a1.mul);
                    for (const auto& a2 : m2) {
                        uint64_t npacked = base1 + static_cast<uint64_t>(a2.new_digit) * t2;
                        uint64_t nz = z + a1.dz + a2.dz;
                        uint32_t nval = f.mul(v1, a2.mul);
                        if (nval) sink(nz * next.index_size + npacked, nval);
                    }
                }
            }
        }
    };

    next.entries.clear();
    if (dense) {
        std::vector<uint32_t> acc(key_bound, 0);
        foreach_push([&](uint64_t key, uint32_t val) { acc[key] = f.add(acc[key], val); });
        for (uint64_t key = 0; key < key_bound; ++key)
            if (acc[key]) next.entries.emplace_back(key, acc[key]);
        return next;
    }

    std::vector<std::pair<uint64_t, uint32_t>> pushes;
    pushes.reserve(std::min<uint64_t>(push_estimate, prev.entries.size() * 2 + 16));
    foreach_push([&](uint64_t key, uint32_t val) { pushes.emplace_back(key, val); });

    // least-significant-digit radix sort (11-bit digits), then one
    // accumulation pass
    if (!pushes.empty()) {
        uint64_t maxkey = 0;
        for (auto& kv : pushes) maxkey = std::max(maxkey, kv.first);
        constexpr int kBits = 11;
        constexpr size_t kBuckets = size_t(1) << kBits;
        std::vector<std::pair<uint64_t, uint32_t>> scratch(pushes.size());
        std::vector<uint32_t> cnt;
        for (int shift = 0; maxkey >> shift; shift += kBits) {
            cnt.assign(kBuckets + 1, 0);
            for (auto& kv : pushes) cnt[((kv.first >> shift) & (kBuckets - 1)) + 1]++;
            for (size_t i = 1; i <= kBuckets; ++i) cnt[i] += cnt[i - 1];
            for (auto& kv : pushes) scratch[cnt[(kv.first >> shift) & (kBuckets - 1)]++] = kv;
            pushes.swap(scratch);
        }
    }
    next.entries.reserve(pushes.size());
    for (auto [key, val] : pushes) {
        if (!next.entries.empty() && next.entries.back().first == key)
            next.entries.back().second = f.add(next.entries.back().second, val);
        else
            next.entries.emplace_back(key, val);
    }
    next.entries.erase(std::remove_if(next.entries.begin(), next.entries.end(),
                                      [](const auto& kv) { return kv.second == 0; }),
                       next.entries.end());
    return next;
}

RandRunner::RandRunner(const Graph& g, const NicePathDecomposition& npd, int q,
                       const WeightFunction& w, uint32_t p)
    : g_(&g), q_(q), w_(w), tracker_(g, npd), table_(empty_table(p)) {}

void RandRunner::step() {
    SplitInfo before = tracker_.state();
    Event ev = tracker_.next_event();
    tracker_.advance();
    table_ = dp_transition(table_, ev, before, tracker_.state(), w_, q_);
}

std::map<int64_t, uint32_t> compute_PG_all(const Graph& g, const NicePathDecomposition& npd,
                                           int q, const WeightFunction& w, uint32_t p) {
    RandRunner run(g, npd, q, w, p);
    while (!run.done()) run.step();
    if (!run.table().bag.empty()) throw std::logic_error("decomposition does not end with an empty bag");
    std::map<int64_t, uint32_t> out;
    for (auto [key, val] : run.table().entries)
        out[static_cast<int64_t>(key)] = val;
    return out;
}

static RandTrial run_trial(const Graph& g, const NicePathDecomposition& npd, int q,
                           uint64_t seed, int trial) {
    Rng rng = Rng(seed).split(static_cast<uint64_t>(trial));
    RandTrial t;
    t.subseed = seed ^ static_cast<uint64_t>(trial);
    WeightFunction w = sample_weights(g, q, rng);
    t.prime = random_prime_31(rng);
    auto pg = compute_PG_all(g, npd, q, w, t.prime);
    for (auto [z, val] : pg) {
        if (val != 0) {
            t.nonzero = true;
            t.witness_z = z;
            break;
        }
    }
    return t;
}

RandResult solve_pathwidth_rand(const Graph& g, const NicePathDecomposition& npd, int q,
                                int trials, uint64_t seed, int jobs) {
    if (trials < 1) throw std::invalid_argument("trials must be >= 1");
    auto bad = validate_decomposition(g, npd);
    if (!bad.empty()) throw std::invalid_argument("invalid decomposition: " + bad.front());
    RandResult res;
    if (jobs <= 1) {
        for (int t = 0; t < trials; ++t) {
            res.trials.push_back(run_trial(g, npd, q, seed, t));
            if (res.trials.back().nonzero) {
                res.yes = true;
                break;  // one witness decides; later trials cannot flip the answer
            }
        }
    } else {
        res.trials.assign(trials, {});
        std::vector<std::thread> pool;
        std::atomic<int> next{0};
        for (int j = 0; j < jobs; ++j) {
            pool.emplace_back([&] {
                for (;;) {
                    int t = next.fetch_add(1);
                    if (t >= trials) return;
                    res.trials[t] = run_trial(g, npd, q, seed, t);
                }
            });
        }
        for (auto& th : pool) th.join();
        for (const auto& t : res.trials)
            if (t.nonzero) res.yes = true;
    }
    return res;
}

RandResult solve_cutwidth_rand(const Graph& g, const LinearLayout& pi, int q,
                               int trials, uint64_t seed, int jobs) {
    NicePathDecomposition npd = layout_to_nice_decomposition(g, pi);
    return solve_pathwidth_rand(g, npd, q, trials, seed, jobs);
}

}  // namespace cutcol
