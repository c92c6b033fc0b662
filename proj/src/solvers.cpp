#include "inversion/solvers.hpp"

#include <algorithm>
#include <chrono>
#include <climits>
#include <functional>

namespace inversion {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// --- word-packed graphs for the oracle hot path (n <= 14) ---

struct SmallGraph {
    int n = 0;
    uint32_t out[16] = {0};
    uint32_t in[16] = {0};
};

SmallGraph pack(const OrientedGraph& g) {
    SmallGraph s;
    s.n = g.order();
    for (auto [u, v] : g.arcs()) {
        s.out[u] |= uint32_t(1) << v;
        s.in[v] |= uint32_t(1) << u;
    }
    return s;
}

bool small_acyclic(const SmallGraph& g) {
    uint32_t remaining = (g.n == 32) ? ~0u : ((uint32_t(1) << g.n) - 1);
    while (remaining) {
        uint32_t sinks = 0;
        for (uint32_t m = remaining; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            if ((g.out[v] & remaining) == 0) sinks |= uint32_t(1) << v;
        }
        if (!sinks) return false;
        remaining &= ~sinks;
    }
    return true;
}

SmallGraph small_invert(const SmallGraph& g, uint32_t x) {
    SmallGraph r = g;
    for (uint32_t m = x; m;) {
        int u = __builtin_ctz(m);
        m &= m - 1;
        r.out[u] = (g.out[u] & ~x) | (g.in[u] & x);
        r.in[u] = (g.in[u] & ~x) | (g.out[u] & x);
    }
    return r;
}

Bitset bitset_from_mask(int n, uint32_t mask) {
    Bitset b(n);
    for (uint32_t m = mask; m;) {
        int v = __builtin_ctz(m);
        m &= m - 1;
        b.set(v);
    }
    return b;
}

// --- automorphism orbits (used to cut the ordering enumeration) ---

void automorphism_orbits_dfs(const OrientedGraph& t, std::vector<int>& image,
                             std::vector<char>& used, int v,
                             const std::vector<int>& deg, std::vector<int>& uf_parent) {
    const int n = t.order();
    std::function<int(int)> find = [&](int a) {
        while (uf_parent[a] != a) a = uf_parent[a] = uf_parent[uf_parent[a]];
        return a;
    };
    if (v == n) {
        for (int a = 0; a < n; ++a) {
            int ra = find(a), rb = find(image[a]);
            if (ra != rb) uf_parent[std::max(ra, rb)] = std::min(ra, rb);
        }
        return;
    }
    for (int w = 0; w < n; ++w) {
        if (used[w] || deg[w] != deg[v]) continue;
        bool ok = true;
        for (int u = 0; u < v && ok; ++u)
            if (t.arc(u, v) != t.arc(image[u], w)) ok = false;
        if (!ok) continue;
        image[v] = w;
        used[w] = 1;
        automorphism_orbits_dfs(t, image, used, v + 1, deg, uf_parent);
        used[w] = 0;
    }
}

std::vector<int> orbit_representatives(const OrientedGraph& t) {
    const int n = t.order();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = t.out_degree(v);
    std::vector<int> uf(n);
    for (int i = 0; i < n; ++i) uf[i] = i;
    std::vector<int> image(n);
    std::vector<char> used(n, 0);
    automorphism_orbits_dfs(t, image, used, 0, deg, uf);
    std::function<int(int)> find = [&](int a) {
        while (uf[a] != a) a = uf[a] = uf[uf[a]];
        return a;
    };
    std::vector<int> reps;
    for (int v = 0; v < n; ++v)
        if (find(v) == v) reps.push_back(v);
    return reps;
}

Bitset full_set(int n) {
    Bitset s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
}

} // namespace

int ceil_log2(long x) {
    int k = 0;
    long p = 1;
    while (p < x) {
        p <<= 1;
        ++k;
    }
    return k;
}

CertifiedValue inv_exact_oracle(const OrientedGraph& d, int limit, long budget) {
    const auto t0 = Clock::now();
    const int n = d.order();
    if (n > 14)
        throw ResourceError("inv_exact_oracle: guarded to n <= 14 (cost (2^n)^k); got n = " +
                            std::to_string(n));
    if (limit < 0) throw std::invalid_argument("inv_exact_oracle: negative limit");

    CertifiedValue res;
    res.method = "oracle";
    SmallGraph g0 = pack(d);

    long examined = 0;
    auto charge = [&](long cost = 1) {
        examined += cost;
        if (examined > budget)
            throw ResourceError("inv_exact_oracle: step budget exceeded (" +
                                std::to_string(budget) + ")");
    };

    if (small_acyclic(g0)) {
        res.value = 0;
        res.exhaustion = ExhaustionRecord{"subset tuples over candidate sets", 0, 1, 0};
        res.elapsed = seconds_since(t0);
        return res;
    }

    // candidate sets: >= 2 vertices, flip at least one arc
    std::vector<uint32_t> cands;
    for (uint32_t m = 0; m < (uint32_t(1) << n); ++m) {
        if (__builtin_popcount(m) < 2) continue;
        bool touches = false;
        for (uint32_t w = m; w && !touches;) {
            int v = __builtin_ctz(w);
            w &= w - 1;
            if ((g0.out[v] | g0.in[v]) & m) touches = true;
        }
        if (touches) cands.push_back(m);
    }

    std::vector<int> chosen;
    std::function<bool(int, int, const SmallGraph&, int)> dfs =
        [&](int level, int start, const SmallGraph& g, int k) -> bool {
        for (int idx = start; idx < int(cands.size()); ++idx) {
            charge();
            SmallGraph g2 = small_invert(g, cands[idx]);
            chosen.push_back(idx);
            if (level + 1 == k) {
                if (small_acyclic(g2)) return true;
            } else {
                if (dfs(level + 1, idx + 1, g2, k)) return true;
            }
            chosen.pop_back();
        }
        return false;
    };

    for (int k = 1; k <= limit; ++k) {
        chosen.clear();
        if (dfs(0, 0, g0, k)) {
            res.value = k;
            for (int idx : chosen) res.family.push(bitset_from_mask(n, cands[idx]));
            if (!is_acyclic(apply_family(d, res.family)))
                throw std::logic_error("inv_exact_oracle: witness fails re-verification");
            res.exhaustion =
                ExhaustionRecord{"strictly increasing subset tuples, lengths 1.." +
                                     std::to_string(k),
                                 long(cands.size()), examined, k};
            res.elapsed = seconds_since(t0);
            return res;
        }
    }

    res.value = limit;
    res.found = false;
    res.exhaustion = ExhaustionRecord{
        "strictly increasing subset tuples, lengths 1.." + std::to_string(limit),
        long(cands.size()), examined, limit};
    res.elapsed = seconds_since(t0);
    return res;
}

namespace {

// off-diagonal disagreement rows for the vertex sequence seq
void build_disagreement_rows(const uint32_t* adj_out, const int* pos, int n,
                             std::vector<uint32_t>& rows) {
    std::fill(rows.begin(), rows.end(), 0);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool forward = pos[i] < pos[j];
            bool arc_ji = (adj_out[j] >> i) & 1u;
            bool disagrees = forward ? arc_ji : !arc_ji;
            if (disagrees) {
                rows[i] |= uint32_t(1) << j;
                rows[j] |= uint32_t(1) << i;
            }
        }
}

} // namespace

CertifiedValue inv_exact(const OrientedGraph& t) {
    const auto t0 = Clock::now();
    if (!t.is_tournament())
        throw std::domain_error("inv_exact: tournament required (use inv_exact_oracle)");
    const int n = t.order();
    if (n > 9)
        throw ResourceError("inv_exact: guarded to n <= 9 (n! orderings); got n = " +
                            std::to_string(n));

    CertifiedValue res;
    res.method = "gram";
    if (is_acyclic(t)) {
        res.value = 0;
        res.exhaustion = ExhaustionRecord{"orderings x diagonal masks", 0, 0, 0};
        res.elapsed = seconds_since(t0);
        return res;
    }

    uint32_t adj_out[16] = {0};
    for (auto [u, v] : t.arcs()) adj_out[u] |= uint32_t(1) << v;

    const int floor_value = 1;
    int best = n + 1;
    std::vector<int> best_seq;
    long perms_examined = 0;

    std::vector<uint32_t> rows(n, 0);
    int pos[16];
    std::vector<int> reps = orbit_representatives(t);
    bool done = false;
    for (int rep : reps) {
        if (done) break;
        std::vector<int> rest;
        for (int v = 0; v < n; ++v)
            if (v != rep) rest.push_back(v);
        do {
            pos[rep] = 0;
            for (int i = 0; i < n - 1; ++i) pos[rest[i]] = i + 1;
            build_disagreement_rows(adj_out, pos, n, rows);
            int cost = min_gram_cost(rows, n, floor_value);
            ++perms_examined;
            if (cost < best) {
                best = cost;
                best_seq.assign(n, -1);
                for (int v = 0; v < n; ++v) best_seq[pos[v]] = v;
                if (best == floor_value) {
                    done = true;
                    break;
                }
            }
        } while (std::next_permutation(rest.begin(), rest.end()));
    }

    Ordering sigma = Ordering::from_sequence(best_seq);
    GramResult gr = min_gram_rank(m_sigma(t, sigma));
    if (gr.k != best)
        throw std::logic_error("inv_exact: certificate rank disagrees with scan minimum");
    res.value = best;
    res.family = family_from_rows(gr.certificate.x);
    if (!is_acyclic(apply_family(t, res.family)))
        throw std::logic_error("inv_exact: Gram certificate fails re-verification");
    res.exhaustion = ExhaustionRecord{"orderings (orbit-reduced) x diagonal masks",
                                      long(reps.size()), perms_examined, best};
    res.elapsed = seconds_since(t0);
    return res;
}

CertifiedValue inv_sigma(const OrientedGraph& t, const Ordering& sigma) {
    const auto t0 = Clock::now();
    GramResult gr = min_gram_rank(m_sigma(t, sigma)); // validates tournament + sigma
    CertifiedValue res;
    res.method = "gram-sigma";
    res.value = gr.k;
    res.family = family_from_rows(gr.certificate.x);
    OrientedGraph transformed = apply_family(t, res.family);
    // the result must be the transitive tournament with acyclic ordering sigma
    for (int i = 0; i < t.order(); ++i)
        for (int j = 0; j < t.order(); ++j)
            if (sigma.position[i] < sigma.position[j] && !transformed.arc(i, j))
                throw std::logic_error("inv_sigma: certificate does not realize sigma");
    res.elapsed = seconds_since(t0);
    return res;
}

CertifiedValue greedy_upper_bound(const OrientedGraph& t) {
    const auto t0 = Clock::now();
    if (!t.is_tournament()) throw std::domain_error("greedy_upper_bound: tournament required");
    const int n = t.order();

    CertifiedValue res;
    res.method = "greedy";
    OrientedGraph g = t;

    std::function<void(const Bitset&)> decycle = [&](const Bitset& s) {
        if (s.count() <= 2) return;
        if (is_acyclic_induced(g, s)) return;
        int u = -1, best_deg = INT_MAX;
        for (int v = s.find_first(); v >= 0; v = s.find_next(v)) {
            int deg = (g.in_neighbors(v) & s).count();
            if (deg < best_deg) {
                best_deg = deg;
                u = v;
            }
        }
        Bitset processed(n);
        Bitset ins = g.in_neighbors(u) & s;
        for (int v = ins.find_first(); v >= 0; v = ins.find_next(v)) {
            Bitset x = (g.in_neighbors(v) & s).and_not(processed);
            x.set(v);
            g = invert(g, x);
            processed.set(v);
            if (x.count() >= 2) res.family.push(x);
        }
        decycle(g.out_neighbors(u) & s);
    };
    decycle(full_set(n));

    if (!is_acyclic(g))
        throw std::logic_error("greedy_upper_bound: construction failed to decycle");
    res.value = res.family.length();
    if (res.value > n - ceil_log2(n + 1))
        throw std::logic_error("greedy_upper_bound: family exceeds n - ceil(log(n+1))");
    res.elapsed = seconds_since(t0);
    return res;
}

CertifiedValue tau(const OrientedGraph& d) {
    const auto t0 = Clock::now();
    const int n = d.order();
    if (n > 16)
        throw ResourceError("tau: guarded to n <= 16 (subset brute force)");
    CertifiedValue res;
    res.method = "tau-subsets";
    long examined = 0;
    for (int size = 0; size <= n; ++size) {
        uint32_t mask = size == 0 ? 0 : (uint32_t(1) << size) - 1;
        while (true) {
            ++examined;
            Bitset keep(n);
            for (int v = 0; v < n; ++v)
                if (!((mask >> v) & 1u)) keep.set(v);
            if (is_acyclic_induced(d, keep)) {
                res.value = size;
                res.vertex_witness = bitset_from_mask(n, mask).members();
                res.exhaustion = ExhaustionRecord{"vertex subsets by size", 1L << n, examined, size};
                res.elapsed = seconds_since(t0);
                return res;
            }
            if (size == 0) break;
            // Gosper's hack: next mask with the same popcount
            uint32_t c = mask & -mask;
            uint32_t r = mask + c;
            mask = (((r ^ mask) >> 2) / c) | r;
            if (mask >= (uint32_t(1) << n)) break;
        }
    }
    throw std::logic_error("tau: unreachable (deleting everything is acyclic)");
}

CertifiedValue tau_prime(const OrientedGraph& d) {
    const auto t0 = Clock::now();
    const int n = d.order();
    if (n > 20)
        throw ResourceError("tau_prime: guarded to n <= 20 (2^n subset DP)");
    CertifiedValue res;
    res.method = "tau-prime-dp";

    // f[S] = minimum backward arcs over orderings of S, building left to
    // right: placing v first makes every arc from S\{v} into v backward.
    uint32_t in_row[32] = {0};
    for (auto [u, v] : d.arcs()) in_row[v] |= uint32_t(1) << u;
    const uint32_t full = (n == 0) ? 0 : (uint32_t(1) << n) - 1;
    std::vector<int16_t> f(size_t(full) + 1, 0);
    for (uint32_t s = 1; s <= full; ++s) {
        int16_t best = INT16_MAX;
        for (uint32_t m = s; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            uint32_t rest = s & ~(uint32_t(1) << v);
            int16_t cand = int16_t(f[rest] + __builtin_popcount(in_row[v] & rest));
            best = std::min(best, cand);
        }
        f[s] = best;
    }
    res.value = f[full];

    // reconstruct an optimal ordering, then list its backward arcs
    std::vector<int> order;
    uint32_t s = full;
    while (s) {
        for (uint32_t m = s; m;) {
            int v = __builtin_ctz(m);
            m &= m - 1;
            uint32_t rest = s & ~(uint32_t(1) << v);
            if (f[s] == f[rest] + __builtin_popcount(in_row[v] & rest)) {
                order.push_back(v);
                s = rest;
                break;
            }
        }
    }
    std::vector<int> position(n);
    for (int i = 0; i < int(order.size()); ++i) position[order[i]] = i;
    for (auto [u, v] : d.arcs())
        if (position[u] > position[v]) res.arc_witness.emplace_back(u, v);
    if (int(res.arc_witness.size()) != res.value)
        throw std::logic_error("tau_prime: witness size mismatch");

    OrientedGraph pruned = d;
    for (auto [u, v] : res.arc_witness) pruned.remove_arc(u, v);
    if (!is_acyclic(pruned)) throw std::logic_error("tau_prime: witness fails re-verification");
    res.exhaustion = ExhaustionRecord{"vertex subsets (ordering DP)", long(full) + 1,
                                      long(full) + 1, res.value};
    res.elapsed = seconds_since(t0);
    return res;
}

BoundsReport check_bounds(const OrientedGraph& d) {
    BoundsReport rep;
    rep.tau_value = tau(d);
    rep.tau_prime_value = tau_prime(d);
    // inv <= tau' always, so tau' caps the deepening
    rep.inv = inv_exact_oracle(d, rep.tau_prime_value.value);
    if (!rep.inv.found) throw std::logic_error("check_bounds: inv > tau' is impossible");
    rep.inv_le_tau_prime = rep.inv.value <= rep.tau_prime_value.value;
    rep.inv_le_two_tau = rep.inv.value <= 2 * rep.tau_value.value;

    rep.deletion_monotone = true;
    for (int x = 0; x < d.order(); ++x) {
        Bitset s(d.order());
        s.set(x);
        OrientedGraph dx = delete_vertices(d, s).graph;
        CertifiedValue inv_dx = inv_exact_oracle(dx, rep.inv.value + 1);
        if (!(inv_dx.value <= rep.inv.value && rep.inv.value <= inv_dx.value + 2))
            rep.deletion_monotone = false;
    }
    return rep;
}

SplitResult split_off_cycle(const OrientedGraph& d, const InversionFamily& family_minus_c) {
    const int n = d.order();
    SplitResult res;
    res.cycle = shortest_cycle(d); // throws NoCycleError on acyclic input

    Bitset cycle_set(n);
    for (int v : res.cycle.vertices) cycle_set.set(v);
    DeletionResult rest = delete_vertices(d, cycle_set);

    // the supplied family must decycle D - C (in D - C's labels)
    for (const Bitset& x : family_minus_c.sets)
        if (x.width() != rest.graph.order())
            throw CertificateError("split_off_cycle: family not bound to D - C");
    if (!is_acyclic(apply_family(rest.graph, family_minus_c)))
        throw CertificateError("split_off_cycle: supplied family does not decycle D - C");

    // lift to D's labels
    for (const Bitset& x : family_minus_c.sets) {
        Bitset lifted(n);
        for (int v = x.find_first(); v >= 0; v = x.find_next(v)) lifted.set(rest.kept[v]);
        res.family.push(lifted);
    }
    const int supplied = res.family.length();

    const int p = res.cycle.length();
    const int a = p / 3;
    const int b = p - 3 * a;
    Bitset y[3] = {Bitset(n), Bitset(n), Bitset(n)};
    for (int i = 0; i < 3; ++i)
        for (int t = 0; t < a; ++t) y[i].set(res.cycle.vertices[3 * t + i]);

    for (int i = 0; i < 3; ++i) {
        Bitset z(n);
        for (int v = y[i].find_first(); v >= 0; v = y[i].find_next(v))
            z |= d.out_neighbors(v);
        z = z.and_not(cycle_set);
        // an arc from Z_i back to Y_i would shortcut the shortest cycle
        for (int zv = z.find_first(); zv >= 0; zv = z.find_next(zv))
            if (d.out_neighbors(zv).intersects(y[i]))
                throw std::logic_error("split_off_cycle: arc from Z_i to Y_i contradicts "
                                       "shortest-cycle minimality");
        Bitset yz = y[i] | z;
        if (yz.count() >= 2) res.family.push(yz);
        if (z.count() >= 2) res.family.push(z);
    }

    if (b == 0) {
        // any single arc of C finishes the job; take the first
        Bitset arc(n);
        arc.set(res.cycle.vertices[0]);
        arc.set(res.cycle.vertices[1]);
        res.family.push(arc);
    } else {
        OrientedGraph g = apply_family(d, res.family);
        for (int t = 3 * a; t < p; ++t) {
            int x = res.cycle.vertices[t];
            auto [two_sets, next] = vertex_elimination(g, x);
            for (const Bitset& set : two_sets.sets)
                if (set.count() >= 2) res.family.push(set);
            g = std::move(next);
        }
    }

    if (!is_acyclic(apply_family(d, res.family)))
        throw std::logic_error("split_off_cycle: constructed family fails to decycle");
    res.overhead = res.family.length() - supplied;
    const int allowed = (b == 0) ? 7 : 10;
    if (res.overhead > allowed)
        throw std::logic_error("split_off_cycle: overhead exceeds the stated bound");
    return res;
}

} // namespace inversion
