#include "inversion/constructions.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "inversion/random.hpp"

namespace inversion {

OrientedGraph transitive(int n) {
    if (n < 1) throw std::invalid_argument("transitive: n >= 1 required");
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_arc(i, j);
    return g;
}

OrientedGraph directed_cycle(int p) {
    if (p < 3) throw std::invalid_argument("directed_cycle: p >= 3 required");
    OrientedGraph g(p);
    for (int i = 0; i < p; ++i) g.add_arc(i, (i + 1) % p);
    return g;
}

OrientedGraph q_tournament(int n) {
    if (n < 1) throw std::invalid_argument("q_tournament: n >= 1 required");
    OrientedGraph g(n);
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            if (j == i + 1)
                g.add_arc(j, i); // reversed hamiltonian path
            else
                g.add_arc(i, j);
        }
    }
    return g;
}

OrientedGraph lex_product(const OrientedGraph& d, const OrientedGraph& h) {
    const int nd = d.order(), nh = h.order();
    OrientedGraph g(nd * nh);
    for (int a = 0; a < nd; ++a) {
        for (int b = 0; b < nd; ++b) {
            if (d.arc(a, b))
                for (int x = 0; x < nh; ++x)
                    for (int y = 0; y < nh; ++y) g.add_arc(a * nh + x, b * nh + y);
        }
        for (auto [x, y] : h.arcs()) g.add_arc(a * nh + x, a * nh + y);
    }
    return g;
}

OrientedGraph dijoin(const OrientedGraph& l, const OrientedGraph& r) {
    const int nl = l.order(), nr = r.order();
    OrientedGraph g(nl + nr);
    for (auto [u, v] : l.arcs()) g.add_arc(u, v);
    for (auto [u, v] : r.arcs()) g.add_arc(nl + u, nl + v);
    for (int u = 0; u < nl; ++u)
        for (int v = 0; v < nr; ++v) g.add_arc(u, nl + v);
    return g;
}

OrientedGraph triangle(const OrientedGraph& d) {
    const int n = d.order();
    OrientedGraph g(n + 2);
    for (auto [x, y] : d.arcs()) g.add_arc(x, y);
    const int u = n, v = n + 1;
    for (int x = 0; x < n; ++x) {
        g.add_arc(x, u);
        g.add_arc(v, x);
    }
    g.add_arc(u, v);
    return g;
}

OrientedGraph triangle_iter(const OrientedGraph& d, int k) {
    if (k < 0) throw std::invalid_argument("triangle_iter: k >= 0 required");
    OrientedGraph g = d;
    for (int i = 0; i < k; ++i) g = triangle(g);
    return g;
}

OrientedGraph r5() {
    OrientedGraph g(5);
    for (int i = 0; i < 5; ++i) {
        g.add_arc(i, (i + 1) % 5);
        g.add_arc(i, (i + 3) % 5);
    }
    return g;
}

std::pair<OrientedGraph, InversionFamily> tk_tournament(int k, int big_n) {
    if (k < 3) throw std::invalid_argument("tk_tournament: k >= 3 required");
    if (big_n < 1) throw std::invalid_argument("tk_tournament: N >= 1 required");
    const int blocks = k - 1;
    const int n = 2 * big_n * blocks;
    OrientedGraph g(n);
    auto block_of = [&](int p) { return p / (2 * big_n); };
    auto unprimed = [&](int p) { return p % 2 == 0; };
    for (int x = 0; x < n; ++x) {
        for (int y = x + 1; y < n; ++y) {
            bool reversed = unprimed(x) && unprimed(y) && block_of(x) != block_of(y);
            if (reversed)
                g.add_arc(y, x);
            else
                g.add_arc(x, y);
        }
    }
    InversionFamily family;
    Bitset all_a(n);
    for (int i = 0; i < blocks; ++i) {
        Bitset a(n);
        for (int j = 0; j < big_n; ++j) a.set(2 * (i * big_n + j));
        all_a |= a;
        family.push(a);
    }
    family.push(all_a);
    return {std::move(g), std::move(family)};
}

OrientedGraph random_tournament(int n, uint64_t seed) {
    if (n < 1) throw std::invalid_argument("random_tournament: n >= 1 required");
    OrientedGraph g(n);
    CounterRng rng(seed);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (rng.next_bit())
                g.add_arc(i, j);
            else
                g.add_arc(j, i);
        }
    return g;
}

OrientedGraph random_oriented_graph(int n, uint64_t seed, int keep_num, int keep_den) {
    OrientedGraph t = random_tournament(n, seed);
    CounterRng rng(splitmix64(seed) + 1);
    OrientedGraph g(n);
    for (auto [u, v] : t.arcs())
        if (rng.next_below(uint64_t(keep_den)) < uint64_t(keep_num)) g.add_arc(u, v);
    return g;
}

namespace {

OrientedGraph tournament_from_mask(int n, uint64_t mask) {
    OrientedGraph g(n);
    int bit = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j, ++bit) {
            if ((mask >> bit) & 1)
                g.add_arc(i, j);
            else
                g.add_arc(j, i);
        }
    return g;
}

// DFS over relabelings with prefix pruning. Bits are emitted column by
// column: when vertex w is placed at position t, the t bits "arc from the
// vertex at position i to w" (i = 0..t-1) extend the code. Earlier bits are
// more significant, so integer comparison is lexicographic comparison.
struct Canonicalizer {
    const OrientedGraph& g;
    int n;
    int total_bits;
    uint64_t best = ~uint64_t(0);
    std::vector<int> placed;
    std::vector<char> used;

    explicit Canonicalizer(const OrientedGraph& graph)
        : g(graph), n(graph.order()), total_bits(graph.order() * (graph.order() - 1) / 2),
          used(graph.order(), 0) {}

    void run() {
        placed.clear();
        dfs(0, 0, 0);
    }

    void dfs(int t, uint64_t prefix, int bits_done) {
        if (t == n) {
            best = std::min(best, prefix);
            return;
        }
        for (int w = 0; w < n; ++w) {
            if (used[w]) continue;
            uint64_t chunk = 0;
            for (int i = 0; i < t; ++i)
                chunk = (chunk << 1) | uint64_t(g.arc(placed[i], w) ? 1 : 0);
            int nb = bits_done + t;
            uint64_t next = (prefix << t) | chunk;
            // compare against the same-length prefix of best
            if (best != ~uint64_t(0) && next > (best >> (total_bits - nb))) continue;
            used[w] = 1;
            placed.push_back(w);
            dfs(t + 1, next, nb);
            placed.pop_back();
            used[w] = 0;
        }
    }
};

} // namespace

uint64_t canonical_code(const OrientedGraph& g) {
    if (g.order() > 11)
        throw std::invalid_argument("canonical_code: order > 11 not supported");
    if (g.order() <= 1) return 0;
    Canonicalizer c(g);
    c.run();
    return c.best;
}

void enumerate_tournaments(int n, bool labeled,
                           const std::function<void(const OrientedGraph&)>& sink) {
    if (n < 1) throw std::invalid_argument("enumerate_tournaments: n >= 1 required");
    if (n > 7)
        throw std::invalid_argument(
            "enumerate_tournaments: full enumeration is guarded to n <= 7 "
            "(2^{n(n-1)/2} graphs); sample with random_tournament instead");
    const int pairs = n * (n - 1) / 2;
    std::set<uint64_t> seen;
    for (uint64_t mask = 0; mask < (uint64_t(1) << pairs); ++mask) {
        OrientedGraph g = tournament_from_mask(n, mask);
        if (!labeled) {
            uint64_t code = canonical_code(g);
            if (!seen.insert(code).second) continue;
        }
        sink(g);
    }
}

void enumerate_oriented_graphs(int n, const std::function<void(const OrientedGraph&)>& sink) {
    if (n < 1 || n > 5)
        throw std::invalid_argument("enumerate_oriented_graphs: guarded to 1 <= n <= 5");
    const int pairs = n * (n - 1) / 2;
    long total = 1;
    for (int i = 0; i < pairs; ++i) total *= 3;
    for (long code = 0; code < total; ++code) {
        OrientedGraph g(n);
        long c = code;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int trit = c % 3;
                c /= 3;
                if (trit == 1)
                    g.add_arc(i, j);
                else if (trit == 2)
                    g.add_arc(j, i);
            }
        sink(g);
    }
}

} // namespace inversion
