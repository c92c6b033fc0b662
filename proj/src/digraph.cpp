#include "inversion/digraph.hpp"

#include <algorithm>
#include <limits>

namespace inversion {

bool Ordering::is_valid() const {
    std::vector<char> seen(position.size(), 0);
    for (int p : position) {
        if (p < 0 || p >= int(position.size()) || seen[p]) return false;
        seen[p] = 1;
    }
    return true;
}

OrientedGraph invert(const OrientedGraph& g, const Bitset& x) {
    if (x.width() != g.order())
        throw InvalidSetError("invert: set not bound to this graph");
    OrientedGraph r(g.order());
    for (int u = 0; u < g.order(); ++u) {
        const Bitset& out = g.out_neighbors(u);
        const Bitset& in = g.in_neighbors(u);
        Bitset new_out = x.test(u) ? (out.and_not(x) | (in & x)) : out;
        for (int v = new_out.find_first(); v >= 0; v = new_out.find_next(v))
            r.add_arc(u, v);
    }
    return r;
}

OrientedGraph apply_family(const OrientedGraph& g, const InversionFamily& f) {
    OrientedGraph r = g;
    for (const Bitset& x : f.sets) r = invert(r, x);
    return r;
}

namespace {

// Kahn's algorithm restricted to `subset`; fills `order_out` (vertex sequence)
// when non-null and the graph is acyclic on the subset.
bool kahn(const OrientedGraph& g, const Bitset& subset, std::vector<int>* order_out) {
    const int n = g.order();
    std::vector<int> indeg(n, 0);
    std::vector<int> stack;
    int total = 0;
    for (int v = subset.find_first(); v >= 0; v = subset.find_next(v)) {
        indeg[v] = (g.in_neighbors(v) & subset).count();
        ++total;
        if (indeg[v] == 0) stack.push_back(v);
    }
    // pop largest label first so the emitted order is deterministic
    std::sort(stack.begin(), stack.end(), std::greater<int>());
    int processed = 0;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        if (order_out) order_out->push_back(v);
        ++processed;
        Bitset succ = g.out_neighbors(v) & subset;
        for (int w = succ.find_first(); w >= 0; w = succ.find_next(w))
            if (--indeg[w] == 0) stack.push_back(w);
    }
    return processed == total;
}

Bitset full_set(int n) {
    Bitset s(n);
    for (int i = 0; i < n; ++i) s.set(i);
    return s;
}

} // namespace

bool is_acyclic(const OrientedGraph& g) {
    return kahn(g, full_set(g.order()), nullptr);
}

bool is_acyclic_induced(const OrientedGraph& g, const Bitset& subset) {
    return kahn(g, subset, nullptr);
}

AcyclicityResult check_acyclic(const OrientedGraph& g) {
    std::vector<int> seq;
    if (kahn(g, full_set(g.order()), &seq))
        return {true, Ordering::from_sequence(seq), std::nullopt};
    return {false, std::nullopt, shortest_cycle(g)};
}

Cycle shortest_cycle(const OrientedGraph& g) {
    const int n = g.order();
    const int inf = std::numeric_limits<int>::max();
    int best_len = inf;
    int best_root = -1;
    std::vector<int> dist(n);
    for (int r = 0; r < n; ++r) {
        // BFS from r over out-arcs; a cycle through r has length dist(r,u)+1
        // for some arc u -> r. Scanning roots in increasing order makes the
        // first root achieving the minimum the smallest vertex of some
        // shortest cycle.
        std::fill(dist.begin(), dist.end(), inf);
        dist[r] = 0;
        std::vector<int> frontier{r};
        int depth = 0;
        while (!frontier.empty() && depth + 1 < best_len) {
            std::vector<int> next;
            for (int u : frontier) {
                const Bitset& out = g.out_neighbors(u);
                if (out.test(r) && u != r) {
                    int len = dist[u] + 1;
                    if (len < best_len && len >= 2) {
                        best_len = len;
                        best_root = r;
                    }
                }
                for (int w = out.find_first(); w >= 0; w = out.find_next(w)) {
                    if (dist[w] == inf) {
                        dist[w] = dist[u] + 1;
                        next.push_back(w);
                    }
                }
            }
            frontier = std::move(next);
            ++depth;
        }
    }
    if (best_root < 0) throw NoCycleError("shortest_cycle: graph is acyclic");

    // Reconstruct the lexicographically least sequence rooted at best_root:
    // walk forward, always picking the smallest out-neighbor whose reverse
    // distance to the root shrinks by one per step.
    const int r = best_root;
    std::vector<int> dtr(n, inf); // dist(v -> r) via reverse BFS
    dtr[r] = 0;
    std::vector<int> frontier{r};
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int u : frontier) {
            const Bitset& in = g.in_neighbors(u);
            for (int w = in.find_first(); w >= 0; w = in.find_next(w)) {
                if (dtr[w] == inf) {
                    dtr[w] = dtr[u] + 1;
                    next.push_back(w);
                }
            }
        }
        frontier = std::move(next);
    }
    Cycle c;
    c.vertices.push_back(r);
    int cur = r;
    for (int remaining = best_len - 1; remaining > 0; --remaining) {
        const Bitset& out = g.out_neighbors(cur);
        int pick = -1;
        for (int w = out.find_first(); w >= 0; w = out.find_next(w)) {
            if (w != r && dtr[w] == remaining) { pick = w; break; }
        }
        if (pick < 0) throw NoCycleError("shortest_cycle: reconstruction failed");
        c.vertices.push_back(pick);
        cur = pick;
    }
    if (!g.arc(cur, r)) throw NoCycleError("shortest_cycle: reconstruction failed");
    return c;
}

DeletionResult delete_vertices(const OrientedGraph& g, const Bitset& s) {
    if (s.width() != g.order())
        throw InvalidSetError("delete_vertices: set not bound to this graph");
    DeletionResult res;
    std::vector<int> new_label(g.order(), -1);
    for (int v = 0; v < g.order(); ++v) {
        if (!s.test(v)) {
            new_label[v] = int(res.kept.size());
            res.kept.push_back(v);
        }
    }
    res.graph = OrientedGraph(int(res.kept.size()));
    for (int v = 0; v < g.order(); ++v) {
        if (new_label[v] < 0) continue;
        Bitset out = g.out_neighbors(v).and_not(s);
        for (int w = out.find_first(); w >= 0; w = out.find_next(w))
            res.graph.add_arc(new_label[v], new_label[w]);
    }
    return res;
}

std::pair<Bitset, OrientedGraph> sink_reduction(const OrientedGraph& t, int x) {
    if (!t.is_tournament())
        throw std::domain_error("sink_reduction: input must be a tournament");
    Bitset closed = t.out_neighbors(x);
    closed.set(x);
    OrientedGraph r = invert(t, closed);
    return {closed, std::move(r)};
}

std::pair<InversionFamily, OrientedGraph> vertex_elimination(const OrientedGraph& g, int x) {
    Bitset outs = g.out_neighbors(x);
    Bitset closed = outs;
    closed.set(x);
    InversionFamily f;
    f.push(closed);
    f.push(outs);
    OrientedGraph r = apply_family(g, f);
    return {std::move(f), std::move(r)};
}

} // namespace inversion
