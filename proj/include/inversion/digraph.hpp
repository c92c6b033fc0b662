#ifndef inversion_digraph_hpp
#define inversion_digraph_hpp

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inversion/bitset.hpp"

namespace inversion {

struct NoCycleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidSetError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Loop-free digraph with at most one arc per vertex pair. Vertices are
// 0..n-1. Out- and in-neighborhoods are kept as bit rows so inversions and
// acyclicity checks run on whole words.
class OrientedGraph {
public:
    OrientedGraph() = default;

    explicit OrientedGraph(int n) : n_(n) {
        if (n < 0) throw std::invalid_argument("OrientedGraph: negative order");
        out_.assign(n, Bitset(n));
        in_.assign(n, Bitset(n));
    }

    int order() const { return n_; }

    bool arc(int u, int v) const { return out_[u].test(v); }

    void add_arc(int u, int v) {
        if (u == v) throw std::invalid_argument("OrientedGraph: self-loop");
        if (out_[v].test(u)) throw std::invalid_argument("OrientedGraph: digon");
        out_[u].set(v);
        in_[v].set(u);
    }

    void remove_arc(int u, int v) {
        out_[u].reset(v);
        in_[v].reset(u);
    }

    const Bitset& out_neighbors(int v) const { return out_[v]; }
    const Bitset& in_neighbors(int v) const { return in_[v]; }
    int out_degree(int v) const { return out_[v].count(); }
    int in_degree(int v) const { return in_[v].count(); }

    long arc_count() const {
        long m = 0;
        for (const auto& row : out_) m += row.count();
        return m;
    }

    std::vector<std::pair<int, int>> arcs() const {
        std::vector<std::pair<int, int>> a;
        for (int u = 0; u < n_; ++u)
            for (int v = out_[u].find_first(); v >= 0; v = out_[u].find_next(v))
                a.emplace_back(u, v);
        return a;
    }

    bool is_tournament() const {
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v)
                if (!out_[u].test(v) && !out_[v].test(u)) return false;
        return true;
    }

    bool operator==(const OrientedGraph& o) const { return n_ == o.n_ && out_ == o.out_; }
    bool operator!=(const OrientedGraph& o) const { return !(*this == o); }

private:
    int n_ = 0;
    std::vector<Bitset> out_, in_;
};

// position[v] = rank of vertex v in the order (0 = first)
struct Ordering {
    std::vector<int> position;

    static Ordering identity(int n) {
        Ordering o;
        o.position.resize(n);
        for (int i = 0; i < n; ++i) o.position[i] = i;
        return o;
    }

    // from a vertex sequence (sequence[i] = vertex at rank i)
    static Ordering from_sequence(const std::vector<int>& seq) {
        Ordering o;
        o.position.assign(seq.size(), -1);
        for (size_t i = 0; i < seq.size(); ++i) o.position[seq[i]] = int(i);
        return o;
    }

    std::vector<int> sequence() const {
        std::vector<int> seq(position.size());
        for (size_t v = 0; v < position.size(); ++v) seq[position[v]] = int(v);
        return seq;
    }

    bool is_valid() const;
};

struct Cycle {
    std::vector<int> vertices; // (v_1,...,v_p), arcs v_i -> v_{i+1} and v_p -> v_1
    int length() const { return int(vertices.size()); }
};

struct InversionFamily {
    std::vector<Bitset> sets;

    int length() const { return int(sets.size()); }
    void push(Bitset s) { sets.push_back(std::move(s)); }
};

// --- elementary operations -------------------------------------------------

OrientedGraph invert(const OrientedGraph& g, const Bitset& x);
OrientedGraph apply_family(const OrientedGraph& g, const InversionFamily& f);

struct AcyclicityResult {
    bool acyclic;
    std::optional<Ordering> order; // topological witness when acyclic
    std::optional<Cycle> cycle;    // counterexample otherwise
};

bool is_acyclic(const OrientedGraph& g);
bool is_acyclic_induced(const OrientedGraph& g, const Bitset& subset);
AcyclicityResult check_acyclic(const OrientedGraph& g);

// Shortest directed cycle; ties broken by the lexicographically least vertex
// sequence (the cycle is rooted at its smallest vertex). Throws NoCycleError
// on acyclic input.
Cycle shortest_cycle(const OrientedGraph& g);

struct DeletionResult {
    OrientedGraph graph;
    std::vector<int> kept; // kept[new label] = old label
};

DeletionResult delete_vertices(const OrientedGraph& g, const Bitset& s);

// Inverting the closed out-neighborhood of x turns x into a
// sink of a tournament. Returns the inverted set and the resulting graph.
std::pair<Bitset, OrientedGraph> sink_reduction(const OrientedGraph& t, int x);

// The two-set family ({x} ∪ N+(x), N+(x)) makes x a sink while
// leaving D - x untouched.
std::pair<InversionFamily, OrientedGraph> vertex_elimination(const OrientedGraph& g, int x);

} // namespace inversion

#endif
