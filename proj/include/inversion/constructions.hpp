#ifndef inversion_constructions_hpp
#define inversion_constructions_hpp

#include <cstdint>
#include <functional>
#include <utility>

#include "inversion/digraph.hpp"

namespace inversion {

// Transitive tournament: arcs i -> j for i < j.
OrientedGraph transitive(int n);

// Directed cycle: arcs i -> i+1 (mod p), p >= 3.
OrientedGraph directed_cycle(int p);

// Transitive tournament with its hamiltonian path reversed: arcs i+1 -> i for
// consecutive pairs and i -> j for j > i+1.
OrientedGraph q_tournament(int n);

// Lexicographic product D[H]: vertex (a,x) is labeled a*|H| + x.
OrientedGraph lex_product(const OrientedGraph& d, const OrientedGraph& h);

// Disjoint union of L and R plus all arcs L -> R; L keeps labels 0..|L|-1.
OrientedGraph dijoin(const OrientedGraph& l, const OrientedGraph& r);

// One application of the triangle operator: append u then v as the two
// highest labels, with all arcs V(D) -> u, u -> v, v -> V(D).
OrientedGraph triangle(const OrientedGraph& d);
OrientedGraph triangle_iter(const OrientedGraph& d, int k);

// Rotational tournament on 5 vertices: i -> j iff (j - i) mod 5 in {1, 3}.
// (The presentation with offsets {1, 2} is the image under i -> 3i mod 5.)
OrientedGraph r5();

// Interleaved-block tournament on 2N(k-1) vertices together with its length-k
// decycling family (A_1, ..., A_{k-1}, union of the A_i). Block vertices
// follow the total order a^1_1 < a'^1_1 < a^2_1 < ... so every label is
// reproducible: a^j_i sits at 2((i-1)N + (j-1)), a'^j_i one above it. Arcs
// follow the order except between unprimed vertices of different blocks,
// which are reversed.
std::pair<OrientedGraph, InversionFamily> tk_tournament(int k, int big_n);

// block size 4^{k-1} + 1 at which the dijoin lower-bound argument applies
inline long tk_full_block_size(int k) {
    long n = 1;
    for (int i = 1; i < k; ++i) n *= 4;
    return n + 1;
}

// Each pair oriented by an independent fair bit of a counter-based SplitMix64
// stream; identical seeds give identical graphs.
OrientedGraph random_tournament(int n, uint64_t seed);

// Random oriented graph: random tournament with each arc kept independently
// with probability keep_num/keep_den.
OrientedGraph random_oriented_graph(int n, uint64_t seed, int keep_num = 7, int keep_den = 10);

// Streams all 2^{n(n-1)/2} labeled tournaments, or one representative per
// isomorphism class when labeled = false. Guarded to n <= 7.
void enumerate_tournaments(int n, bool labeled,
                           const std::function<void(const OrientedGraph&)>& sink);

// Streams all orientations (u->v, v->u, or absent per pair) of the complete
// graph on n vertices, i.e. all labeled oriented graphs. Guarded to n <= 5.
void enumerate_oriented_graphs(int n, const std::function<void(const OrientedGraph&)>& sink);

// Lexicographically least adjacency encoding over all relabelings; equal
// codes iff isomorphic. The upper triangle is read row by row under the
// relabeling and packed into a 64-bit word (n <= 11).
uint64_t canonical_code(const OrientedGraph& g);

} // namespace inversion

#endif
