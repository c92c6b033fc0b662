#ifndef inversion_solvers_hpp
#define inversion_solvers_hpp

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "inversion/digraph.hpp"
#include "inversion/gf2.hpp"

namespace inversion {

// A size guard or step budget was exceeded. Guards never degrade to an
// approximate answer; they throw.
struct ResourceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A supplied certificate failed re-verification.
struct CertificateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ExhaustionRecord {
    std::string space;   // human-readable description of the enumerated space
    long candidates = 0; // size of the per-level candidate pool
    long examined = 0;   // leaves / states actually visited
    int depth = 0;       // maximum family length proven insufficient + 1
};

struct CertifiedValue {
    int value = 0;
    bool found = true; // false: value exceeds the search limit (value = limit)
    InversionFamily family;
    std::vector<int> vertex_witness;              // tau
    std::vector<std::pair<int, int>> arc_witness; // tau'
    std::optional<ExhaustionRecord> exhaustion;
    std::string method;
    double elapsed = 0.0;
};

// Iterative deepening over strictly increasing subset tuples; the unique
// minimum-length decycling family consists of distinct sets of size >= 2
// each flipping at least one arc, so only those are enumerated. Works on any
// oriented graph. Guarded to n <= 14; `budget` caps leaf evaluations.
CertifiedValue inv_exact_oracle(const OrientedGraph& d, int limit,
                                long budget = 400'000'000);

// Exact inversion number of a tournament via enumeration of acyclic
// orderings and the minimum Gram rank of the disagreement matrix. Guarded to
// n <= 9. The Gram certificate is converted to an inversion family and
// re-verified by application.
CertifiedValue inv_exact(const OrientedGraph& t);

// Minimum family length realizing acyclic ordering sigma, with certificate.
CertifiedValue inv_sigma(const OrientedGraph& t, const Ordering& sigma);

// Recursive min-in-degree construction; the result always decycles and has
// length <= n - ceil(log2(n+1)).
CertifiedValue greedy_upper_bound(const OrientedGraph& t);

// Minimum cycle transversal (vertex set), subset brute force, n <= 16.
CertifiedValue tau(const OrientedGraph& d);

// Minimum cycle arc-transversal via the subset DP over orderings, n <= 20.
CertifiedValue tau_prime(const OrientedGraph& d);

struct BoundsReport {
    CertifiedValue inv;
    CertifiedValue tau_value;
    CertifiedValue tau_prime_value;
    bool inv_le_tau_prime = false;
    bool inv_le_two_tau = false;
    bool deletion_monotone = false; // inv(D-x) <= inv(D) <= inv(D-x)+2 for all x
};

BoundsReport check_bounds(const OrientedGraph& d);

struct SplitResult {
    Cycle cycle;
    InversionFamily family; // decycles D, stated in D's labels
    int overhead = 0;       // family length minus the supplied family length
};

// Extends a decycling family of D - C (C the shortest cycle of D, labels per
// delete_vertices) to one of D with overhead <= 7 when 3 | |C|, <= 10
// otherwise.
SplitResult split_off_cycle(const OrientedGraph& d, const InversionFamily& family_minus_c);

int ceil_log2(long x); // smallest k with 2^k >= x

} // namespace inversion

#endif
