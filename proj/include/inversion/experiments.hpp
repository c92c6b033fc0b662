#ifndef inversion_experiments_hpp
#define inversion_experiments_hpp

#include <cstdint>
#include <string>

#include "json.hpp"

#include "inversion/digraph.hpp"

namespace inversion {

// One reproduction run. `verdict` is "consistent", "violated", or
// "inconclusive"; a violated record always carries a re-checkable
// counterexample in `certificate`.
struct ExperimentRecord {
    std::string id;
    nlohmann::json params;
    nlohmann::json measured;
    std::string claim;
    std::string verdict = "inconclusive";
    nlohmann::json certificate;
    double runtime = 0.0;

    nlohmann::json to_json() const;
};

// Maximum inversion number over all tournaments of order n (one exact solve
// per isomorphism class), with an extremal witness. Guarded to n <= 7.
ExperimentRecord max_inv_of_order(int n);

// Samples uniform symmetric zero-diagonal matrices of size n and compares the
// empirical tail Pr[rank <= n - r] for r in [r_lo, r_hi] against the bound
// 2^{-(r^2-4r)/2}. Violated only beyond four binomial standard errors.
ExperimentRecord rank_tail_experiment(int n, int r_lo, int r_hi, long samples, uint64_t seed);

// Builds the dijoin of the interleaved-block tournament (k odd >= 3, block
// size big_n) onto R, assembles the length k + inv(R) - 1 family
// (A_1 u X_1, ..., A_{k-1} u X_1, (u A_i) u X_1, X_2, ..., X_p) and checks
// that it decycles. Requires inv(R) >= 1.
ExperimentRecord dijoin_counterexample(int k, const OrientedGraph& r, int big_n);

// Exhaustive count of solutions U to U^T U = all-ones-minus-identity in
// dimension k-1. Odd k: consistent iff the count is zero (the algebraic core
// of the inv(T_k) >= k lower bound). Even k: control run, no verdict.
ExperimentRecord gram_obstruction(int k);

// Scans a conjectured formula over a parameter range:
//   q            inv(Q_n) = floor((n-1)/2) for n in [lo, hi]
//   triangle_tt1 inv of the k-fold triangle iterate of a single vertex = k
//   triangle_tt2 same over an arc, plus the 2*inv >= k-1 lower bound
//   prop_inv1    inv(triangle(D)) = inv(D)+1 for every oriented graph with
//                n <= 4 and inv <= 1, plus 200 seeded random ones with n <= 6
// Guard breaches are reported per instance and the scan continues.
ExperimentRecord conjecture_scan(const std::string& target, int lo, int hi, uint64_t seed);

} // namespace inversion

#endif
