#ifndef inversion_gf2_hpp
#define inversion_gf2_hpp

#include <cstdint>
#include <vector>

#include "inversion/bitset.hpp"
#include "inversion/digraph.hpp"

namespace inversion {

// Bit-packed matrix over the two-element field.
class Gf2Matrix {
public:
    Gf2Matrix() = default;
    Gf2Matrix(int rows, int cols) : rows_(rows), cols_(cols), row_(rows, Bitset(cols)) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    bool get(int i, int j) const { return row_[i].test(j); }
    void set(int i, int j, bool v = true) { row_[i].set(j, v); }

    const Bitset& row(int i) const { return row_[i]; }
    Bitset& row(int i) { return row_[i]; }

    bool is_symmetric() const;
    bool is_zero() const;
    // symmetric with all-zero diagonal
    bool is_alternating() const;

    Gf2Matrix transposed() const;

    void add_outer_square(const Bitset& x); // += x x^T

    bool operator==(const Gf2Matrix& o) const { return rows_ == o.rows_ && row_ == o.row_; }
    bool operator!=(const Gf2Matrix& o) const { return !(*this == o); }

    std::string dump() const; // rows of 0/1 characters

private:
    int rows_ = 0, cols_ = 0;
    std::vector<Bitset> row_;
};

// Row rank by elimination on a scratch copy; the input is untouched.
int rank(const Gf2Matrix& m);

// Symmetric zero-diagonal matrix with a 1 at (i,j) iff the arc between i and
// j disagrees with sigma. Throws std::domain_error on non-tournaments.
Gf2Matrix m_sigma(const OrientedGraph& t, const Ordering& sigma);

struct GramCertificate {
    Gf2Matrix x; // k x n; rows are indicator vectors of inversion sets
};

struct GramResult {
    int k = 0;
    GramCertificate certificate;
    uint32_t best_diagonal = 0;
    bool alternating_fallback = false; // minimum attained only at the zero diagonal
};

// Smallest k admitting a k x n matrix X with (X^T X)_{ij} = M_{ij} for all
// i != j, together with such an X. The diagonal of M is ignored. Guarded to
// n <= 24 (the minimization scans all 2^n diagonals).
GramResult min_gram_rank(const Gf2Matrix& m);

// Exact decomposition S = X^T X ... rows of the result are the x_l with
// sum of outer squares equal to S (diagonal included). S must be symmetric.
// Uses rank(S) rows when S is non-alternating or zero, rank(S)+1 otherwise.
Gf2Matrix symmetric_square_decomposition(const Gf2Matrix& s);

// min over all 2^n diagonals d of rank(M0 + d) plus 1 when the minimum is
// attained only at d = 0 on a nonzero M0. Rows of M0 are packed into 32-bit
// words with a zero diagonal; early-exits once the running minimum reaches
// stop_at. This is the hot loop of the ordering-based exact solver.
int min_gram_cost(const std::vector<uint32_t>& off_diag_rows, int n, int stop_at);

// Strictly-upper entries are independent fair bits from the counter stream
// of `seed`; the diagonal is forced to `diag`.
Gf2Matrix random_symmetric(int n, const Bitset& diag, uint64_t seed);

// Number of matrices U over F_2 of size (k-1)x(k-1) with U^T U equal to the
// all-ones matrix with zero diagonal. Brute force; guarded to k-1 <= 5.
long gram_equation_solutions(int k);

InversionFamily family_from_rows(const Gf2Matrix& x);

} // namespace inversion

#endif
