#include "inversion/gf2.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <stdexcept>
#include <string>

#include "inversion/random.hpp"

namespace inversion {

bool Gf2Matrix::is_symmetric() const {
    if (rows_ != cols_) return false;
    for (int i = 0; i < rows_; ++i)
        for (int j = i + 1; j < cols_; ++j)
            if (get(i, j) != get(j, i)) return false;
    return true;
}

bool Gf2Matrix::is_zero() const {
    for (const Bitset& r : row_)
        if (r.any()) return false;
    return true;
}

bool Gf2Matrix::is_alternating() const {
    if (!is_symmetric()) return false;
    for (int i = 0; i < rows_; ++i)
        if (get(i, i)) return false;
    return true;
}

Gf2Matrix Gf2Matrix::transposed() const {
    Gf2Matrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = row_[i].find_first(); j >= 0; j = row_[i].find_next(j)) t.set(j, i);
    return t;
}

void Gf2Matrix::add_outer_square(const Bitset& x) {
    for (int i = x.find_first(); i >= 0; i = x.find_next(i)) row_[i] ^= x;
}

std::string Gf2Matrix::dump() const {
    std::string s;
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) s += get(i, j) ? '1' : '0';
        s += '\n';
    }
    return s;
}

int rank(const Gf2Matrix& m) {
    std::vector<Bitset> rows;
    rows.reserve(m.rows());
    for (int i = 0; i < m.rows(); ++i) rows.push_back(m.row(i));
    int r = 0;
    for (int col = 0; col < m.cols(); ++col) {
        int pivot = -1;
        for (int i = r; i < int(rows.size()); ++i)
            if (rows[i].test(col)) { pivot = i; break; }
        if (pivot < 0) continue;
        std::swap(rows[r], rows[pivot]);
        for (int i = r + 1; i < int(rows.size()); ++i)
            if (rows[i].test(col)) rows[i] ^= rows[r];
        ++r;
    }
    return r;
}

Gf2Matrix m_sigma(const OrientedGraph& t, const Ordering& sigma) {
    if (!t.is_tournament()) throw std::domain_error("m_sigma: input must be a tournament");
    const int n = t.order();
    if (int(sigma.position.size()) != n || !sigma.is_valid())
        throw std::invalid_argument("m_sigma: ordering does not match the graph");
    Gf2Matrix m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            bool forward = sigma.position[i] < sigma.position[j];
            bool disagrees = forward ? t.arc(j, i) : t.arc(i, j);
            if (disagrees) {
                m.set(i, j);
                m.set(j, i);
            }
        }
    return m;
}

namespace {

int rank_u32(const uint32_t* rows, int n) {
    uint32_t piv[32] = {0};
    int r = 0;
    for (int i = 0; i < n; ++i) {
        uint32_t v = rows[i];
        while (v) {
            int b = __builtin_ctz(v);
            if (piv[b]) {
                v ^= piv[b];
            } else {
                piv[b] = v;
                ++r;
                break;
            }
        }
    }
    return r;
}

} // namespace

int min_gram_cost(const std::vector<uint32_t>& off_diag_rows, int n, int stop_at) {
    bool zero = true;
    for (uint32_t r : off_diag_rows)
        if (r) { zero = false; break; }
    if (zero) return 0;
    int best = n + 1;
    uint32_t work[32];
    for (uint32_t d = 0; d < (uint32_t(1) << n); ++d) {
        for (int i = 0; i < n; ++i) work[i] = off_diag_rows[i] | (((d >> i) & 1u) << i);
        int cost = rank_u32(work, n) + (d == 0 ? 1 : 0);
        if (cost < best) {
            best = cost;
            if (best <= stop_at) return best;
        }
    }
    return best;
}

Gf2Matrix symmetric_square_decomposition(const Gf2Matrix& s_in) {
    if (!s_in.is_symmetric())
        throw std::invalid_argument("symmetric_square_decomposition: matrix not symmetric");
    const int n = s_in.rows();
    Gf2Matrix x(0, n);
    std::vector<Bitset> chosen;

    Gf2Matrix s = s_in;
    Bitset leading_row(n);
    bool peeled = false;
    if (s.is_alternating() && !s.is_zero()) {
        // an alternating nonzero matrix needs one extra square: peel off a
        // nonzero row first, the residual has that row on its diagonal
        for (int i = 0; i < n; ++i)
            if (s.row(i).any()) { leading_row = s.row(i); break; }
        s.add_outer_square(leading_row);
        peeled = true;
    }

    // B-orthonormalization: find vectors c with c^T S c = delta. The residual
    // basis is kept B-orthogonal to every chosen vector.
    auto apply = [&](const Bitset& v) { // v^T S as a row vector
        Bitset r(n);
        for (int i = v.find_first(); i >= 0; i = v.find_next(i)) r ^= s.row(i);
        return r;
    };
    auto form = [&](const Bitset& u, const Bitset& v) { return apply(u).dot(v); };

    std::vector<Bitset> pool;
    for (int i = 0; i < n; ++i) {
        Bitset e(n);
        e.set(i);
        pool.push_back(e);
    }
    while (true) {
        int diag_idx = -1;
        for (size_t i = 0; i < pool.size(); ++i)
            if (form(pool[i], pool[i])) { diag_idx = int(i); break; }
        if (diag_idx >= 0) {
            Bitset c = pool[diag_idx];
            pool.erase(pool.begin() + diag_idx);
            Bitset cs = apply(c);
            for (Bitset& w : pool)
                if (cs.dot(w)) w ^= c;
            chosen.push_back(std::move(c));
            continue;
        }
        // residual form is alternating; repair with a symplectic pair and the
        // last chosen vector
        int ui = -1, wi = -1;
        for (size_t i = 0; i < pool.size() && ui < 0; ++i) {
            Bitset ri = apply(pool[i]);
            for (size_t j = i + 1; j < pool.size(); ++j)
                if (ri.dot(pool[j])) { ui = int(i); wi = int(j); break; }
        }
        if (ui < 0) break; // residual lies in the radical
        assert(!chosen.empty());
        Bitset c = chosen.back();
        chosen.pop_back();
        Bitset u = pool[ui], w = pool[wi];
        pool.erase(pool.begin() + wi);
        pool.erase(pool.begin() + ui);
        Bitset a = c ^ u, b = c ^ w, t = c ^ u ^ w;
        for (const Bitset& fresh : {a, b, t}) {
            Bitset fs = apply(fresh);
            for (Bitset& p : pool)
                if (fs.dot(p)) p ^= fresh;
            chosen.push_back(fresh);
        }
    }

    Gf2Matrix result(int(chosen.size()) + (peeled ? 1 : 0), n);
    int row_idx = 0;
    if (peeled) result.row(row_idx++) = leading_row;
    for (const Bitset& c : chosen) result.row(row_idx++) = apply(c);

    // soundness: the outer squares must sum back to the input, bit-exactly
    Gf2Matrix check(n, n);
    for (int i = 0; i < result.rows(); ++i) check.add_outer_square(result.row(i));
    if (check != s_in)
        throw std::logic_error("symmetric_square_decomposition: certificate check failed");
    return result;
}

GramResult min_gram_rank(const Gf2Matrix& m) {
    if (!m.rows() || m.rows() != m.cols())
        throw std::invalid_argument("min_gram_rank: square matrix required");
    const int n = m.rows();
    if (n > 24) throw std::invalid_argument("min_gram_rank: guarded to n <= 24");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (m.get(i, j) != m.get(j, i))
                throw std::invalid_argument("min_gram_rank: matrix not symmetric off-diagonal");

    std::vector<uint32_t> rows(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.get(i, j)) rows[i] |= uint32_t(1) << j;

    GramResult res;
    bool zero = std::all_of(rows.begin(), rows.end(), [](uint32_t r) { return r == 0; });
    if (zero) {
        res.k = 0;
        res.certificate.x = Gf2Matrix(0, n);
        return res;
    }

    int best_cost = n + 2;
    uint32_t best_d = 0;
    uint32_t work[32];
    for (uint32_t d = 0; d < (uint32_t(1) << n); ++d) {
        for (int i = 0; i < n; ++i) work[i] = rows[i] | (((d >> i) & 1u) << i);
        int cost = rank_u32(work, n) + (d == 0 ? 1 : 0);
        if (cost < best_cost) {
            best_cost = cost;
            best_d = d;
            if (best_cost == 1) break;
        }
    }
    res.k = best_cost;
    res.best_diagonal = best_d;
    res.alternating_fallback = (best_d == 0);

    Gf2Matrix s(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && m.get(i, j)) s.set(i, j);
    for (int i = 0; i < n; ++i)
        if ((best_d >> i) & 1u) s.set(i, i);
    res.certificate.x = symmetric_square_decomposition(s);
    if (res.certificate.x.rows() != res.k)
        throw std::logic_error("min_gram_rank: decomposition length mismatch");
    // off-diagonal soundness
    Gf2Matrix gram(n, n);
    for (int i = 0; i < res.certificate.x.rows(); ++i)
        gram.add_outer_square(res.certificate.x.row(i));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i != j && gram.get(i, j) != m.get(i, j))
                throw std::logic_error("min_gram_rank: certificate mismatch off-diagonal");
    return res;
}

Gf2Matrix random_symmetric(int n, const Bitset& diag, uint64_t seed) {
    if (diag.width() != n)
        throw std::invalid_argument("random_symmetric: diagonal length mismatch");
    Gf2Matrix m(n, n);
    CounterRng rng(seed);
    for (int i = 0; i < n; ++i) {
        m.set(i, i, diag.test(i));
        for (int j = i + 1; j < n; ++j) {
            bool bit = rng.next_bit();
            m.set(i, j, bit);
            m.set(j, i, bit);
        }
    }
    return m;
}

long gram_equation_solutions(int k) {
    const int m = k - 1;
    if (m < 1) throw std::invalid_argument("gram_equation_solutions: k >= 2 required");
    if (m > 5)
        throw std::invalid_argument(
            "gram_equation_solutions: guarded to k-1 <= 5 (2^{(k-1)^2} candidates)");
    // columns c_1..c_m with c_i . c_i = 0 and c_i . c_j = 1 for i != j
    long count = 0;
    std::vector<uint32_t> cols(m);
    auto parity = [](uint32_t v) { return __builtin_popcount(v) & 1; };
    std::function<void(int)> dfs = [&](int t) {
        if (t == m) {
            ++count;
            return;
        }
        for (uint32_t c = 0; c < (uint32_t(1) << m); ++c) {
            if (parity(c)) continue;
            bool ok = true;
            for (int i = 0; i < t; ++i)
                if (!parity(cols[i] & c)) { ok = false; break; }
            if (!ok) continue;
            cols[t] = c;
            dfs(t + 1);
        }
    };
    dfs(0);
    return count;
}

InversionFamily family_from_rows(const Gf2Matrix& x) {
    InversionFamily f;
    for (int i = 0; i < x.rows(); ++i) f.push(x.row(i));
    return f;
}

} // namespace inversion
