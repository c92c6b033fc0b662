#ifndef inversion_bitset_hpp
#define inversion_bitset_hpp

#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace inversion {

// Fixed-width dynamic bitset. Vertex sets and adjacency rows are stored as
// one of these; width is the order of the host graph and never changes after
// construction.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int nbits)
        : nbits_(nbits), words_((nbits + 63) / 64, 0) {
        if (nbits < 0) throw std::invalid_argument("Bitset: negative width");
    }

    static Bitset of(int nbits, std::initializer_list<int> members) {
        Bitset b(nbits);
        for (int i : members) b.set(i);
        return b;
    }

    int width() const { return nbits_; }

    bool test(int i) const {
        check(i);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }

    void set(int i, bool value = true) {
        check(i);
        if (value) {
            words_[i >> 6] |= uint64_t(1) << (i & 63);
        } else {
            words_[i >> 6] &= ~(uint64_t(1) << (i & 63));
        }
    }

    void reset(int i) { set(i, false); }

    bool any() const {
        for (uint64_t w : words_) if (w) return true;
        return false;
    }

    bool none() const { return !any(); }

    int count() const {
        int c = 0;
        for (uint64_t w : words_) c += __builtin_popcountll(w);
        return c;
    }

    // -1 when empty
    int find_first() const {
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k]) return int(k * 64) + __builtin_ctzll(words_[k]);
        return -1;
    }

    // first member strictly after i, or -1
    int find_next(int i) const {
        ++i;
        if (i >= nbits_) return -1;
        size_t k = size_t(i) >> 6;
        uint64_t w = words_[k] & (~uint64_t(0) << (i & 63));
        while (true) {
            if (w) return int(k * 64) + __builtin_ctzll(w);
            if (++k == words_.size()) return -1;
            w = words_[k];
        }
    }

    std::vector<int> members() const {
        std::vector<int> out;
        for (int i = find_first(); i >= 0; i = find_next(i)) out.push_back(i);
        return out;
    }

    Bitset& operator&=(const Bitset& o) { return apply(o, [](uint64_t a, uint64_t b) { return a & b; }); }
    Bitset& operator|=(const Bitset& o) { return apply(o, [](uint64_t a, uint64_t b) { return a | b; }); }
    Bitset& operator^=(const Bitset& o) { return apply(o, [](uint64_t a, uint64_t b) { return a ^ b; }); }

    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }

    Bitset and_not(const Bitset& o) const {
        require_same_width(o);
        Bitset r(*this);
        for (size_t k = 0; k < words_.size(); ++k) r.words_[k] &= ~o.words_[k];
        return r;
    }

    bool intersects(const Bitset& o) const {
        require_same_width(o);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & o.words_[k]) return true;
        return false;
    }

    bool is_subset_of(const Bitset& o) const {
        require_same_width(o);
        for (size_t k = 0; k < words_.size(); ++k)
            if (words_[k] & ~o.words_[k]) return false;
        return true;
    }

    // parity of |this ∩ o|
    bool dot(const Bitset& o) const {
        require_same_width(o);
        uint64_t acc = 0;
        for (size_t k = 0; k < words_.size(); ++k)
            acc ^= uint64_t(__builtin_popcountll(words_[k] & o.words_[k]));
        return acc & 1;
    }

    bool operator==(const Bitset& o) const { return nbits_ == o.nbits_ && words_ == o.words_; }
    bool operator!=(const Bitset& o) const { return !(*this == o); }

    // total order by bitmask value, low words least significant
    bool operator<(const Bitset& o) const {
        require_same_width(o);
        for (size_t k = words_.size(); k-- > 0;)
            if (words_[k] != o.words_[k]) return words_[k] < o.words_[k];
        return false;
    }

    const std::vector<uint64_t>& words() const { return words_; }

    // low 64 bits; only meaningful when width() <= 64
    uint64_t low_word() const { return words_.empty() ? 0 : words_[0]; }

private:
    void check(int i) const {
        if (i < 0 || i >= nbits_) throw std::out_of_range("Bitset: index out of range");
    }
    void require_same_width(const Bitset& o) const {
        if (nbits_ != o.nbits_) throw std::invalid_argument("Bitset: width mismatch");
    }
    template <class F>
    Bitset& apply(const Bitset& o, F f) {
        require_same_width(o);
        for (size_t k = 0; k < words_.size(); ++k) words_[k] = f(words_[k], o.words_[k]);
        return *this;
    }

    int nbits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace inversion

#endif
