#ifndef inversion_random_hpp
#define inversion_random_hpp

#include <cstdint>

namespace inversion {

// SplitMix64 finalizer (Steele, Lea, Flood 2014).
inline uint64_t splitmix64(uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// Counter-based generator: the stream is a pure function of (seed, counter),
// so every experiment replays bit-identically from its recorded seed.
class CounterRng {
public:
    explicit CounterRng(uint64_t seed) : key_(splitmix64(seed)) {}

    uint64_t next() { return splitmix64(key_ ^ (0x9e3779b97f4a7c15ULL * ++counter_)); }

    bool next_bit() { return next() & 1; }

    // uniform in [0, bound)
    uint64_t next_below(uint64_t bound) { return next() % bound; }

private:
    uint64_t key_;
    uint64_t counter_ = 0;
};

} // namespace inversion

#endif
