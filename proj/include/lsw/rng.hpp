#ifndef LSW_RNG_HPP
#define LSW_RNG_HPP

#include <cstdint>
#include <random>

namespace lsw {

/// Deterministic random source. mt19937_64 is fully specified by the
/// standard; bounded draws use rejection instead of the (unspecified)
/// standard distributions, so streams replay byte-for-byte everywhere.
class Rng {
public:
    explicit Rng(uint64_t seed) : gen_(seed) {}

    uint64_t next() { return gen_(); }

    // uniform in [0, bound), bound >= 1
    uint64_t below(uint64_t bound) {
        const uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        uint64_t r;
        do {
            r = gen_();
        } while (r >= limit);
        return r % bound;
    }

    // uniform in [lo, hi] inclusive
    int64_t range(int64_t lo, int64_t hi) {
        return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
    }

    bool chance(double prob) {
        return static_cast<double>(below(1u << 30)) < prob * static_cast<double>(1u << 30);
    }

    /// splitmix64 step; used to derive per-trial seeds from a master seed.
    static uint64_t mix(uint64_t seed, uint64_t salt) {
        uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (salt + 1);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

private:
    std::mt19937_64 gen_;
};

} // namespace lsw

#endif
