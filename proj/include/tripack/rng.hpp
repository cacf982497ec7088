#ifndef TRIPACK_RNG_HPP
#define TRIPACK_RNG_HPP

#include <cstdint>
#include <vector>

namespace tripack {

// SplitMix64 (Steele, Lea & Flood 2014): 64-bit state, one multiply-xorshift
// output function. Chosen because its entire behaviour is pinned down by the
// constants below, so seeded experiment reports reproduce bit-for-bit on any
// platform. Not suitable for cryptography, entirely suitable for sampling
// desk-scale graphs.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // Uniform value in [0, bound) via the fixed-point multiply method.
    // bound = 0 yields 0.
    std::uint64_t below(std::uint64_t bound) {
        if (bound == 0) return 0;
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * bound) >> 64);
    }

    // Integer in [lo, hi] inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo + 1)));
    }

    bool coin() { return (next() & 1) != 0; }

    // Fisher-Yates shuffle, iterating from the back.
    template <typename T>
    void shuffle(std::vector<T>& items) {
        for (std::size_t i = items.size(); i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(below(i));
            std::swap(items[i - 1], items[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace tripack

#endif
