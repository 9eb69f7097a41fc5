#pragma once

#include <cstdint>
#include <vector>

namespace memetrack {

// SplitMix64 generator. std::shuffle and the standard distributions are
// implementation-defined, so every randomized code path (null models, the
// synthetic generator) draws from this instead; outputs are then identical
// for a given seed on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Unbiased draw from [0, n) by rejection.
    std::uint64_t bounded(std::uint64_t n) {
        if (n <= 1) return 0;
        const std::uint64_t limit = ~0ULL - ~0ULL % n;
        std::uint64_t x;
        do {
            x = next();
        } while (x >= limit);
        return x % n;
    }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return unit() < p; }

    // Geometric count of failures before success, success probability p.
    // Loop form avoids libm so draws stay bit-stable everywhere.
    std::uint64_t geometric(double p) {
        if (p >= 1.0) return 0;
        if (p <= 0.0) return 0;
        std::uint64_t k = 0;
        while (!bernoulli(p)) ++k;
        return k;
    }

    template <typename T>
    void shuffle(std::vector<T>& v) {
        shuffle_range(v, 0, v.size());
    }

    // Fisher-Yates over v[begin, end).
    template <typename T>
    void shuffle_range(std::vector<T>& v, std::size_t begin, std::size_t end) {
        for (std::size_t i = end - begin; i > 1; --i) {
            std::size_t j = static_cast<std::size_t>(bounded(i));
            std::swap(v[begin + i - 1], v[begin + j]);
        }
    }

private:
    std::uint64_t state_;
};

}  // namespace memetrack
