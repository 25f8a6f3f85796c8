#pragma once

#include <cstdint>
#include <random>

namespace qsplice {

// Stream name recorded in counts metadata. The mt19937_64 sequence is pinned
// by the C++ standard; the double and bounded-int draws below are pinned here
// so results do not depend on the standard library's distribution objects.
inline constexpr const char* kRngName = "mt19937_64+splitmix64";

class ShotRng {
  public:
    explicit ShotRng(uint64_t seed) : eng_(seed) {}

    uint64_t next_u64() { return eng_(); }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

    bool bernoulli(double p) { return next_unit() < p; }

    // Uniform in [0, n) by rejection.
    uint64_t below(uint64_t n) {
        uint64_t threshold = (0 - n) % n;
        for (;;) {
            uint64_t r = eng_();
            if (r >= threshold) return r % n;
        }
    }

    // splitmix64 mix of (seed, index): derives one independent stream seed per
    // shot so shots can be evaluated concurrently yet reproducibly.
    static uint64_t derive(uint64_t seed, uint64_t index) {
        uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ULL;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace qsplice
