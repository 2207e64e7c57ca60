#pragma once

#include <cstdint>
#include <random>

namespace netopt {

// Deterministic RNG wrapper. std::uniform_int_distribution and friends are
// implementation-defined, which would break the byte-identical-output
// contract across standard libraries; this wrapper pins the exact mapping
// from engine output to values.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t raw() { return engine_(); }

    // Uniform integer in [0, bound), bound > 0. Lemire's multiply-shift
    // rejection method: unbiased and fully specified.
    std::uint64_t below(std::uint64_t bound) {
        std::uint64_t x = engine_();
        __uint128_t m = static_cast<__uint128_t>(x) * bound;
        auto lo = static_cast<std::uint64_t>(m);
        if (lo < bound) {
            std::uint64_t threshold = (0 - bound) % bound;
            while (lo < threshold) {
                x = engine_();
                m = static_cast<__uint128_t>(x) * bound;
                lo = static_cast<std::uint64_t>(m);
            }
        }
        return static_cast<std::uint64_t>(m >> 64);
    }

    int index(int bound) { return static_cast<int>(below(static_cast<std::uint64_t>(bound))); }

    // Uniform double in [0, 1) with 53 random bits.
    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    bool coin() { return (engine_() >> 63) != 0; }

  private:
    std::mt19937_64 engine_;
};

}  // namespace netopt
