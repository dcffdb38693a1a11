#pragma once

#include <cstdint>

namespace covertime {

// Counter-based splittable RNG. A stream is keyed by (seed, a, b, c) through a
// SplitMix64-style finalizer, so trial streams derived from (seed, start,
// trial) are reproducible bit-for-bit regardless of thread count or platform.
class Rng {
  public:
    explicit Rng(std::uint64_t state) : state_(state) {}

    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    static Rng stream(std::uint64_t seed, std::uint64_t a = 0, std::uint64_t b = 0,
                      std::uint64_t c = 0) {
        std::uint64_t s = mix(seed + 0x9E3779B97F4A7C15ULL);
        s = mix(s ^ (a + 0xD1B54A32D192ED03ULL));
        s = mix(s ^ (b + 0x8CB92BA72F3D8DD7ULL));
        s = mix(s ^ (c + 0xEB44ACCAB455D165ULL));
        return Rng(s);
    }

    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform draw from [0, n) via 128-bit multiply; bias < 2^-64 * n.
    std::uint64_t bounded(std::uint64_t n) {
        return static_cast<std::uint64_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    // Uniform double in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  private:
    std::uint64_t state_;
};

}  // namespace covertime
