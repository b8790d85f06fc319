#pragma once

#include <cmath>
#include <cstdint>
#include <string_view>

namespace embedlab {

// Deterministic random stream with explicit splitting.  All randomness in the
// library flows through this generator so that runs are reproducible
// byte-for-byte across platforms; the C++ standard distributions are avoided
// because their output is implementation-defined.
//
// The core is splitmix64; streams are split by hashing a label and an index
// into the seed, which keeps components (net selection, projection trials,
// refinement moves, ...) independent of each other's draw counts.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : state_(seed ^ kGolden) {}

    std::uint64_t next_u64() {
        std::uint64_t z = (state_ += kGolden);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 bits of precision.
    double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * next_double(); }

    // Uniform integer in [0, n); n must be positive.
    std::uint64_t next_below(std::uint64_t n) {
        // Rejection sampling to avoid modulo bias.
        std::uint64_t threshold = (~n + 1) % n;
        for (;;) {
            std::uint64_t r = next_u64();
            if (r >= threshold) return r % n;
        }
    }

    // Standard normal via Box-Muller (polar form avoided to keep the draw
    // count per call fixed at two).
    double next_normal() {
        double u1 = next_double();
        double u2 = next_double();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * kPi * u2);
    }

    bool next_bool(double p) { return next_double() < p; }

    // Derives an independent stream from (seed, label, index).
    static Rng stream(std::uint64_t seed, std::string_view label, std::uint64_t index = 0) {
        std::uint64_t h = seed ^ kGolden;
        for (char c : label) {
            h ^= static_cast<unsigned char>(c);
            h *= 0x100000001b3ull;
        }
        h ^= index + kGolden + (h << 6) + (h >> 2);
        return Rng(mix(h));
    }

  private:
    static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;
    static constexpr double kPi = 3.14159265358979323846;

    static std::uint64_t mix(std::uint64_t z) {
        z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdull;
        z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
        return z ^ (z >> 33);
    }

    std::uint64_t state_;
};

}  // namespace embedlab
