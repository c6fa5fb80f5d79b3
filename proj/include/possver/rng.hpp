#pragma once

#include <cmath>
#include <cstdint>

namespace possver {

// Deterministic generator with a fixed cross-platform stream (splitmix64).
// Callers that need per-item reproducibility independent of iteration order
// seed one Rng per item via Rng::for_stream(seed, index).
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    // Substream derivation: same (seed, index) -> same stream, regardless of
    // how many other substreams were consumed in between.
    static Rng for_stream(std::uint64_t seed, std::uint64_t index) {
        return Rng(mix(seed + 0x9E3779B97F4A7C15ULL * (index + 1)));
    }

    std::uint64_t next_u64() {
        state_ += 0x9E3779B97F4A7C15ULL;
        return mix(state_);
    }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Box-Muller; one deviate per call (the sine branch is discarded so the
    // stream position depends only on the call count).
    double normal(double mean, double sd) {
        double u1 = uniform();
        double u2 = uniform();
        if (u1 <= 0.0) u1 = 0x1.0p-53;
        double z = std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925286766559 * u2);
        return mean + sd * z;
    }

    // Integer in [0, n).
    std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

private:
    static std::uint64_t mix(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ULL;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBULL;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace possver
