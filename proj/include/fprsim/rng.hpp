#pragma once

#include <cstdint>

namespace fprsim {

/**
 * RngStream — counter-based pseudo-random stream keyed by (seed, streamId).
 *
 * Draw i is a pure function of (seed, streamId, i): the generator walks a
 * SplitMix64 sequence whose start state is a hash of the seed and stream id.
 * Two streams with equal keys produce bit-identical sequences on any
 * platform and under any thread count; streams with different keys are
 * statistically independent. Integer and comparison arithmetic only, so
 * results cannot drift across compilers or libm versions.
 *
 * Not cryptographic.
 */
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t streamId)
        : state_(mix64(seed ^ mix64(streamId + kGolden))) {}

    std::uint64_t nextU64() {
        state_ += kGolden;
        return mix64(state_);
    }

    /// Uniform double in [0, 1), 53 random bits.
    double nextDouble() {
        return static_cast<double>(nextU64() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, bound), unbiased via rejection. bound > 0.
    std::uint64_t nextBelow(std::uint64_t bound) {
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
        std::uint64_t raw = nextU64();
        while (raw >= limit) raw = nextU64();
        return raw % bound;
    }

  private:
    static constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

    // SplitMix64 finalizer (Stafford mix13).
    static constexpr std::uint64_t mix64(std::uint64_t z) {
        z ^= z >> 30;
        z *= 0xBF58476D1CE4E5B9ull;
        z ^= z >> 27;
        z *= 0x94D049BB133111EBull;
        z ^= z >> 31;
        return z;
    }

    std::uint64_t state_;
};

}  // namespace fprsim
