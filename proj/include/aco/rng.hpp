#pragma once

#include <cstdint>
#include <random>

namespace aco {

/// Seeded deterministic random source for solver runs.
///
/// One instance is owned by exactly one solver run. Every draw is counted,
/// which lets tests assert that the greedy solver never touches the stream.
/// Values are produced by explicit bit manipulation of mt19937_64 output so
/// that identical seeds give identical streams on every platform.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed), seed_(seed) {}

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform01() {
        ++draws_;
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Uniform integer in [0, n). Requires n > 0.
    std::uint64_t below(std::uint64_t n) {
        ++draws_;
        // Rejection sampling keeps the mapping exact and reproducible.
        const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t v = engine_();
        while (v >= limit) {
            v = engine_();
        }
        return v % n;
    }

    std::uint64_t seed() const { return seed_; }

    /// Number of random values drawn so far.
    std::uint64_t draw_count() const { return draws_; }

  private:
    std::mt19937_64 engine_;
    std::uint64_t seed_;
    std::uint64_t draws_ = 0;
};

} // namespace aco
