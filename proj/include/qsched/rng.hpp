#pragma once

#include <cstdint>
#include <random>

namespace qsched {

/**
 * Seeded random stream with platform-stable output.
 *
 * The engine is std::mt19937_64, whose sequence is fully specified by the
 * C++ standard. The standard *distributions* are not (their algorithms are
 * implementation-defined), so uniforms are derived here directly from the
 * top 53 bits of each engine word. Identical seeds therefore produce
 * identical streams on every compiler and platform.
 */
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    // Uniform in [0, 1), 53-bit resolution.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    // Uniform in [lo, hi).
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    // Uniform integer in [0, n). n must be > 0.
    std::uint64_t below(std::uint64_t n) {
        return static_cast<std::uint64_t>(uniform() * static_cast<double>(n)) % n;
    }

  private:
    std::mt19937_64 engine_;
};

// SplitMix64 step; used to derive independent sub-stream seeds from a base
// seed without correlated low bits.
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
    std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

} // namespace qsched
