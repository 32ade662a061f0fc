#pragma once

#include <cstdint>
#include <random>
#include <span>

namespace mltomo {

/// SplitMix64 mixing step. Used to spread user seeds over the full 64-bit
/// space before feeding the main engine, and for per-trial reseeding.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Deterministic 64-bit generator: std::mt19937_64 (fully specified by the
/// standard, so streams are bit-identical across platforms) seeded through
/// splitmix64. Unit doubles take the top 53 bits; categorical draws walk the
/// cumulative distribution. No std::*_distribution is used anywhere, those
/// are implementation-defined and would break golden tests.
class SeededRng {
  public:
    explicit SeededRng(std::uint64_t seed) : engine_(splitmix64(seed)) {}

    /// Derives the engine for trial `index` of a run seeded with `seed`.
    static SeededRng for_trial(std::uint64_t seed, std::uint64_t index) {
        return SeededRng(seed + index);
    }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double next_unit() {
        return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    }

    /// Index into `probabilities` drawn by inverse CDF; the final category
    /// absorbs any round-off shortfall.
    std::size_t next_category(std::span<const double> probabilities) {
        const double u = next_unit();
        double cumulative = 0.0;
        for (std::size_t k = 0; k + 1 < probabilities.size(); ++k) {
            cumulative += probabilities[k];
            if (u < cumulative) {
                return k;
            }
        }
        return probabilities.empty() ? 0 : probabilities.size() - 1;
    }

  private:
    std::mt19937_64 engine_;
};

} // namespace mltomo
