#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace latword {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

/// Deterministic per-stream RNG: a single 64-bit seed expands into
/// independent streams keyed by stream id, so parallel workers and
/// re-runs agree bit for bit.  Only engine output is used directly
/// (std::* distributions are implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0)
      : engine_(splitmix64(splitmix64(seed) ^ splitmix64(stream + 0x51ed2701ULL))) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform in [0, 1) with 53 random bits.
  double next_u01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Index sampled proportionally to `weights` (nonnegative, not all zero).
  int pick(const std::vector<double>& weights) {
    double total = 0;
    for (double w : weights) total += w;
    double u = next_u01() * total;
    double acc = 0;
    for (std::size_t i = 0; i + 1 < weights.size(); ++i) {
      acc += weights[i];
      if (u < acc) return static_cast<int>(i);
    }
    return static_cast<int>(weights.size()) - 1;
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace latword
