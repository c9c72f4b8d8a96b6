#pragma once

#include <cstdint>
#include <random>

namespace jointspec {

/// Deterministic, platform-independent random source. Distributions are
/// implemented here rather than through <random> so reports are byte-stable.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Per-trial stream derived from (seed, index).
  static Rng derive(std::uint64_t seed, std::uint64_t index) { return Rng(splitmix(seed ^ splitmix(index + 1))); }

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [lo, hi].
  long long uniform_int(long long lo, long long hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<long long>(next() % span);
  }

  /// Uniform double in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  bool bernoulli(double p) { return uniform() < p; }

  static std::uint64_t splitmix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace jointspec
