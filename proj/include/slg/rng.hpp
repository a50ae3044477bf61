#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace slg {

// splitmix64 finalizer over (stream, index); decorrelates derived seeds so
// per-scene and per-run streams can be spawned from one master seed.
inline std::uint64_t mix_seed(std::uint64_t stream, std::uint64_t index) {
  std::uint64_t z = stream + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Deterministic RNG. mt19937_64 output is pinned by the standard; the
// distributions are hand-rolled because std:: distribution algorithms are
// implementation-defined and would break replay across toolchains.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed, 0x5851f42d4c957f2dULL)) {}

  std::uint64_t next() { return engine_(); }

  // [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // inclusive range, masked rejection keeps it unbiased
  int uniform_int(int lo, int hi) {
    const std::uint64_t n = static_cast<std::uint64_t>(hi - lo) + 1;
    std::uint64_t mask = n - 1;
    mask |= mask >> 1;
    mask |= mask >> 2;
    mask |= mask >> 4;
    mask |= mask >> 8;
    mask |= mask >> 16;
    mask |= mask >> 32;
    std::uint64_t x = 0;
    do {
      x = next() & mask;
    } while (x >= n);
    return lo + static_cast<int>(x);
  }

  bool coin() { return uniform() < 0.5; }

  // Marsaglia polar method. The spare deviate is discarded so each call
  // consumes a self-contained chunk of the stream.
  double gaussian(double mean = 0.0, double sd = 1.0) {
    double u = 0.0;
    double s = 0.0;
    do {
      u = uniform(-1.0, 1.0);
      const double v = uniform(-1.0, 1.0);
      s = u * u + v * v;
    } while (s >= 1.0 || s == 0.0);
    return mean + sd * u * std::sqrt(-2.0 * std::log(s) / s);
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace slg
