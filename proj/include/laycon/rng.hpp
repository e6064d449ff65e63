#pragma once

#include <cstdint>
#include <random>

namespace laycon {

// Deterministic draws on top of the standardized mt19937_64 stream. The
// std:: distributions are implementation-defined, so bounded draws are done
// by hand to keep seeded runs reproducible across toolchains.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t raw() { return engine_(); }

  // uniform in [0, n)
  int below(int n) { return n <= 1 ? 0 : static_cast<int>(raw() % static_cast<std::uint64_t>(n)); }

  // uniform in [lo, hi] inclusive
  int range(int lo, int hi) { return lo + below(hi - lo + 1); }

  // uniform in [0, 1)
  double unit() { return static_cast<double>(raw() >> 11) * 0x1.0p-53; }

  double uniform(double a, double b) { return a + (b - a) * unit(); }

  bool chance(double p) { return unit() < p; }

private:
  std::mt19937_64 engine_;
};

} // namespace laycon
