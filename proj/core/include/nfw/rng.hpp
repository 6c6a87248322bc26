#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace nfw {

// Counter-based generator: every draw is a pure function of (key, counter),
// so streams can be split by index and results do not depend on how work is
// scheduled across threads. The mixer is splitmix64.
class CounterRng {
 public:
  explicit CounterRng(std::uint64_t seed, std::uint64_t stream = 0)
      : key_(mix(seed ^ mix(stream + 0x9e3779b97f4a7c15ull))), counter_(0) {}

  // Independent generator for a derived stream, e.g. (seed, sample index).
  CounterRng substream(std::uint64_t index) const {
    CounterRng r(0);
    r.key_ = mix(key_ ^ mix(index + 0x2545f4914f6cdd1dull));
    r.counter_ = 0;
    return r;
  }

  std::uint64_t next_u64() { return mix(key_ + 0x9e3779b97f4a7c15ull * ++counter_); }

  // Uniform in [0, 1).
  double next_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n).
  std::uint64_t next_below(std::uint64_t n) { return n ? next_u64() % n : 0; }

  // Standard normal via Box-Muller (portable across platforms, unlike
  // std::normal_distribution).
  double next_gaussian() {
    double u1 = next_double();
    double u2 = next_double();
    while (u1 <= 0.0) u1 = next_double();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Uniform point on the simplex of the given dimension (flat Dirichlet).
  std::vector<double> next_simplex_point(std::size_t n) {
    std::vector<double> w(n);
    double total = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double u = next_double();
      while (u <= 0.0) u = next_double();
      w[i] = -std::log(u);
      total += w[i];
    }
    for (double& v : w) v /= total;
    return w;
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  std::uint64_t key_;
  std::uint64_t counter_;
};

}  // namespace nfw
