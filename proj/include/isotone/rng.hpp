#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace isotone {

// Deterministic splitmix64 stream. Streams are derived from (seed, stream)
// pairs so sampled corpora are reproducible across platforms and independent
// of evaluation order; the standard <random> distributions are avoided on
// purpose (their output is implementation-defined).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(mix(seed ^ kGolden)) {}
  Rng(std::uint64_t seed, std::uint64_t stream) : state_(mix(mix(seed ^ kGolden) + stream)) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += kGolden);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double log_uniform(double lo, double hi) {
    return lo * std::exp(uniform01() * std::log(hi / lo));
  }

  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }

  bool chance(double p) { return uniform01() < p; }

  double normal() {
    // Box-Muller; one value per call keeps the stream layout simple.
    double u1 = uniform01();
    double u2 = uniform01();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586 * u2);
  }

  std::vector<double> uniform_vector(std::size_t dim, double lo, double hi) {
    std::vector<double> v(dim);
    for (auto& e : v) e = uniform(lo, hi);
    return v;
  }

  // Uniform direction on the unit sphere of R^dim.
  std::vector<double> unit_vector(std::size_t dim) {
    std::vector<double> v(dim);
    while (true) {
      double s = 0.0;
      for (auto& e : v) {
        e = normal();
        s += e * e;
      }
      if (s > 1e-24) {
        double inv = 1.0 / std::sqrt(s);
        for (auto& e : v) e *= inv;
        return v;
      }
    }
  }

 private:
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ull;

  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 33)) * 0xff51afd7ed558ccdull;
    z = (z ^ (z >> 33)) * 0xc4ceb9fe1a85ec53ull;
    return z ^ (z >> 33);
  }

  std::uint64_t state_;
};

}  // namespace isotone
