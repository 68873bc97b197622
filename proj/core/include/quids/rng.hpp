#pragma once

// Seeded random streams with portable sampling.
//
// Every stochastic piece of the simulator draws from a Stream derived from
// the scenario seed plus a fixed path of tags (purpose, window, vehicle, ...),
// so outputs are byte-identical for a given seed regardless of how many draws
// other components consume.  Normal and Poisson variates are sampled with
// fixed algorithms rather than std::*_distribution, whose draw sequences are
// implementation-defined.

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <span>

namespace quids::rng {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ull;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

// Derive a child seed from a root seed and a tag path.
inline std::uint64_t derive(std::uint64_t seed, std::initializer_list<std::uint64_t> path) {
  std::uint64_t s = seed;
  std::uint64_t h = splitmix64(s);
  for (std::uint64_t p : path) {
    s ^= p + 0x9E3779B97F4A7C15ull + (h << 6) + (h >> 2);
    h = splitmix64(s);
  }
  return h;
}

class Stream {
 public:
  explicit Stream(std::uint64_t seed) : gen_(seed) {}
  Stream(std::uint64_t seed, std::initializer_list<std::uint64_t> path) : gen_(derive(seed, path)) {}

  std::uint64_t bits() { return gen_(); }

  // Uniform in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(bits() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Unbiased integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n <= 1) return 0;
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % n);
    std::uint64_t x;
    do {
      x = bits();
    } while (x >= limit);
    return x % n;
  }

  // Inclusive integer range.
  int uniform_int(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

  // Box-Muller without caching: always consumes exactly two uniforms.
  double normal() {
    const double u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log1p(-u1));
    return r * std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  double normal(double mean, double stddev) { return mean + stddev * normal(); }

  // Knuth multiplication method, chunked so the product never underflows.
  int poisson(double lambda) {
    int total = 0;
    while (lambda > 30.0) {
      total += poisson_knuth(30.0);
      lambda -= 30.0;
    }
    return total + poisson_knuth(lambda);
  }

  // Index sampled proportionally to nonnegative weights (sum must be > 0).
  std::size_t weighted_index(std::span<const double> weights) {
    double total = 0;
    for (double w : weights) total += w;
    double u = uniform() * total;
    for (std::size_t i = 0; i < weights.size(); ++i) {
      u -= weights[i];
      if (u < 0) return i;
    }
    return weights.size() - 1;
  }

 private:
  int poisson_knuth(double lambda) {
    if (lambda <= 0) return 0;
    const double limit = std::exp(-lambda);
    int k = 0;
    double p = 1.0;
    do {
      ++k;
      p *= uniform();
    } while (p > limit);
    return k - 1;
  }

  std::mt19937_64 gen_;
};

}  // namespace quids::rng
