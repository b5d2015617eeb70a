#pragma once

#include <cstdint>
#include <cmath>

namespace zscir {

// Deterministic splitmix64-based generator. Every stochastic step in the
// project goes through this so that runs are reproducible across platforms
// and standard-library versions (std::normal_distribution is not pinned).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, bound). Modulo bias is negligible for the small
  // bounds used here (vocab sizes, pool sizes).
  std::uint64_t below(std::uint64_t bound) { return next_u64() % bound; }

  // Standard normal via Box-Muller; one value per call, no caching so a
  // stream's output is a pure function of its draw count.
  double normal() {
    double u1 = uniform();
    double u2 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(6.283185307179586476925287 * u2);
  }

  // Derives an independent stream, e.g. one per image or per training step.
  static Rng stream(std::uint64_t seed, std::uint64_t index) {
    Rng mix(seed ^ (0xa0761d6478bd642full * (index + 1)));
    mix.next_u64();
    return mix;
  }

  std::uint64_t state() const { return state_; }
  void set_state(std::uint64_t s) { state_ = s; }

 private:
  std::uint64_t state_;
};

}  // namespace zscir
