// Deterministic random streams addressed by (seed, stream index).

#pragma once

#include <cstdint>
#include <random>

namespace cpmech {

// splitmix64 step; used to whiten (seed, stream) pairs into engine seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Counter-based substream: stream i can be created without drawing streams
// 0..i-1 first, so independent units of work (trials, windows) may be
// sampled concurrently and still replay bit-identically for a fixed seed.
class RngStream {
 public:
  RngStream(std::uint64_t seed, std::uint64_t stream)
      : engine_(mix(seed, stream)) {}

  // Uniform in [0, 1).
  double uniform() {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine_);
  }

  double gaussian(double mean, double stddev) {
    return std::normal_distribution<double>(mean, stddev)(engine_);
  }

  std::int64_t poisson(double mean) {
    return std::poisson_distribution<std::int64_t>(mean)(engine_);
  }

  std::int64_t binomial(std::int64_t trials, double p) {
    return std::binomial_distribution<std::int64_t>(trials, p)(engine_);
  }

 private:
  static std::uint64_t mix(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0xD1B54A32D192ED03ULL * (stream + 1));
    const std::uint64_t a = splitmix64(s);
    const std::uint64_t b = splitmix64(s);
    return a ^ (b << 1);
  }

  std::mt19937_64 engine_;
};

}  // namespace cpmech
