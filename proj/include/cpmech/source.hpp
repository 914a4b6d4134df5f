// Photon-pair stream statistics: pair arrivals per measurement window and
// the circular-polarization count imbalance on the analyzer side.

#pragma once

#include <cstdint>

#include "cpmech/rng.hpp"

namespace cpmech {

struct SourceSpec {
  double pair_rate_hz = 0.0;  // N_gamma, photon pairs per second
  double wavelength_m = 0.0;
  void validate() const;
};

// One measurement window on Alice's side. delta_n is left minus right; the
// sign convention matches the mechanical detector's relative-kick convention
// so the ideal correlation between the two stations comes out +1.
struct WindowCounts {
  std::int64_t n_pairs = 0;
  std::int64_t alice_left = 0;
  std::int64_t alice_right = 0;

  std::int64_t delta_n() const { return alice_left - alice_right; }

  bool operator==(const WindowCounts&) const = default;
};

// Pair arrivals are Poisson with mean pair_rate * window; each pair's
// analyzer outcome is an independent Born-rule coin, so alice_left is
// binomial(n_pairs, 1/2). The minimal model: the source is not claimed to
// produce coherent-state statistics, only the sqrt(t*N) fluctuation scale.
WindowCounts sample_window(const SourceSpec& source, double window_s,
                           RngStream& rng);

// h*c/lambda in joules.
double photon_energy(const SourceSpec& source);

}  // namespace cpmech
