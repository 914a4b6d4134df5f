#include "cpmech/source.hpp"

#include <cmath>
#include <stdexcept>

#include "cpmech/constants.hpp"

namespace cpmech {

void SourceSpec::validate() const {
  if (!(pair_rate_hz > 0.0))
    throw std::invalid_argument("SourceSpec: pair_rate_hz must be > 0");
  if (!(wavelength_m > 0.0))
    throw std::invalid_argument("SourceSpec: wavelength_m must be > 0");
}

WindowCounts sample_window(const SourceSpec& source, double window_s,
                           RngStream& rng) {
  source.validate();
  if (!(window_s > 0.0))
    throw std::invalid_argument("sample_window: window_s must be > 0");

  const double mean = source.pair_rate_hz * window_s;
  if (mean > 9.223372036854775e18)
    throw std::overflow_error("sample_window: mean pair count exceeds 2^63-1");

  WindowCounts counts;
  counts.n_pairs = rng.poisson(mean);
  counts.alice_left = rng.binomial(counts.n_pairs, 0.5);
  counts.alice_right = counts.n_pairs - counts.alice_left;
  return counts;
}

double photon_energy(const SourceSpec& source) {
  source.validate();
  return kPlanck * kSpeedOfLight / source.wavelength_m;
}

}  // namespace cpmech
