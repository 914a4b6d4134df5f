// Trial-series persistence: a header block echoing the full configuration
// followed by one row per trial. Round trips are bit-exact.

#pragma once

#include <stdexcept>
#include <string>

#include "cpmech/experiment.hpp"

namespace cpmech {

class SeriesError : public std::runtime_error {
 public:
  explicit SeriesError(const std::string& message)
      : std::runtime_error("series file: " + message) {}
};

inline constexpr int kSeriesFormatVersion = 1;

inline constexpr char kSeriesColumns[] =
    "index delta_n_gamma delta_omega_p_rad_s coast_angle_rad violation_flag";

void save_series(const TrialSeries& series, const std::string& path);
TrialSeries load_series(const std::string& path);

}  // namespace cpmech
