// Statistical signatures over a trial series: the cosine correlation C_p,
// its lagged generalization C_+-(j), the normalized channel differences
// Delta_+-, and the sum/difference noise spectra chi_a, chi_s.
//
// The correlations are norm-ratio statistics exactly as defined, with no
// mean removal; a centered (Pearson) variant is provided separately for
// offset-bearing data. All statistics are invariant under positive scaling
// of either channel.

#pragma once

#include <Eigen/Dense>

#include "cpmech/experiment.hpp"

namespace cpmech {

struct CorrelationResult {
  double c_p = 0.0;  // value at lag 0
  int max_lag = 0;
  // C_+(j) for j = -max_lag .. +max_lag, stored at index j + max_lag.
  Eigen::VectorXd lag_profile;

  double c_plus(int lag) const;
  // Mirror of c_plus under the truncating boundary rule.
  double c_minus(int lag) const { return c_plus(-lag); }
};

struct SpectraResult {
  // Full transform grid omega_m = 2*pi*m / (n * interval), m = 0 .. n-1;
  // the spectra are even, so bins above the midpoint mirror the lower half.
  Eigen::VectorXd frequencies_rad_s;
  Eigen::VectorXd chi_s;  // difference-channel noise spectrum
  Eigen::VectorXd chi_a;  // sum-channel noise spectrum
  double grid_spacing_rad_s = 0.0;

  double integrated_chi_s() const { return chi_s.sum() * grid_spacing_rad_s; }
  double integrated_chi_a() const { return chi_a.sum() * grid_spacing_rad_s; }
};

enum class SpectralWindow { Rectangular, Hann };

struct NormalizedDifferences {
  Eigen::VectorXd plus;   // a/|a| + b/|b|
  Eigen::VectorXd minus;  // a/|a| - b/|b|
};

// --- channel-level statistics ---

// sum(a_i * b_i) / (|a| * |b|); rejects channels shorter than 2 samples or
// with zero norm.
double cosine_correlation(const Eigen::Ref<const Eigen::VectorXd>& a,
                          const Eigen::Ref<const Eigen::VectorXd>& b);

// Pearson variant: means removed before the cosine.
double centered_correlation(const Eigen::Ref<const Eigen::VectorXd>& a,
                            const Eigen::Ref<const Eigen::VectorXd>& b);

// C_+(j) = sum_i a_i * b_{i+j} / (|a| * |b|) with out-of-range pairs dropped
// and full-series norms in the denominator, so C_-(j) = C_+(-j) holds
// exactly.
CorrelationResult lagged_correlation(const Eigen::Ref<const Eigen::VectorXd>& a,
                                     const Eigen::Ref<const Eigen::VectorXd>& b,
                                     int max_lag);

NormalizedDifferences normalized_differences(
    const Eigen::Ref<const Eigen::VectorXd>& a,
    const Eigen::Ref<const Eigen::VectorXd>& b);

// Treats Delta_+-(i) as samples of pseudo-signals Gamma_+-(t) at spacing
// interval_s and returns the transform of their biased autocorrelation
// estimates (evaluated as periodograms, which are identical lag for lag and
// guarantee non-negativity). Requires at least 16 samples.
SpectraResult noise_spectra(const Eigen::Ref<const Eigen::VectorXd>& a,
                            const Eigen::Ref<const Eigen::VectorXd>& b,
                            double interval_s,
                            SpectralWindow window = SpectralWindow::Rectangular);

// --- trial-series adapters; channel a is delta_omega_p, channel b is
// delta_n_gamma ---

Eigen::VectorXd omega_channel(const TrialSeries& series);
Eigen::VectorXd count_channel(const TrialSeries& series);

double correlation_cp(const TrialSeries& series);
double correlation_cp_centered(const TrialSeries& series);
CorrelationResult correlation_lagged(const TrialSeries& series, int max_lag);
NormalizedDifferences normalized_differences(const TrialSeries& series);
SpectraResult noise_spectra(const TrialSeries& series, double interval_s,
                            SpectralWindow window = SpectralWindow::Rectangular);

}  // namespace cpmech
