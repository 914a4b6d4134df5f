#include "cpmech/analysis.hpp"

#include <cmath>
#include <stdexcept>

#include <unsupported/Eigen/FFT>

namespace cpmech {

namespace {

void require_channels(const Eigen::Ref<const Eigen::VectorXd>& a,
                      const Eigen::Ref<const Eigen::VectorXd>& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("analysis: channels differ in length");
  if (a.size() < 2)
    throw std::invalid_argument("analysis: need at least 2 samples");
}

double channel_norm(const Eigen::Ref<const Eigen::VectorXd>& v) {
  const double n = v.norm();
  if (!(n > 0.0))
    throw std::domain_error("analysis: all-zero channel, statistic undefined");
  return n;
}

// sum_i a_i * b_{i+j}, pairs with i+j outside [0, n) dropped.
double lag_sum(const Eigen::Ref<const Eigen::VectorXd>& a,
               const Eigen::Ref<const Eigen::VectorXd>& b, int lag) {
  const Eigen::Index n = a.size();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < n; ++i) {
    const Eigen::Index k = i + lag;
    if (k >= 0 && k < n) sum += a[i] * b[k];
  }
  return sum;
}

}  // namespace

double CorrelationResult::c_plus(int lag) const {
  if (lag < -max_lag || lag > max_lag)
    throw std::out_of_range("CorrelationResult: lag outside profile");
  return lag_profile[lag + max_lag];
}

double cosine_correlation(const Eigen::Ref<const Eigen::VectorXd>& a,
                          const Eigen::Ref<const Eigen::VectorXd>& b) {
  require_channels(a, b);
  return lag_sum(a, b, 0) / (channel_norm(a) * channel_norm(b));
}

double centered_correlation(const Eigen::Ref<const Eigen::VectorXd>& a,
                            const Eigen::Ref<const Eigen::VectorXd>& b) {
  require_channels(a, b);
  const Eigen::VectorXd ac = a.array() - a.mean();
  const Eigen::VectorXd bc = b.array() - b.mean();
  return cosine_correlation(ac, bc);
}

CorrelationResult lagged_correlation(const Eigen::Ref<const Eigen::VectorXd>& a,
                                     const Eigen::Ref<const Eigen::VectorXd>& b,
                                     int max_lag) {
  require_channels(a, b);
  if (max_lag < 0)
    throw std::invalid_argument("lagged_correlation: max_lag must be >= 0");
  if (max_lag >= a.size())
    throw std::invalid_argument(
        "lagged_correlation: max_lag must be < series length");

  const double denom = channel_norm(a) * channel_norm(b);
  CorrelationResult result;
  result.max_lag = max_lag;
  result.lag_profile.resize(2 * max_lag + 1);
  for (int j = -max_lag; j <= max_lag; ++j)
    result.lag_profile[j + max_lag] = lag_sum(a, b, j) / denom;
  result.c_p = result.lag_profile[max_lag];
  return result;
}

NormalizedDifferences normalized_differences(
    const Eigen::Ref<const Eigen::VectorXd>& a,
    const Eigen::Ref<const Eigen::VectorXd>& b) {
  require_channels(a, b);
  const Eigen::VectorXd an = a / channel_norm(a);
  const Eigen::VectorXd bn = b / channel_norm(b);
  return NormalizedDifferences{an + bn, an - bn};
}

namespace {

// Periodogram of one pseudo-signal on the full transform grid: identical,
// lag for lag, to transforming the biased autocorrelation estimate, and
// non-negative by construction.
Eigen::VectorXd periodogram(const Eigen::VectorXd& samples, double interval_s,
                            SpectralWindow window) {
  const Eigen::Index n = samples.size();
  Eigen::VectorXd data = samples;
  double weight_sum_sq = static_cast<double>(n);
  if (window == SpectralWindow::Hann) {
    Eigen::VectorXd taper(n);
    for (Eigen::Index i = 0; i < n; ++i)
      taper[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * static_cast<double>(i) /
                                       static_cast<double>(n - 1)));
    data.array() *= taper.array();
    weight_sum_sq = taper.squaredNorm();
  }

  Eigen::FFT<double> fft;
  Eigen::VectorXcd transform;
  fft.fwd(transform, data);

  return transform.cwiseAbs2() * (interval_s / weight_sum_sq);
}

}  // namespace

SpectraResult noise_spectra(const Eigen::Ref<const Eigen::VectorXd>& a,
                            const Eigen::Ref<const Eigen::VectorXd>& b,
                            double interval_s, SpectralWindow window) {
  require_channels(a, b);
  if (a.size() < 16)
    throw std::invalid_argument("noise_spectra: need at least 16 samples");
  if (!(interval_s > 0.0))
    throw std::invalid_argument("noise_spectra: interval_s must be > 0");

  const NormalizedDifferences diffs = normalized_differences(a, b);
  const Eigen::Index n = a.size();

  SpectraResult result;
  result.grid_spacing_rad_s = 2.0 * kPi / (static_cast<double>(n) * interval_s);
  result.frequencies_rad_s =
      Eigen::VectorXd::LinSpaced(n, 0.0, static_cast<double>(n - 1)) *
      result.grid_spacing_rad_s;
  result.chi_s = periodogram(diffs.minus, interval_s, window);
  result.chi_a = periodogram(diffs.plus, interval_s, window);
  return result;
}

Eigen::VectorXd omega_channel(const TrialSeries& series) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(series.records.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = series.records[static_cast<std::size_t>(i)].delta_omega_p_rad_s;
  return v;
}

Eigen::VectorXd count_channel(const TrialSeries& series) {
  Eigen::VectorXd v(static_cast<Eigen::Index>(series.records.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i)
    v[i] = series.records[static_cast<std::size_t>(i)].delta_n_gamma;
  return v;
}

double correlation_cp(const TrialSeries& series) {
  return cosine_correlation(omega_channel(series), count_channel(series));
}

double correlation_cp_centered(const TrialSeries& series) {
  return centered_correlation(omega_channel(series), count_channel(series));
}

CorrelationResult correlation_lagged(const TrialSeries& series, int max_lag) {
  return lagged_correlation(omega_channel(series), count_channel(series),
                            max_lag);
}

NormalizedDifferences normalized_differences(const TrialSeries& series) {
  return normalized_differences(omega_channel(series), count_channel(series));
}

SpectraResult noise_spectra(const TrialSeries& series, double interval_s,
                            SpectralWindow window) {
  return noise_spectra(omega_channel(series), count_channel(series),
                       interval_s, window);
}

}  // namespace cpmech
