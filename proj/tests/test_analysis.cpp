#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "cpmech/analysis.hpp"
#include "cpmech/constants.hpp"

using namespace cpmech;

namespace {

Eigen::VectorXd gaussian_channel(std::mt19937_64& eng, int n, double sigma = 1.0) {
  std::normal_distribution<double> gauss(0.0, sigma);
  Eigen::VectorXd v(n);
  for (int i = 0; i < n; ++i) v[i] = gauss(eng);
  return v;
}

// Reference spectral route: taper, biased autocorrelation by direct
// summation, then the two-sided transform evaluated lag by lag. The
// production path goes through a periodogram instead; the two must agree.
Eigen::VectorXd acf_route_spectrum(const Eigen::VectorXd& samples,
                                   double interval_s, SpectralWindow window) {
  const int n = static_cast<int>(samples.size());
  Eigen::VectorXd y = samples;
  double weight_sum_sq = static_cast<double>(n);
  if (window == SpectralWindow::Hann) {
    Eigen::VectorXd taper(n);
    for (int i = 0; i < n; ++i)
      taper[i] = 0.5 * (1.0 - std::cos(2.0 * kPi * i / (n - 1)));
    y.array() *= taper.array();
    weight_sum_sq = taper.squaredNorm();
  }

  Eigen::VectorXd acf(n);  // sum_i y_i y_{i+k}, not yet scaled
  for (int k = 0; k < n; ++k) {
    double sum = 0.0;
    for (int i = 0; i + k < n; ++i) sum += y[i] * y[i + k];
    acf[k] = sum;
  }

  Eigen::VectorXd chi(n);
  for (int m = 0; m < n; ++m) {
    const double omega_step = 2.0 * kPi * m / n;  // omega * interval per lag
    double sum = acf[0];
    for (int k = 1; k < n; ++k) sum += 2.0 * acf[k] * std::cos(omega_step * k);
    chi[m] = interval_s * sum / weight_sum_sq;
  }
  return chi;
}

}  // namespace

TEST_CASE("proportional channels give unit correlation") {
  std::mt19937_64 eng(1);
  const Eigen::VectorXd b = gaussian_channel(eng, 500);
  const Eigen::VectorXd a = 3.7e-9 * b;
  CHECK(cosine_correlation(a, b) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(cosine_correlation(-a, b) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("independent channels decorrelate as 1/sqrt(n)") {
  std::mt19937_64 eng(2);
  const int n = 10000;
  const Eigen::VectorXd a = gaussian_channel(eng, n);
  const Eigen::VectorXd b = gaussian_channel(eng, n);
  CHECK(std::abs(cosine_correlation(a, b)) < 0.05);
}

TEST_CASE("correlation preconditions") {
  const Eigen::VectorXd zeros = Eigen::VectorXd::Zero(10);
  const Eigen::VectorXd ones = Eigen::VectorXd::Ones(10);
  CHECK_THROWS_AS(cosine_correlation(zeros, ones), std::domain_error);
  CHECK_THROWS_AS(cosine_correlation(ones, zeros), std::domain_error);

  const Eigen::VectorXd one(1);
  CHECK_THROWS_AS(cosine_correlation(one, one), std::invalid_argument);
  CHECK_THROWS_AS(cosine_correlation(ones, one), std::invalid_argument);

  CHECK_THROWS_AS(lagged_correlation(ones, ones, 10), std::invalid_argument);
  CHECK_THROWS_AS(lagged_correlation(ones, ones, -1), std::invalid_argument);
}

TEST_CASE("centered variant removes offsets") {
  std::mt19937_64 eng(3);
  const Eigen::VectorXd a = gaussian_channel(eng, 2000);
  const Eigen::VectorXd b = a.array() + 100.0;  // same signal, large offset
  CHECK(centered_correlation(a, b) == doctest::Approx(1.0).epsilon(1e-9));
  // The as-printed statistic is dominated by the offset instead.
  CHECK(std::abs(cosine_correlation(a, b)) < 0.1);
}

TEST_CASE("lag profile peaks where the channels align") {
  std::mt19937_64 eng(4);
  const int n = 10000;
  const int shift = 7;
  const Eigen::VectorXd base = gaussian_channel(eng, n);
  const Eigen::VectorXd a = 2.5 * base;
  Eigen::VectorXd delayed(n);  // delayed[i] = base[i - shift], wrapped
  for (int i = 0; i < n; ++i) delayed[i] = base[(i - shift + n) % n];

  const CorrelationResult result = lagged_correlation(a, delayed, 20);
  int best = -20;
  for (int j = -20; j <= 20; ++j)
    if (result.c_plus(j) > result.c_plus(best)) best = j;
  CHECK(best == shift);
  CHECK(result.c_plus(shift) >= 0.99);
  CHECK(result.c_plus(shift) ==
        doctest::Approx(1.0 - static_cast<double>(shift) / n).epsilon(1e-3));
}

TEST_CASE("lag zero equals the plain correlation") {
  std::mt19937_64 eng(5);
  const Eigen::VectorXd a = gaussian_channel(eng, 300);
  const Eigen::VectorXd b = gaussian_channel(eng, 300);
  const CorrelationResult result = lagged_correlation(a, b, 16);
  CHECK(result.c_p == cosine_correlation(a, b));
  CHECK(result.c_plus(0) == result.c_p);
}

TEST_CASE("minus profile mirrors the plus profile bit for bit") {
  std::mt19937_64 eng(6);
  const int n = 512;
  const Eigen::VectorXd a = gaussian_channel(eng, n);
  const Eigen::VectorXd b = gaussian_channel(eng, n);
  const CorrelationResult result = lagged_correlation(a, b, 40);

  const double denom = a.norm() * b.norm();
  for (int j = -40; j <= 40; ++j) {
    // Direct C_minus sum: pairs a_i with b_{i-j}, same truncation rule.
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
      const int k = i - j;
      if (k >= 0 && k < n) sum += a[i] * b[k];
    }
    CHECK(result.c_minus(j) == sum / denom);
  }
}

TEST_CASE("white-noise profile stays below the sampling floor") {
  std::mt19937_64 eng(7);
  const int n = 10000;
  const Eigen::VectorXd a = gaussian_channel(eng, n);
  const Eigen::VectorXd b = gaussian_channel(eng, n);
  const CorrelationResult result = lagged_correlation(a, b, 50);
  for (int j = -50; j <= 50; ++j)
    CHECK(std::abs(result.c_plus(j)) < 5.0 / std::sqrt(n));
}

TEST_CASE("Cauchy-Schwarz bound on every lag") {
  std::mt19937_64 eng(8);
  for (int rep = 0; rep < 20; ++rep) {
    const int n = 64 + rep;
    const Eigen::VectorXd a = gaussian_channel(eng, n, 3.0);
    const Eigen::VectorXd b = gaussian_channel(eng, n, 0.1);
    const CorrelationResult result = lagged_correlation(a, b, n / 2);
    for (int j = -n / 2; j <= n / 2; ++j)
      CHECK(std::abs(result.c_plus(j)) <= 1.0 + 1e-12);
  }
}

TEST_CASE("normalized difference identities") {
  std::mt19937_64 eng(9);
  const int n = 5000;
  const Eigen::VectorXd a = gaussian_channel(eng, n);
  Eigen::VectorXd b = 0.6 * a + 0.8 * gaussian_channel(eng, n);

  const NormalizedDifferences diffs = normalized_differences(a, b);
  const double plus_sq = diffs.plus.squaredNorm();
  const double minus_sq = diffs.minus.squaredNorm();
  const double c_p = cosine_correlation(a, b);
  CHECK(plus_sq + minus_sq == doctest::Approx(4.0).epsilon(1e-9));
  CHECK(plus_sq - minus_sq == doctest::Approx(4.0 * c_p).epsilon(1e-9));
}

TEST_CASE("degenerate channel pairs") {
  std::mt19937_64 eng(10);
  const Eigen::VectorXd a = gaussian_channel(eng, 100);

  // Perfectly correlated: the difference channel vanishes.
  const NormalizedDifferences same = normalized_differences(a, 5.0 * a);
  CHECK(same.minus.cwiseAbs().maxCoeff() < 1e-14);
  // Perfectly anti-correlated: the sum channel vanishes.
  const NormalizedDifferences anti = normalized_differences(a, -5.0 * a);
  CHECK(anti.plus.cwiseAbs().maxCoeff() < 1e-14);

  CHECK_THROWS_AS(normalized_differences(Eigen::VectorXd::Zero(100), a),
                  std::domain_error);
}

TEST_CASE("independent channels split the norm evenly") {
  std::mt19937_64 eng(11);
  const int n = 10000;
  const NormalizedDifferences diffs = normalized_differences(
      gaussian_channel(eng, n), gaussian_channel(eng, n));
  CHECK(diffs.plus.squaredNorm() == doctest::Approx(2.0).epsilon(0.06));
  CHECK(diffs.minus.squaredNorm() == doctest::Approx(2.0).epsilon(0.06));
}

TEST_CASE("spectra agree with the autocorrelation route") {
  std::mt19937_64 eng(12);
  const int n = 128;
  const double interval = 0.25;
  const Eigen::VectorXd a = gaussian_channel(eng, n);
  const Eigen::VectorXd b = 0.5 * a + gaussian_channel(eng, n);

  for (const SpectralWindow window :
       {SpectralWindow::Rectangular, SpectralWindow::Hann}) {
    const SpectraResult spectra = noise_spectra(a, b, interval, window);
    const NormalizedDifferences diffs = normalized_differences(a, b);
    const Eigen::VectorXd oracle_s =
        acf_route_spectrum(diffs.minus, interval, window);
    const Eigen::VectorXd oracle_a =
        acf_route_spectrum(diffs.plus, interval, window);

    REQUIRE(spectra.chi_s.size() == n);
    const double scale_s = oracle_s.cwiseAbs().maxCoeff();
    const double scale_a = oracle_a.cwiseAbs().maxCoeff();
    for (int m = 0; m < n; ++m) {
      CHECK(std::abs(spectra.chi_s[m] - oracle_s[m]) <= 1e-9 * scale_s);
      CHECK(std::abs(spectra.chi_a[m] - oracle_a[m]) <= 1e-9 * scale_a);
    }
  }
}

TEST_CASE("spectra are non-negative on the declared grid") {
  std::mt19937_64 eng(13);
  const int n = 1000;
  const double interval = 2.0;
  const SpectraResult spectra = noise_spectra(gaussian_channel(eng, n),
                                              gaussian_channel(eng, n),
                                              interval);
  CHECK(spectra.chi_s.minCoeff() >= -1e-9);
  CHECK(spectra.chi_a.minCoeff() >= -1e-9);
  CHECK(spectra.frequencies_rad_s.size() == n);
  CHECK(spectra.frequencies_rad_s[0] == 0.0);
  CHECK(spectra.grid_spacing_rad_s ==
        doctest::Approx(2.0 * kPi / (n * interval)).epsilon(1e-12));
  CHECK(spectra.frequencies_rad_s[1] ==
        doctest::Approx(spectra.grid_spacing_rad_s).epsilon(1e-12));
}

TEST_CASE("Parseval: integrated spectrum recovers the zero-lag autocorrelation") {
  std::mt19937_64 eng(14);
  const int n = 600;
  const double interval = 0.7;
  const Eigen::VectorXd a = gaussian_channel(eng, n);
  const Eigen::VectorXd b = 0.3 * a + gaussian_channel(eng, n);
  const SpectraResult spectra = noise_spectra(a, b, interval);
  const NormalizedDifferences diffs = normalized_differences(a, b);

  const double acf0_minus = diffs.minus.squaredNorm() / n;
  const double acf0_plus = diffs.plus.squaredNorm() / n;
  CHECK(spectra.integrated_chi_s() / (2.0 * kPi) ==
        doctest::Approx(acf0_minus).epsilon(1e-6));
  CHECK(spectra.integrated_chi_a() / (2.0 * kPi) ==
        doctest::Approx(acf0_plus).epsilon(1e-6));
}

TEST_CASE("perfectly correlated channels squeeze the difference spectrum to zero") {
  std::mt19937_64 eng(15);
  const Eigen::VectorXd b = gaussian_channel(eng, 256);
  const SpectraResult spectra = noise_spectra(7.0 * b, b, 1.0);
  CHECK(spectra.chi_s.maxCoeff() <= 1e-20);
  CHECK(spectra.chi_a.maxCoeff() > 0.0);
  CHECK(spectra.integrated_chi_s() < spectra.integrated_chi_a());
}

TEST_CASE("uncorrelated channels give equal integrated spectra") {
  std::mt19937_64 eng(16);
  const int n = 10000;
  const SpectraResult spectra = noise_spectra(gaussian_channel(eng, n),
                                              gaussian_channel(eng, n), 1.0);
  const double ratio =
      spectra.integrated_chi_s() / spectra.integrated_chi_a();
  CHECK(ratio >= 0.8);
  CHECK(ratio <= 1.25);
}

TEST_CASE("correlated noisy channels give chi_s below chi_a") {
  std::mt19937_64 eng(17);
  const int n = 4096;
  const Eigen::VectorXd signal = gaussian_channel(eng, n);
  const Eigen::VectorXd a = signal + 0.3 * gaussian_channel(eng, n);
  const Eigen::VectorXd b = signal + 0.3 * gaussian_channel(eng, n);
  const SpectraResult spectra = noise_spectra(a, b, 1.0);
  CHECK(spectra.integrated_chi_s() < spectra.integrated_chi_a());
}

TEST_CASE("spectra preconditions") {
  std::mt19937_64 eng(18);
  const Eigen::VectorXd small = gaussian_channel(eng, 15);
  CHECK_THROWS_AS(noise_spectra(small, small, 1.0), std::invalid_argument);
  const Eigen::VectorXd ok = gaussian_channel(eng, 16);
  CHECK_THROWS_AS(noise_spectra(ok, ok, 0.0), std::invalid_argument);
  CHECK_NOTHROW(noise_spectra(ok, gaussian_channel(eng, 16), 1.0));
}

TEST_CASE("all statistics are invariant under positive channel scaling") {
  std::mt19937_64 eng(19);
  const int n = 512;
  const Eigen::VectorXd a = gaussian_channel(eng, n);
  const Eigen::VectorXd b = 0.4 * a + gaussian_channel(eng, n);

  for (const double scale : {1e-6, 3.0, 2.5e7}) {
    const Eigen::VectorXd a_scaled = scale * a;

    CHECK(cosine_correlation(a_scaled, b) ==
          doctest::Approx(cosine_correlation(a, b)).epsilon(1e-12));

    const CorrelationResult lags = lagged_correlation(a, b, 30);
    const CorrelationResult lags_scaled = lagged_correlation(a_scaled, b, 30);
    for (int j = -30; j <= 30; ++j)
      CHECK(lags_scaled.c_plus(j) ==
            doctest::Approx(lags.c_plus(j)).epsilon(1e-12));

    const NormalizedDifferences diffs = normalized_differences(a, b);
    const NormalizedDifferences diffs_scaled =
        normalized_differences(a_scaled, b);
    CHECK((diffs_scaled.plus - diffs.plus).cwiseAbs().maxCoeff() <= 1e-12);
    CHECK((diffs_scaled.minus - diffs.minus).cwiseAbs().maxCoeff() <= 1e-12);

    const SpectraResult spectra = noise_spectra(a, b, 1.0);
    const SpectraResult spectra_scaled = noise_spectra(a_scaled, b, 1.0);
    const double scale_ref = spectra.chi_a.maxCoeff();
    CHECK((spectra_scaled.chi_s - spectra.chi_s).cwiseAbs().maxCoeff() <=
          1e-12 * scale_ref);
    CHECK((spectra_scaled.chi_a - spectra.chi_a).cwiseAbs().maxCoeff() <=
          1e-12 * scale_ref);
  }
}

TEST_CASE("series adapters expose the trial channels") {
  TrialSeries series;
  series.config.trial_interval_s = 2.0;
  for (int i = 0; i < 32; ++i) {
    TrialRecord r;
    r.index = i;
    r.delta_n_gamma = static_cast<double>(i % 7) - 3.0;
    r.delta_omega_p_rad_s = 2.0 * r.delta_n_gamma;
    series.records.push_back(r);
  }
  CHECK(omega_channel(series)[3] == series.records[3].delta_omega_p_rad_s);
  CHECK(count_channel(series)[5] == series.records[5].delta_n_gamma);
  CHECK(correlation_cp(series) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(correlation_lagged(series, 4).c_p ==
        doctest::Approx(1.0).epsilon(1e-12));
  const SpectraResult spectra = noise_spectra(series, 2.0);
  CHECK(spectra.chi_s.maxCoeff() <= 1e-20);
}
