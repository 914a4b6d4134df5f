#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cmath>
#include <map>
#include <vector>

#include "cpmech/constants.hpp"
#include "cpmech/source.hpp"

using namespace cpmech;

TEST_CASE("photon energy is h*c/lambda") {
  // Frozen from a hand evaluation with the CODATA exact constants.
  const SourceSpec source{1e9, 0.8e-6};
  const double e = photon_energy(source);
  CHECK(e == doctest::Approx(2.483057321436161e-19).epsilon(1e-12));

  // Exact inverse proportionality: halving and doubling are exact in
  // binary arithmetic.
  CHECK(photon_energy(SourceSpec{1e9, 1.6e-6}) == e / 2.0);
  CHECK(photon_energy(SourceSpec{1e9, 0.4e-6}) == e * 2.0);
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(SourceSpec{}.validate(), std::invalid_argument);
  CHECK_THROWS_AS((SourceSpec{-1.0, 0.8e-6}).validate(), std::invalid_argument);
  CHECK_THROWS_AS((SourceSpec{1e9, 0.0}).validate(), std::invalid_argument);

  RngStream rng(1, 0);
  CHECK_THROWS_AS(sample_window(SourceSpec{1e9, 0.8e-6}, 0.0, rng),
                  std::invalid_argument);
  CHECK_THROWS_AS(sample_window(SourceSpec{1e9, 0.8e-6}, -1.0, rng),
                  std::invalid_argument);
}

TEST_CASE("unphysically large windows are rejected") {
  RngStream rng(1, 0);
  CHECK_THROWS_AS(sample_window(SourceSpec{1e18, 0.8e-6}, 1e10, rng),
                  std::overflow_error);
}

TEST_CASE("counts are consistent") {
  const SourceSpec source{1e9, 0.8e-6};
  RngStream rng(7, 0);
  for (int i = 0; i < 200; ++i) {
    const WindowCounts counts = sample_window(source, 1e-6, rng);
    CHECK(counts.alice_left + counts.alice_right == counts.n_pairs);
    CHECK(std::abs(counts.delta_n()) <= counts.n_pairs);
  }
}

TEST_CASE("window to zero limit") {
  const SourceSpec source{1e9, 0.8e-6};
  RngStream rng(3, 0);
  const WindowCounts counts = sample_window(source, 1e-300, rng);
  CHECK(counts.n_pairs == 0);
  CHECK(counts.delta_n() == 0);
}

TEST_CASE("empirical mean matches rate * window") {
  const SourceSpec source{1e9, 0.8e-6};
  const double window = 1e-5;  // mean 1e4 pairs
  const double mean = source.pair_rate_hz * window;
  const int n_windows = 10000;
  double sum = 0.0;
  for (int i = 0; i < n_windows; ++i) {
    RngStream rng(2024, static_cast<std::uint64_t>(i));
    sum += static_cast<double>(sample_window(source, window, rng).n_pairs);
  }
  const double sample_mean = sum / n_windows;
  const double five_sigma = 5.0 * std::sqrt(mean / n_windows);
  CHECK(std::abs(sample_mean - mean) <= five_sigma);
}

TEST_CASE("imbalance fluctuations scale as sqrt(t*N)") {
  const SourceSpec source{1e9, 0.8e-6};
  const double window = 1e-5;  // mean 1e4 pairs
  const int n_windows = 10000;
  double sum = 0.0, sum_sq = 0.0;
  for (int i = 0; i < n_windows; ++i) {
    RngStream rng(99, static_cast<std::uint64_t>(i));
    const double d =
        static_cast<double>(sample_window(source, window, rng).delta_n());
    sum += d;
    sum_sq += d * d;
  }
  const double variance = sum_sq / n_windows - (sum / n_windows) * (sum / n_windows);
  const double ratio = std::sqrt(variance) /
                       std::sqrt(source.pair_rate_hz * window);
  CHECK(ratio >= 0.9);
  CHECK(ratio <= 1.1);
}

TEST_CASE("identical seed and config give bit-identical counts") {
  const SourceSpec source{1e9, 0.8e-6};
  std::vector<WindowCounts> first, second;
  for (int i = 0; i < 100; ++i) {
    RngStream a(555, static_cast<std::uint64_t>(i));
    RngStream b(555, static_cast<std::uint64_t>(i));
    first.push_back(sample_window(source, 3e-4, a));
    second.push_back(sample_window(source, 3e-4, b));
  }
  CHECK(first == second);
}

// Brute-force oracle: the exact distribution of delta_n for a Poisson(10)
// pair count split by a fair binomial, computed by direct summation.
// Compared against sampled frequencies with a chi-squared test at p > 0.01.
TEST_CASE("compound distribution matches direct enumeration") {
  const double lambda = 10.0;
  const int n_max = 80;  // Poisson(10) tail beyond 80 is < 1e-40

  std::map<int, double> delta_pmf;
  double poisson = std::exp(-lambda);  // P(n = 0)
  for (int n = 0; n <= n_max; ++n) {
    if (n > 0) poisson *= lambda / n;
    double binom = std::ldexp(1.0, -n);  // P(L = 0 | n) = 2^-n
    for (int l = 0; l <= n; ++l) {
      if (l > 0) binom *= static_cast<double>(n - l + 1) / l;
      delta_pmf[2 * l - n] += poisson * binom;
    }
  }
  double total = 0.0;
  for (const auto& [d, p] : delta_pmf) total += p;
  REQUIRE(total == doctest::Approx(1.0).epsilon(1e-12));

  // Seven bins, symmetric around zero.
  const auto bin_of = [](std::int64_t d) {
    if (d <= -6) return 0;
    if (d <= -3) return 1;
    if (d <= -1) return 2;
    if (d == 0) return 3;
    if (d <= 2) return 4;
    if (d <= 5) return 5;
    return 6;
  };
  std::array<double, 7> expected{};
  for (const auto& [d, p] : delta_pmf) expected[bin_of(d)] += p;

  const SourceSpec source{10.0, 0.8e-6};
  const int n_samples = 100000;
  std::array<double, 7> observed{};
  for (int i = 0; i < n_samples; ++i) {
    RngStream rng(314159, static_cast<std::uint64_t>(i));
    observed[bin_of(sample_window(source, 1.0, rng).delta_n())] += 1.0;
  }

  double chi_sq = 0.0;
  for (int b = 0; b < 7; ++b) {
    const double e = expected[b] * n_samples;
    REQUIRE(e > 100.0);  // bins chosen to keep expectations large
    chi_sq += (observed[b] - e) * (observed[b] - e) / e;
  }
  CHECK(chi_sq < 16.812);  // chi-squared critical value, 6 dof, p = 0.01
}
