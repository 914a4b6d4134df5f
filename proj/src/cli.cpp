#include "cpmech/cli.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cpmech/config_io.hpp"
#include "cpmech/series_io.hpp"

namespace cpmech {

int run_simulate(const std::string& config_path, const std::string& out_path,
                 std::ostream& out) {
  const ExperimentConfig config = load_config(config_path);
  const TrialSeries series = run_experiment(config);
  save_series(series, out_path);
  out << "wrote " << series.records.size() << " trials to " << out_path
      << "\n";
  return 0;
}

int run_analyze(const std::string& series_path, int max_lag,
                SpectralWindow window, const std::string& out_path,
                std::ostream& out) {
  const TrialSeries series = load_series(series_path);
  const Eigen::VectorXd omega = omega_channel(series);
  const Eigen::VectorXd counts = count_channel(series);

  const double c_p = cosine_correlation(omega, counts);
  const double c_p_centered = centered_correlation(omega, counts);
  const CorrelationResult lags = lagged_correlation(omega, counts, max_lag);
  const NormalizedDifferences diffs = normalized_differences(omega, counts);
  const SpectraResult spectra =
      noise_spectra(omega, counts, series.config.trial_interval_s, window);

  std::ofstream file(out_path);
  if (!file) throw SeriesError("cannot open '" + out_path + "' for writing");

  char line[160];
  const auto emit = [&](const char* key, double value) {
    std::snprintf(line, sizeof line, "%s = %.17g\n", key, value);
    file << line;
  };
  file << "# analysis\n";
  file << "n_records = " << series.records.size() << "\n";
  emit("trial_interval_s", series.config.trial_interval_s);
  file << "max_lag = " << max_lag << "\n";
  file << "window = "
       << (window == SpectralWindow::Hann ? "hann" : "rect") << "\n";
  emit("c_p", c_p);
  emit("c_p_centered", c_p_centered);
  emit("sum_delta_plus_sq", diffs.plus.squaredNorm());
  emit("sum_delta_minus_sq", diffs.minus.squaredNorm());
  emit("integrated_chi_s", spectra.integrated_chi_s());
  emit("integrated_chi_a", spectra.integrated_chi_a());

  file << "\n# lag profile\n# columns: lag c_plus\n";
  for (int j = -max_lag; j <= max_lag; ++j) {
    std::snprintf(line, sizeof line, "%d %.17g\n", j, lags.c_plus(j));
    file << line;
  }

  file << "\n# spectra\n# columns: omega_rad_s chi_s chi_a\n";
  for (Eigen::Index m = 0; m < spectra.frequencies_rad_s.size(); ++m) {
    std::snprintf(line, sizeof line, "%.17g %.17g %.17g\n",
                  spectra.frequencies_rad_s[m], spectra.chi_s[m],
                  spectra.chi_a[m]);
    file << line;
  }
  if (!file) throw SeriesError("write to '" + out_path + "' failed");

  std::snprintf(line, sizeof line, "c_p = %.6g, wrote %s\n", c_p,
                out_path.c_str());
  out << line;
  return 0;
}

int run_report(const std::string& config_path, std::ostream& out) {
  const ExperimentConfig config = load_config(config_path);
  out << format_report(parameter_report(config));
  return 0;
}

int cli_main(int argc, const char* const* argv) {
  CLI::App app{"stochastic simulator for a two-station entangled-photon "
               "experiment with mechanical circular-polarization detection"};
  app.require_subcommand(1);

  std::string config_path;
  std::string series_path;
  std::string out_path;
  int max_lag = 20;
  std::string window_name = "rect";

  CLI::App* simulate =
      app.add_subcommand("simulate", "run the experiment, write a trial series");
  simulate->add_option("--config", config_path, "experiment config file")
      ->required();
  simulate->add_option("--out", out_path, "output series file")->required();

  CLI::App* analyze = app.add_subcommand(
      "analyze", "correlations and noise spectra of a trial series");
  analyze->add_option("--series", series_path, "trial series file")->required();
  analyze->add_option("--max-lag", max_lag, "half-width of the lag profile");
  analyze->add_option("--out", out_path, "output table file")->required();
  analyze->add_option("--window", window_name, "spectral window (rect|hann)")
      ->check(CLI::IsMember({"rect", "hann"}));

  CLI::App* report =
      app.add_subcommand("report", "closed-form parameter report for a config");
  report->add_option("--config", config_path, "experiment config file")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (simulate->parsed()) return run_simulate(config_path, out_path, std::cout);
    if (analyze->parsed()) {
      const SpectralWindow window = window_name == "hann"
                                        ? SpectralWindow::Hann
                                        : SpectralWindow::Rectangular;
      return run_analyze(series_path, max_lag, window, out_path, std::cout);
    }
    if (report->parsed()) return run_report(config_path, std::cout);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace cpmech
