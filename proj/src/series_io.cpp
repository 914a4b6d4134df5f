#include "cpmech/series_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "cpmech/config_io.hpp"

namespace cpmech {

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r");
  if (begin == std::string::npos) return "";
  const auto end = s.find_last_not_of(" \t\r");
  return s.substr(begin, end - begin + 1);
}

}  // namespace

void save_series(const TrialSeries& series, const std::string& path) {
  if (series.records.size() != static_cast<std::size_t>(series.config.n_trials))
    throw SeriesError("record count does not match config trial count");

  std::ofstream out(path);
  if (!out) throw SeriesError("cannot open '" + path + "' for writing");

  out << "# trial series\n";
  out << "format_version = " << kSeriesFormatVersion << "\n";
  out << print_config(series.config);
  out << "columns = " << kSeriesColumns << "\n";

  char row[256];
  for (const TrialRecord& r : series.records) {
    std::snprintf(row, sizeof row, "%lld %.17g %.17g %.17g %d\n",
                  static_cast<long long>(r.index), r.delta_n_gamma,
                  r.delta_omega_p_rad_s, r.coast_angle_rad,
                  r.nonlocality_violated ? 1 : 0);
    out << row;
  }
  if (!out) throw SeriesError("write to '" + path + "' failed");
}

TrialSeries load_series(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SeriesError("cannot open '" + path + "'");

  // Header: key = value lines up to and including the column declaration.
  std::string config_text;
  bool have_version = false;
  bool have_columns = false;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto eq = stripped.find('=');
    if (eq == std::string::npos)
      throw SeriesError("line " + std::to_string(line_no) +
                        ": expected header 'key = value'");
    const std::string key = trim(stripped.substr(0, eq));
    const std::string value = trim(stripped.substr(eq + 1));
    if (key == "format_version") {
      if (value != std::to_string(kSeriesFormatVersion))
        throw SeriesError("format version mismatch: file has " + value +
                          ", reader expects " +
                          std::to_string(kSeriesFormatVersion));
      have_version = true;
    } else if (key == "columns") {
      if (value != kSeriesColumns)
        throw SeriesError("column header mismatch: '" + value + "'");
      have_columns = true;
      break;
    } else {
      config_text += stripped + "\n";
    }
  }
  if (!have_version) throw SeriesError("missing format_version");
  if (!have_columns) throw SeriesError("missing column declaration");

  TrialSeries series;
  try {
    series.config = parse_config(config_text);
  } catch (const ConfigError& e) {
    throw SeriesError(std::string("bad header: ") + e.what());
  }

  series.records.reserve(static_cast<std::size_t>(series.config.n_trials));
  std::int64_t expected_index = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string stripped = trim(line);
    if (stripped.empty()) continue;
    TrialRecord r;
    long long index = 0;
    int flag = 0;
    char extra = 0;
    const int fields =
        std::sscanf(stripped.c_str(), "%lld %lg %lg %lg %d %c", &index,
                    &r.delta_n_gamma, &r.delta_omega_p_rad_s,
                    &r.coast_angle_rad, &flag, &extra);
    if (fields != 5)
      throw SeriesError("malformed row at line " + std::to_string(line_no));
    if (index != expected_index)
      throw SeriesError("row integrity: expected index " +
                        std::to_string(expected_index) + " at line " +
                        std::to_string(line_no));
    if (flag != 0 && flag != 1)
      throw SeriesError("malformed violation flag at line " +
                        std::to_string(line_no));
    r.index = index;
    r.nonlocality_violated = flag == 1;
    series.records.push_back(r);
    ++expected_index;
  }

  if (series.records.size() !=
      static_cast<std::size_t>(series.config.n_trials))
    throw SeriesError(
        "row count mismatch: header declares " +
        std::to_string(series.config.n_trials) + " trials, file has " +
        std::to_string(series.records.size()));
  return series;
}

}  // namespace cpmech
