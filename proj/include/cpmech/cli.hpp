// Command-line surface: simulate / analyze / report.

#pragma once

#include <iosfwd>
#include <string>

#include "cpmech/analysis.hpp"

namespace cpmech {

// Exit codes: 0 success, 1 runtime error, 2 usage error.
int cli_main(int argc, const char* const* argv);

int run_simulate(const std::string& config_path, const std::string& out_path,
                 std::ostream& out);

int run_analyze(const std::string& series_path, int max_lag,
                SpectralWindow window, const std::string& out_path,
                std::ostream& out);

int run_report(const std::string& config_path, std::ostream& out);

}  // namespace cpmech
