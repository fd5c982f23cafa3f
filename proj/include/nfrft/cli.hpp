#pragma once

// Command-line front end. `run` takes argv-style arguments (program name
// first) and returns the process exit code:
//   0  success
//   1  usage, input or I/O error
//   2  a bound was flagged as violated

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "nfrft/json_format.hpp"

namespace nfrft::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitViolation = 2;

struct GridSpec {
  double half_width = 8.0;
  int points = 256;
};

/// Radians from "0.5", "pi", "-pi/2", "2pi/3", "2*pi/3", "3π/4".
double parse_angle(const std::string& text);
/// "a1,b1;a2,b2" -> [(a1, b1), (a2, b2)].
std::vector<std::pair<double, double>> parse_angle_pairs(const std::string& text);

/// Splices the flags from every `--config FILE` (a JSON object whose keys are
/// flag names) in front of the remaining flags, so explicit flags win.
std::vector<std::string> expand_config(const std::vector<std::string>& args);

/// Side-by-side analytic / quadrature report for a named case.
Json reproduce_report(const std::string& case_id, const GridSpec& grid);

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace nfrft::cli
