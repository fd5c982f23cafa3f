#include "nfrft/json_format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace nfrft {

std::string format_number(double v) {
  if (!std::isfinite(v)) return std::isnan(v) ? "nan" : (v > 0 ? "inf" : "-inf");
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*g", kReportDigits, v);
  return buf;
}

Json json_number(double v) {
  if (!std::isfinite(v)) return nullptr;
  // Round-tripping through the 15-digit text makes the serializer's
  // shortest representation at most 15 digits long.
  const double rounded = std::strtod(format_number(v).c_str(), nullptr);
  return rounded == 0.0 ? 0.0 : rounded;
}

Json json_numbers(std::span<const double> v) {
  Json arr = Json::array();
  for (double x : v) arr.push_back(json_number(x));
  return arr;
}

}  // namespace nfrft
