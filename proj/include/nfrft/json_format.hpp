#pragma once

#include <span>
#include <string>

#include <json.hpp>

namespace nfrft {

using Json = nlohmann::ordered_json;

/// Significant digits used for every floating-point value in reports.
inline constexpr int kReportDigits = 15;

/// The value rounded to kReportDigits significant digits; null when not finite.
Json json_number(double v);
Json json_numbers(std::span<const double> v);

/// "%.15g" rendering, used for CSV cells.
std::string format_number(double v);

}  // namespace nfrft
