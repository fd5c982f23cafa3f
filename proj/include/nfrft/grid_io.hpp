#pragma once

// Grid file formats.
//
// JSON:
//   {"axes": [{"start": s, "step": h, "count": n}, ...],
//    "order": "row-major",
//    "values_re": [...], "values_im": [...]}
// values are flattened with the last axis varying fastest; values_im may be
// omitted for real data.
//
// Binary (all fields little-endian):
//   8 bytes  magic "NFRTGRID"
//   u32      format version (1)
//   u32      N, number of axes
//   N x {f64 start, f64 step, u64 count}
//   prod(count) x {f64 re, f64 im}, row-major

#include <filesystem>
#include <iosfwd>

#include <json.hpp>

#include "nfrft/grid.hpp"

namespace nfrft {

nlohmann::ordered_json grid_to_json(const GridFunction& f);
GridFunction grid_from_json(const nlohmann::json& j);

void write_grid_binary(const GridFunction& f, std::ostream& out);
GridFunction read_grid_binary(std::istream& in);

/// Writes JSON when the extension is ".json", binary otherwise.
void save_grid(const GridFunction& f, const std::filesystem::path& path);
/// Detects the binary magic; anything else is parsed as JSON.
GridFunction load_grid(const std::filesystem::path& path);

}  // namespace nfrft
