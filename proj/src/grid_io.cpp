#include "nfrft/grid_io.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>

namespace nfrft {

namespace {

constexpr std::array<char, 8> kMagic = {'N', 'F', 'R', 'T', 'G', 'R', 'I', 'D'};
constexpr std::uint32_t kVersion = 1;

template <typename U>
void put_le(std::ostream& out, U v) {
  std::array<char, sizeof(U)> bytes;
  std::memcpy(bytes.data(), &v, sizeof(U));
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  out.write(bytes.data(), bytes.size());
}

template <typename U>
U get_le(std::istream& in) {
  std::array<char, sizeof(U)> bytes;
  if (!in.read(bytes.data(), bytes.size())) throw IoError("truncated binary grid");
  if constexpr (std::endian::native == std::endian::big) std::reverse(bytes.begin(), bytes.end());
  U v;
  std::memcpy(&v, bytes.data(), sizeof(U));
  return v;
}

}  // namespace

nlohmann::ordered_json grid_to_json(const GridFunction& f) {
  nlohmann::ordered_json j;
  auto axes = nlohmann::ordered_json::array();
  for (const Axis& a : f.axes()) {
    axes.push_back({{"start", a.start()}, {"step", a.step()}, {"count", a.count()}});
  }
  j["axes"] = std::move(axes);
  j["order"] = "row-major";
  std::vector<double> re(f.size());
  std::vector<double> im(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) {
    re[i] = f[i].real();
    im[i] = f[i].imag();
  }
  j["values_re"] = std::move(re);
  j["values_im"] = std::move(im);
  return j;
}

GridFunction grid_from_json(const nlohmann::json& j) {
  try {
    if (j.contains("order") && j.at("order").get<std::string>() != "row-major") {
      throw ArgumentError("only row-major grid files are supported");
    }
    Axes axes;
    for (const auto& a : j.at("axes")) {
      axes.emplace_back(a.at("start").get<double>(), a.at("step").get<double>(), a.at("count").get<std::size_t>());
    }
    const auto re = j.at("values_re").get<std::vector<double>>();
    std::vector<double> im(re.size(), 0.0);
    if (j.contains("values_im")) im = j.at("values_im").get<std::vector<double>>();
    if (im.size() != re.size()) throw ArgumentError("values_re and values_im differ in length");
    std::vector<Complex> values(re.size());
    for (std::size_t i = 0; i < re.size(); ++i) values[i] = {re[i], im[i]};
    return GridFunction(std::move(axes), std::move(values));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed grid JSON: ") + e.what());
  }
}

void write_grid_binary(const GridFunction& f, std::ostream& out) {
  out.write(kMagic.data(), kMagic.size());
  put_le<std::uint32_t>(out, kVersion);
  put_le<std::uint32_t>(out, static_cast<std::uint32_t>(f.dims()));
  for (const Axis& a : f.axes()) {
    put_le<double>(out, a.start());
    put_le<double>(out, a.step());
    put_le<std::uint64_t>(out, a.count());
  }
  for (const Complex& v : f.values()) {
    put_le<double>(out, v.real());
    put_le<double>(out, v.imag());
  }
  if (!out) throw IoError("failed writing binary grid");
}

GridFunction read_grid_binary(std::istream& in) {
  std::array<char, 8> magic{};
  if (!in.read(magic.data(), magic.size()) || magic != kMagic) throw IoError("not a binary grid file");
  if (const auto version = get_le<std::uint32_t>(in); version != kVersion) {
    throw IoError("unsupported binary grid version " + std::to_string(version));
  }
  const auto dims = get_le<std::uint32_t>(in);
  if (dims == 0 || dims > kMaxDims) throw IoError("binary grid has unsupported dimension");
  Axes axes;
  for (std::uint32_t k = 0; k < dims; ++k) {
    const double start = get_le<double>(in);
    const double step = get_le<double>(in);
    const auto count = get_le<std::uint64_t>(in);
    axes.emplace_back(start, step, static_cast<std::size_t>(count));
  }
  if (sample_count(axes) > (std::size_t{1} << 28)) throw IoError("binary grid header describes too many samples");
  std::vector<Complex> values(sample_count(axes));
  for (Complex& v : values) {
    const double re = get_le<double>(in);
    const double im = get_le<double>(in);
    v = {re, im};
  }
  if (in.peek() != std::char_traits<char>::eof()) throw IoError("binary grid has trailing bytes");
  return GridFunction(std::move(axes), std::move(values));
}

void save_grid(const GridFunction& f, const std::filesystem::path& path) {
  if (path.extension() == ".json") {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path.string() + " for writing");
    out << grid_to_json(f).dump() << '\n';
    if (!out) throw IoError("failed writing " + path.string());
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_grid_binary(f, out);
}

GridFunction load_grid(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<char, 8> head{};
  in.read(head.data(), head.size());
  const bool binary = in.gcount() == static_cast<std::streamsize>(head.size()) && head == kMagic;
  in.clear();
  in.seekg(0);
  if (binary) return read_grid_binary(in);
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw IoError("cannot parse " + path.string() + ": " + e.what());
  }
  return grid_from_json(j);
}

}  // namespace nfrft
