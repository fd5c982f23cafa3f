#include "nfrft/cli.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <regex>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "nfrft/analytic_chirp.hpp"
#include "nfrft/bounds.hpp"
#include "nfrft/grid_io.hpp"
#include "nfrft/moments.hpp"
#include "nfrft/optics.hpp"
#include "nfrft/transforms.hpp"

namespace nfrft::cli {

namespace {

struct TargetValue {
  const char* name;
  double value;
};

// Printed 15-digit values for the two named cases, in report order.
const std::vector<TargetValue>& target_values(const std::string& case_id) {
  static const std::vector<TargetValue> a = {
      {"xw", 0.309746582899407},
      {"ft_sharper", 0.275330295910584},
      {"ft_classical", 0.025330295910584},
      {"xu", 0.372934937174556},
      {"frft_single_sharper", 0.347122721932938},
      {"frft_single_classical", 0.018997721932938},
      {"uu", 0.331041346184749},
      {"two_frft_main", 0.296625059195926},
      {"two_frft_prior", 0.046625059195926},
  };
  static const std::vector<TargetValue> b = {
      {"xw", 0.275330295910584},
      {"ft_sharper", 0.275330295910584},
      {"ft_classical", 0.025330295910584},
      {"xu", 0.456497721932938},
      {"frft_single_sharper", 0.456497721932938},
      {"frft_single_classical", 0.018997721932938},
      {"uu", 0.373795204665280},
      {"two_frft_main", 0.373795204665280},
      {"two_frft_prior", 0.123795204665280},
  };
  return case_id == "paper-2d-a" ? a : b;
}

std::string read_text(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

nlohmann::json parse_json_text(const std::string& text, const std::string& what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ArgumentError("cannot parse " + what + " as JSON: " + e.what());
  }
}

/// Inline JSON when the text starts with '{', otherwise a file path.
nlohmann::json load_chirp_spec(const std::string& spec) {
  const auto first = spec.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && spec[first] == '{') return parse_json_text(spec, "chirp spec");
  return parse_json_text(read_text(spec), "chirp spec '" + spec + "'");
}

bool is_extremal_spec(const nlohmann::json& j) { return j.is_object() && j.contains("a"); }

struct LoadedInput {
  GridFunction f;
  std::string label;
  std::optional<MomentReport> analytic;
};

Axes grid_axes(const GridSpec& g, std::size_t dims) {
  if (!(g.half_width > 0.0) || !std::isfinite(g.half_width)) throw ArgumentError("--half-width must be > 0");
  if (g.points < 16) throw ArgumentError("--points must be >= 16");
  return Axes(dims, Axis::centered(g.half_width, static_cast<std::size_t>(g.points)));
}

LoadedInput load_input(const std::string& in_path, const std::string& chirp, const GridSpec& grid) {
  if (!in_path.empty() && !chirp.empty()) throw ArgumentError("give either --in or --chirp, not both");
  if (!in_path.empty()) {
    if (!std::filesystem::exists(in_path)) throw IoError("cannot read '" + in_path + "': no such file");
    return {load_grid(in_path), in_path, std::nullopt};
  }
  if (chirp.empty()) throw ArgumentError("an input is required: --in GRID_FILE or --chirp SPEC");
  const nlohmann::json spec = load_chirp_spec(chirp);
  if (is_extremal_spec(spec)) {
    const ExtremalChirpND p = extremal_from_json(spec);
    return {p.sample(grid_axes(grid, p.dims())), "extremal-chirp", extremal_moments(p)};
  }
  const GaussianChirp2D p = chirp2d_from_json(spec);
  return {p.sample(grid_axes(grid, 2)), "chirp2d", chirp2d_moments(p)};
}

class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : fallback_(fallback) {
    if (!path.empty()) {
      file_.open(path, std::ios::binary);
      if (!file_) throw IoError("cannot write '" + path + "'");
      to_file_ = true;
    }
  }
  std::ostream& stream() { return to_file_ ? file_ : fallback_; }
  void json(const Json& j) { stream() << j.dump(2) << '\n'; }

 private:
  std::ofstream file_;
  std::ostream& fallback_;
  bool to_file_ = false;
};

std::string flag_token(std::string key) {
  std::replace(key.begin(), key.end(), '_', '-');
  return "--" + key;
}

std::string scalar_token(const nlohmann::json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v.get<double>());
    return buf;
  }
  return v.dump();
}

std::vector<std::string> config_tokens(const std::string& path) {
  const nlohmann::json j = parse_json_text(read_text(path), "config '" + path + "'");
  if (!j.is_object()) throw ArgumentError("config '" + path + "' must be a JSON object");
  std::vector<std::string> tokens;
  for (const auto& [key, value] : j.items()) {
    if (key == "command" || key == "config") continue;
    if (value.is_boolean()) {
      if (value.get<bool>()) tokens.push_back(flag_token(key));
    } else if (key == "angles" && value.is_array()) {
      std::string text;
      for (const auto& pair : value) {
        if (!pair.is_array() || pair.size() != 2) throw ArgumentError("config angles must be [alpha, beta] pairs");
        if (!text.empty()) text += ';';
        text += scalar_token(pair[0]) + ',' + scalar_token(pair[1]);
      }
      tokens.push_back(flag_token(key));
      tokens.push_back(text);
    } else if (value.is_object() || value.is_array()) {
      tokens.push_back(flag_token(key));
      tokens.push_back(value.dump());
    } else if (!value.is_null()) {
      tokens.push_back(flag_token(key));
      tokens.push_back(scalar_token(value));
    }
  }
  return tokens;
}

std::string config_command(const std::string& path) {
  const nlohmann::json j = parse_json_text(read_text(path), "config '" + path + "'");
  return j.is_object() && j.contains("command") ? j.at("command").get<std::string>() : std::string();
}

void moments_csv(std::ostream& out, const MomentReport& r) {
  out << "field,value\n";
  out << "norm_sq," << format_number(r.norm_sq) << '\n';
  for (std::size_t k = 0; k < r.x0.size(); ++k) out << "x0[" << k << "]," << format_number(r.x0[k]) << '\n';
  for (std::size_t k = 0; k < r.w0.size(); ++k) out << "w0[" << k << "]," << format_number(r.w0[k]) << '\n';
  if (r.alpha) {
    out << "alpha," << format_number(*r.alpha) << '\n';
    for (std::size_t k = 0; k < r.u0_alpha.size(); ++k) {
      out << "u0_alpha[" << k << "]," << format_number(r.u0_alpha[k]) << '\n';
    }
  }
  out << "spread_x," << format_number(r.spread_x) << '\n';
  out << "spread_w," << format_number(r.spread_w) << '\n';
  if (r.spread_u_alpha) out << "spread_u," << format_number(*r.spread_u_alpha) << '\n';
  out << "cov," << format_number(r.cov) << '\n';
  out << "abs_cov," << format_number(r.abs_cov) << '\n';
}

double relative(double diff, double ref) { return std::abs(ref) > 0.0 ? std::abs(diff) / std::abs(ref) : std::abs(diff); }

struct QuantitySet {
  std::map<std::string, double> values;
};

QuantitySet quantities(const MomentReport& r, const Angle& alpha, const Angle& beta, double ua, double ub) {
  const BoundReport b = evaluate_bounds(r, alpha, beta, ua, ub);
  QuantitySet q;
  q.values["xw"] = r.spread_x * r.spread_w;
  q.values["xu"] = r.spread_x * ua;
  q.values["uu"] = ua * ub;
  for (const BoundEntry& e : b.bounds) q.values[e.name] = e.value;
  return q;
}

}  // namespace

double parse_angle(const std::string& text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  for (std::size_t pos; (pos = s.find("\xCF\x80")) != std::string::npos;) s.replace(pos, 2, "pi");
  static const std::regex pattern(
      R"(^([+-]?)((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?)?(\*?pi)?(?:/((?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?))?$)");
  std::smatch m;
  if (s.empty() || !std::regex_match(s, m, pattern) || (!m[2].matched && !m[3].matched)) {
    throw ArgumentError("cannot parse angle '" + text + "' (examples: 0.5, pi/6, 2pi/3, -pi)");
  }
  if (m[3].matched && m[3].str()[0] == '*' && !m[2].matched) throw ArgumentError("cannot parse angle '" + text + "'");
  double v = m[2].matched ? std::stod(m[2].str()) : 1.0;
  if (m[3].matched) v *= kPi;
  if (m[4].matched) {
    const double den = std::stod(m[4].str());
    if (den == 0.0) throw ArgumentError("angle '" + text + "' divides by zero");
    v /= den;
  }
  if (m[1].str() == "-") v = -v;
  if (!std::isfinite(v)) throw ArgumentError("angle '" + text + "' is not finite");
  return v;
}

std::vector<std::pair<double, double>> parse_angle_pairs(const std::string& text) {
  std::vector<std::pair<double, double>> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ';')) {
    if (item.find_first_not_of(" \t") == std::string::npos) continue;
    const auto comma = item.find(',');
    if (comma == std::string::npos || item.find(',', comma + 1) != std::string::npos) {
      throw ArgumentError("angle pair '" + item + "' must be 'alpha,beta'");
    }
    out.emplace_back(parse_angle(item.substr(0, comma)), parse_angle(item.substr(comma + 1)));
  }
  if (out.empty()) throw ArgumentError("no angle pairs given");
  return out;
}

std::vector<std::string> expand_config(const std::vector<std::string>& args) {
  std::vector<std::string> rest;
  std::vector<std::string> injected;
  std::string command_from_config;
  for (std::size_t i = 0; i < args.size(); ++i) {
    const std::string& a = args[i];
    std::string path;
    if (a == "--config") {
      if (i + 1 >= args.size()) throw ArgumentError("--config needs a file path");
      path = args[++i];
    } else if (a.rfind("--config=", 0) == 0) {
      path = a.substr(9);
    } else {
      rest.push_back(a);
      continue;
    }
    auto tokens = config_tokens(path);
    injected.insert(injected.end(), tokens.begin(), tokens.end());
    if (command_from_config.empty()) command_from_config = config_command(path);
  }
  if (injected.empty() && command_from_config.empty()) return rest;

  static const std::set<std::string> commands = {"frft", "moments", "bounds", "reproduce", "optics"};
  std::vector<std::string> out;
  if (!rest.empty()) out.push_back(rest.front());
  std::size_t i = 1;
  if (i < rest.size() && commands.count(rest[i])) {
    out.push_back(rest[i++]);
  } else if (!command_from_config.empty()) {
    out.push_back(command_from_config);
  }
  out.insert(out.end(), injected.begin(), injected.end());
  out.insert(out.end(), rest.begin() + static_cast<std::ptrdiff_t>(std::min(i, rest.size())), rest.end());
  return out;
}

Json reproduce_report(const std::string& case_id, const GridSpec& grid) {
  const NamedCase c = named_case(case_id);
  const Angle alpha(c.alpha);
  const Angle beta(c.beta);

  const MomentReport analytic = chirp2d_moments(c.chirp);
  const QuantitySet an = quantities(analytic, alpha, beta, chirp2d_frft_spread(c.chirp, alpha),
                                    chirp2d_frft_spread(c.chirp, beta));

  const GridFunction f = c.chirp.sample(grid_axes(grid, 2));
  const std::vector<BoundReport> verified = verify(f, {{alpha, beta}});
  const BoundReport& measured = verified.front();
  const QuantitySet qu =
      quantities(measured.source, alpha, beta, measured.spread_u_alpha, measured.spread_u_beta);

  Json rows = Json::array();
  for (const TargetValue& pv : target_values(case_id)) {
    const double a = an.values.at(pv.name);
    const double q = qu.values.at(pv.name);
    Json row;
    row["quantity"] = pv.name;
    row["target"] = json_number(pv.value);
    row["analytic"] = json_number(a);
    row["analytic_minus_target"] = json_number(a - pv.value);
    row["quadrature"] = json_number(q);
    row["abs_diff"] = json_number(std::abs(q - a));
    row["rel_diff"] = json_number(relative(q - a, a));
    rows.push_back(std::move(row));
  }
  {
    const double a = an.values.at("two_frft_real_fn");
    const double q = qu.values.at("two_frft_real_fn");
    Json row;
    row["quantity"] = "two_frft_real_fn";
    row["target"] = nullptr;
    row["analytic"] = json_number(a);
    row["analytic_minus_target"] = nullptr;
    row["quadrature"] = json_number(q);
    row["abs_diff"] = json_number(std::abs(q - a));
    row["rel_diff"] = json_number(relative(q - a, a));
    rows.push_back(std::move(row));
  }

  Json equalities = Json::array();
  for (const auto& [product, bound] : std::vector<std::pair<const char*, const char*>>{
           {"xw", "ft_sharper"}, {"xu", "frft_single_sharper"}, {"uu", "two_frft_main"}}) {
    const double gap = an.values.at(product) - an.values.at(bound);
    Json e;
    e["product"] = product;
    e["bound"] = bound;
    e["analytic_gap"] = json_number(gap);
    e["equality"] = std::abs(gap) <= 1e-12;
    e["quadrature_gap"] = json_number(qu.values.at(product) - qu.values.at(bound));
    equalities.push_back(std::move(e));
  }

  Json j;
  j["case"] = case_id;
  j["chirp"] = to_json(c.chirp);
  j["angles"] = Json::array({json_number(c.alpha), json_number(c.beta)});
  j["grid"] = {{"half_width", json_number(grid.half_width)}, {"points_per_dim", grid.points}};
  j["quantities"] = std::move(rows);
  j["equalities"] = std::move(equalities);
  j["analytic_report"] = to_json(analytic);
  j["quadrature_report"] = to_json(measured.source);
  j["warnings"] = measured.warnings;
  return j;
}

int run(const std::vector<std::string>& raw_args, std::ostream& out, std::ostream& err) {
  try {
    const std::vector<std::string> args = expand_config(raw_args);

    CLI::App app{"N-dimensional FRFT, moment and uncertainty-bound toolkit", "nfrft"};
    app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
    app.require_subcommand(1);
    app.set_version_flag("--version", "nfrft 1.0");
    std::string config_unused;
    app.add_option("--config", config_unused, "JSON file whose keys supply default flag values");

    GridSpec grid;
    std::string in_path, chirp, output, format = "json";
    auto add_common = [&](CLI::App* sub, bool with_input) {
      if (with_input) {
        sub->add_option("--in", in_path, "grid file (JSON or binary)");
        sub->add_option("--chirp", chirp, "chirp parameter file or inline JSON");
      }
      sub->add_option("--half-width", grid.half_width, "grid half width for sampled chirps")->capture_default_str();
      sub->add_option("--points", grid.points, "samples per dimension for sampled chirps")->capture_default_str();
      sub->add_option("--format", format, "report format")->check(CLI::IsMember({"json", "csv"}));
      sub->add_option("--output", output, "report destination (default stdout)");
    };

    std::string alpha_text, out_grid, angles_text, case_id, variant;
    double s_param = 0.0, d_param = 0.0, z_param = 0.0;
    auto* frft = app.add_subcommand("frft", "transform a function and write the result as a grid file");
    add_common(frft, true);
    frft->add_option("--alpha", alpha_text, "rotation angle, e.g. 2pi/3")->required();
    frft->add_option("--out", out_grid, "output grid file (.json for JSON, anything else binary)")->required();

    auto* moments = app.add_subcommand("moments", "moment report");
    add_common(moments, true);
    moments->add_option("--alpha", alpha_text, "also report the FRFT-domain moment and spread at this angle");

    auto* bounds = app.add_subcommand("bounds", "evaluate every bound for each angle pair");
    add_common(bounds, true);
    bounds->add_option("--angles", angles_text, "angle pairs 'a1,b1;a2,b2'")->required();

    auto* reproduce = app.add_subcommand("reproduce", "analytic and quadrature values for a named case");
    add_common(reproduce, false);
    reproduce->add_option("--case", case_id, "paper-2d-a or paper-2d-b")->required();

    auto* optics = app.add_subcommand("optics", "spread floor behind a Fresnel or lens FRFT system");
    add_common(optics, false);
    optics->add_option("--variant", variant, "fresnel or lens")->required();
    optics->add_option("--s", s_param, "scale parameter")->required();
    optics->add_option("--d", d_param, "propagation distance / lens separation")->required();
    auto* z_opt = optics->add_option("--z", z_param, "focal length (lens; derived when omitted)");
    optics->add_option("--chirp", chirp, "chirp parameter file or inline JSON")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back();
    try {
      app.parse(reversed);
    } catch (const CLI::ParseError& e) {
      const int code = app.exit(e, out, err);
      return code == 0 ? kExitOk : kExitError;
    }

    Output sink(output, out);

    if (frft->parsed()) {
      const LoadedInput input = load_input(in_path, chirp, grid);
      const Angle alpha(parse_angle(alpha_text));
      const GridFunction g = frft_nd(input.f, alpha);
      save_grid(g, out_grid);
      Json j;
      j["alpha"] = json_number(alpha.radians());
      j["angle_class"] = to_string(alpha.kind());
      j["snapped"] = alpha.snapped();
      j["input"] = input.label;
      j["output"] = out_grid;
      Json axes = Json::array();
      for (const Axis& a : g.axes()) {
        axes.push_back({{"start", json_number(a.start())}, {"step", json_number(a.step())}, {"count", a.count()}});
      }
      j["target_axes"] = std::move(axes);
      j["norm_sq_in"] = json_number(l2_norm_sq(input.f));
      j["norm_sq_out"] = json_number(l2_norm_sq(g));
      j["tail_mass_out"] = json_number(tail_mass_fraction(g));
      sink.json(j);
      return kExitOk;
    }

    if (moments->parsed()) {
      const LoadedInput input = load_input(in_path, chirp, grid);
      std::optional<Angle> alpha;
      if (!alpha_text.empty()) alpha = Angle(parse_angle(alpha_text));
      const MomentReport r = moment_report(input.f, alpha);
      if (format == "csv") {
        moments_csv(sink.stream(), r);
      } else {
        sink.json(to_json(r));
      }
      return kExitOk;
    }

    if (bounds->parsed()) {
      const LoadedInput input = load_input(in_path, chirp, grid);
      std::vector<std::pair<Angle, Angle>> pairs;
      for (const auto& [a, b] : parse_angle_pairs(angles_text)) pairs.emplace_back(Angle(a), Angle(b));
      const std::vector<BoundReport> reports = verify(input.f, pairs);
      bool violation = false;
      if (format == "csv") {
        write_bounds_csv_header(sink.stream());
        for (const BoundReport& r : reports) write_bounds_csv(sink.stream(), input.label, r);
      } else {
        Json arr = Json::array();
        for (const BoundReport& r : reports) arr.push_back(to_json(r));
        sink.json(arr);
      }
      for (const BoundReport& r : reports) violation = violation || r.any_violation();
      if (violation) err << "nfrft: bound violation flagged (numerical error suspected)\n";
      return violation ? kExitViolation : kExitOk;
    }

    if (reproduce->parsed()) {
      const Json j = reproduce_report(case_id, grid);
      if (format == "csv") {
        std::ostream& o = sink.stream();
        o << "quantity,target,analytic,quadrature,abs_diff,rel_diff\n";
        for (const auto& row : j.at("quantities")) {
          auto cell = [](const Json& v) { return v.is_null() ? std::string() : format_number(v.get<double>()); };
          o << row.at("quantity").get<std::string>() << ',' << cell(row.at("target")) << ','
            << cell(row.at("analytic")) << ',' << cell(row.at("quadrature")) << ',' << cell(row.at("abs_diff"))
            << ',' << cell(row.at("rel_diff")) << '\n';
        }
      } else {
        sink.json(j);
      }
      return kExitOk;
    }

    if (optics->parsed()) {
      const OpticsVariant v = parse_optics_variant(variant);
      std::optional<double> z;
      if (z_opt->count() > 0) z = z_param;
      if (v == OpticsVariant::Fresnel && z) throw ArgumentError("--z only applies to the lens variant");
      const OpticalSetup setup = v == OpticsVariant::Fresnel ? OpticalSetup::fresnel(s_param, d_param)
                                                             : OpticalSetup::lens(s_param, d_param, z);
      const nlohmann::json spec = load_chirp_spec(chirp);
      const MomentReport r = is_extremal_spec(spec) ? extremal_moments(extremal_from_json(spec))
                                                    : chirp2d_moments(chirp2d_from_json(spec));
      const double floor = optical_spread_floor(setup, r);
      const BandwidthFloor bw = bandwidth_floor(r);
      const FrftBandwidthFloor fb = frft_bandwidth_floor(r, setup.angle());
      Json j;
      j["setup"] = to_json(setup);
      j["alpha"] = json_number(setup.angle().radians());
      j["floor"] = json_number(floor);
      j["bandwidth"] = {{"freq_floor", json_number(bw.freq_floor)},
                        {"freq_floor_classical", json_number(bw.freq_floor_classical)}};
      j["frft_floors"] = {{"floor_main", json_number(fb.floor_main)},
                          {"floor_real", json_number(fb.floor_real)},
                          {"floor_classical", json_number(fb.floor_classical)}};
      j["report"] = to_json(r);
      if (format == "csv") {
        sink.stream() << "field,value\nalpha," << format_number(setup.angle().radians()) << "\nfloor,"
                      << format_number(floor) << '\n';
      } else {
        sink.json(j);
      }
      return kExitOk;
    }
    return kExitError;
  } catch (const std::exception& e) {
    err << "nfrft: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace nfrft::cli
