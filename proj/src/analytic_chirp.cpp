#include "nfrft/analytic_chirp.hpp"

#include <algorithm>
#include <cmath>

namespace nfrft {

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) throw ArgumentError(std::string(what) + " must be finite and > 0");
}

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw ArgumentError(std::string(what) + " must be finite");
}

// Pinned sin/cos so identity/reflection angles give exact values.
std::pair<double, double> sin_cos(const Angle& a) {
  switch (a.kind()) {
    case AngleClass::IdentityLike:
      return {0.0, 1.0};
    case AngleClass::ReflectionLike:
      return {0.0, -1.0};
    case AngleClass::Generic:
      break;
  }
  return {a.sin(), a.cos()};
}

double normal_cdf(double t) { return 0.5 * std::erfc(-t / std::sqrt(2.0)); }
double normal_pdf(double t) { return std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi); }

// E[Y |Y - E Y|] for Y = |X|, X ~ N(0, s2).
double half_normal_abs_dev_moment(double s2) {
  const double s = std::sqrt(s2);
  const double t = std::sqrt(2.0 / kPi);  // E[Y] / s
  const double mu = s * t;
  const double var = s2 * (1.0 - 2.0 / kPi);
  // integral_0^mu y (mu - y) p(y) dy, p the half-normal density
  const double first = mu * 2.0 * s * (normal_pdf(0.0) - normal_pdf(t));
  const double second = 2.0 * s2 * ((normal_cdf(t) - 0.5) - t * normal_pdf(t));
  return var + 2.0 * (first - second);
}

char eta_sign(EtaClass c, double offset) {
  const bool nonneg = offset >= 0.0;
  switch (c) {
    case EtaClass::Plus:
      return '+';
    case EtaClass::Minus:
      return '-';
    case EtaClass::Sgn:
      return nonneg ? '+' : '-';
    case EtaClass::NegSgn:
      return nonneg ? '-' : '+';
  }
  return '+';
}

template <std::size_t N>
std::array<double, N> array_field(const nlohmann::json& j, const char* key, std::optional<std::array<double, N>> dflt) {
  if (!j.contains(key)) {
    if (dflt) return *dflt;
    throw ArgumentError(std::string("chirp spec is missing '") + key + "'");
  }
  const auto v = j.at(key).get<std::vector<double>>();
  if (v.size() != N) throw ArgumentError(std::string("'") + key + "' needs " + std::to_string(N) + " entries");
  std::array<double, N> out{};
  std::copy(v.begin(), v.end(), out.begin());
  return out;
}

}  // namespace

// ---------------------------------------------------------------- 2-D family

GaussianChirp2D::GaussianChirp2D(std::array<double, 2> zeta, std::array<double, 2> eps, std::array<double, 2> x0,
                                 std::array<double, 2> w0, double d, double d1)
    : zeta_(zeta), eps_(eps), x0_(x0), w0_(w0), d_(d), d1_(d1) {
  for (int k = 0; k < 2; ++k) {
    require_positive(zeta_[k], "zeta");
    require_positive(eps_[k], "eps");
    require_finite(x0_[k], "x0");
    require_finite(w0_[k], "w0");
  }
  require_finite(d_, "d");
  require_finite(d1_, "d1");
}

GaussianChirp2D GaussianChirp2D::unit_norm(std::array<double, 2> zeta, std::array<double, 2> eps,
                                           std::array<double, 2> x0, std::array<double, 2> w0, double d1) {
  require_positive(zeta[0], "zeta");
  require_positive(zeta[1], "zeta");
  const double d = -0.5 * std::log(kPi * std::sqrt(zeta[0] * zeta[1]));
  return GaussianChirp2D(zeta, eps, x0, w0, d, d1);
}

double GaussianChirp2D::norm_sq() const { return std::exp(2.0 * d_) * kPi * std::sqrt(zeta_[0] * zeta_[1]); }

Complex GaussianChirp2D::operator()(double x1, double x2) const {
  const double y1 = x1 - x0_[0];
  const double y2 = x2 - x0_[1];
  const double env = std::exp(-y1 * y1 / (2.0 * zeta_[0]) - y2 * y2 / (2.0 * zeta_[1]) + d_);
  const double phase = y1 * y1 / (2.0 * eps_[0]) - y2 * y2 / (2.0 * eps_[1]) + w0_[0] * x1 + w0_[1] * x2 + d1_;
  return std::polar(env, 2.0 * kPi * phase);
}

GridFunction GaussianChirp2D::sample(const Axes& axes) const {
  if (axes.size() != 2) throw ArgumentError("GaussianChirp2D samples onto a 2-D grid");
  return GridFunction::sample(axes, [this](std::span<const double> x) { return (*this)(x[0], x[1]); });
}

MomentReport chirp2d_moments(const GaussianChirp2D& p, const std::optional<Angle>& alpha) {
  const double n = p.norm_sq();
  const auto& z = p.zeta();
  const auto& e = p.eps();
  const double four_pi2 = 4.0 * kPi * kPi;
  MomentReport r;
  r.dims = 2;
  r.norm_sq = n;
  r.x0 = {p.x0()[0], p.x0()[1]};
  r.w0 = {p.w0()[0], p.w0()[1]};
  r.spread_x = n * (z[0] + z[1]) / 2.0;
  r.spread_w =
      n * (z[0] / 2.0 * (1.0 / (four_pi2 * z[0] * z[0]) + 1.0 / (e[0] * e[0])) +
           z[1] / 2.0 * (1.0 / (four_pi2 * z[1] * z[1]) + 1.0 / (e[1] * e[1])));
  r.cov = n * (z[0] / (2.0 * e[0]) - z[1] / (2.0 * e[1]));
  r.abs_cov = n * (z[0] / (2.0 * e[0]) + z[1] / (2.0 * e[1]));
  if (alpha) {
    const auto [s, c] = sin_cos(*alpha);
    r.alpha = alpha->radians();
    r.u0_alpha = {c * r.x0[0] + s * r.w0[0], c * r.x0[1] + s * r.w0[1]};
    r.spread_u_alpha = chirp2d_frft_spread(p, *alpha);
  }
  return r;
}

double chirp2d_frft_spread(const GaussianChirp2D& p, const Angle& alpha) {
  const MomentReport r = chirp2d_moments(p);
  const auto [s, c] = sin_cos(alpha);
  return c * c * r.spread_x + s * s * r.spread_w + 2.0 * s * c * r.cov;
}

ChirpProducts chirp2d_products(const GaussianChirp2D& p, const Angle& alpha, const Angle& beta) {
  const MomentReport r = chirp2d_moments(p);
  const double ua = chirp2d_frft_spread(p, alpha);
  const double ub = chirp2d_frft_spread(p, beta);
  return {r.spread_x * r.spread_w, r.spread_x * ua, ua * ub};
}

// ---------------------------------------------------------------- N-D family

const char* to_string(EtaClass c) {
  switch (c) {
    case EtaClass::Plus:
      return "+";
    case EtaClass::Minus:
      return "-";
    case EtaClass::Sgn:
      return "sgn";
    case EtaClass::NegSgn:
      return "-sgn";
  }
  return "?";
}

EtaClass parse_eta_class(const std::string& s) {
  if (s == "+" || s == "plus") return EtaClass::Plus;
  if (s == "-" || s == "minus") return EtaClass::Minus;
  if (s == "sgn") return EtaClass::Sgn;
  if (s == "-sgn" || s == "neg_sgn") return EtaClass::NegSgn;
  throw ArgumentError("unknown eta class '" + s + "' (expected +, -, sgn or -sgn)");
}

ExtremalChirpND::ExtremalChirpND(std::vector<double> a, std::vector<double> b, double zeta, double eps, double d,
                                 std::vector<EtaClass> eta, std::map<std::string, double> phases)
    : a_(std::move(a)), b_(std::move(b)), zeta_(zeta), eps_(eps), d_(d), eta_(std::move(eta)),
      phases_(std::move(phases)) {
  const std::size_t n = a_.size();
  if (n == 0 || n > kMaxDims) throw ArgumentError("extremal chirp needs 1 to 4 dimensions");
  if (b_.size() != n) throw ArgumentError("a and b must have the same length");
  if (eta_.size() != n) throw ArgumentError("eta partition must assign a class to every dimension");
  for (double v : a_) require_finite(v, "a");
  for (double v : b_) require_finite(v, "b");
  require_positive(zeta_, "zeta");
  require_positive(eps_, "eps");
  require_finite(d_, "d");
  for (const auto& [key, value] : phases_) {
    if (key.size() != n || key.find_first_not_of("+-") != std::string::npos) {
      throw ArgumentError("orthant phase key '" + key + "' must be " + std::to_string(n) + " characters of + or -");
    }
    require_finite(value, "orthant phase");
  }
  if (!phases_.empty()) {
    const std::vector<std::string> patterns = realizable_patterns();
    for (const std::string& pattern : patterns) {
      if (!phases_.count(pattern)) throw ArgumentError("no orthant phase given for pattern '" + pattern + "'");
    }
    for (const auto& kv : phases_) {
      if (!std::binary_search(patterns.begin(), patterns.end(), kv.first)) {
        throw ArgumentError("orthant phase given for pattern '" + kv.first + "', which the partition never produces");
      }
    }
  }
}

ExtremalChirpND ExtremalChirpND::unit_norm(std::vector<double> a, std::vector<double> b, double zeta, double eps,
                                           std::vector<EtaClass> eta, std::map<std::string, double> phases) {
  require_positive(zeta, "zeta");
  const double n = static_cast<double>(a.size());
  const double d = -0.25 * n * std::log(kPi * zeta);
  return ExtremalChirpND(std::move(a), std::move(b), zeta, eps, d, std::move(eta), std::move(phases));
}

double ExtremalChirpND::norm_sq() const {
  return std::exp(2.0 * d_) * std::pow(kPi * zeta_, 0.5 * static_cast<double>(dims()));
}

std::vector<std::string> ExtremalChirpND::realizable_patterns() const {
  std::vector<std::string> out{""};
  for (EtaClass c : eta_) {
    std::vector<std::string> next;
    for (const std::string& prefix : out) {
      if (c == EtaClass::Plus) {
        next.push_back(prefix + '+');
      } else if (c == EtaClass::Minus) {
        next.push_back(prefix + '-');
      } else {
        next.push_back(prefix + '+');
        next.push_back(prefix + '-');
      }
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::string ExtremalChirpND::pattern_at(std::span<const double> x) const {
  std::string s(dims(), '+');
  for (std::size_t m = 0; m < dims(); ++m) s[m] = eta_sign(eta_[m], x[m] - a_[m]);
  return s;
}

double ExtremalChirpND::orthant_phase(const std::string& pattern) const {
  if (phases_.empty()) return 0.0;
  const auto it = phases_.find(pattern);
  if (it == phases_.end()) throw ArgumentError("no orthant phase given for pattern '" + pattern + "'");
  return it->second;
}

bool ExtremalChirpND::phase_continuous(double tol) const {
  for (const std::string& p : realizable_patterns()) {
    for (std::size_t m = 0; m < dims(); ++m) {
      if (eta_[m] != EtaClass::Sgn && eta_[m] != EtaClass::NegSgn) continue;
      std::string q = p;
      q[m] = q[m] == '+' ? '-' : '+';
      const double diff = orthant_phase(p) - orthant_phase(q);
      if (std::abs(diff - std::nearbyint(diff)) > tol) return false;
    }
  }
  return true;
}

Complex ExtremalChirpND::operator()(std::span<const double> x) const {
  if (x.size() != dims()) throw ArgumentError("point has the wrong dimension");
  double r2 = 0.0;
  double phase = 0.0;
  for (std::size_t m = 0; m < dims(); ++m) {
    const double y = x[m] - a_[m];
    r2 += y * y;
    const double eta = eta_sign(eta_[m], y) == '+' ? 1.0 : -1.0;
    phase += eta * y * y / (2.0 * eps_) + b_[m] * x[m];
  }
  phase += orthant_phase(pattern_at(x));
  return std::polar(std::exp(-r2 / (2.0 * zeta_) + d_), 2.0 * kPi * phase);
}

GridFunction ExtremalChirpND::sample(const Axes& axes) const {
  if (axes.size() != dims()) throw ArgumentError("grid dimension does not match the chirp");
  return GridFunction::sample(axes, [this](std::span<const double> x) { return (*this)(x); });
}

ExtremalChirpND ExtremalChirpND::with_phases(std::map<std::string, double> phases) const {
  return ExtremalChirpND(a_, b_, zeta_, eps_, d_, eta_, std::move(phases));
}

// Per dimension, with X = x_m - a_m ~ N(0, zeta/2) under |f|^2 / ||f||^2:
//   dphi/dx_m = b_m + X/eps (Plus), b_m - X/eps (Minus),
//               b_m + |X|/eps (Sgn), b_m - |X|/eps (NegSgn).
// The amplitude part of the frequency spread is 1/(8 pi^2 zeta) per dimension.
MomentReport extremal_moments(const ExtremalChirpND& p) {
  const double n = p.norm_sq();
  const double z = p.zeta();
  const double e = p.eps();
  const double s2 = z / 2.0;
  const double half_normal_mean = std::sqrt(z / kPi);
  MomentReport r;
  r.dims = p.dims();
  r.norm_sq = n;
  r.x0 = p.a();
  r.w0 = p.b();
  for (std::size_t m = 0; m < p.dims(); ++m) {
    double var_phase = 0.0;
    double cov = 0.0;
    double abs_cov = 0.0;
    switch (p.eta()[m]) {
      case EtaClass::Plus:
      case EtaClass::Minus: {
        const double sign = p.eta()[m] == EtaClass::Plus ? 1.0 : -1.0;
        var_phase = s2 / (e * e);
        cov = sign * s2 / e;
        abs_cov = s2 / e;
        break;
      }
      case EtaClass::Sgn:
      case EtaClass::NegSgn: {
        const double sign = p.eta()[m] == EtaClass::Sgn ? 1.0 : -1.0;
        r.w0[m] += sign * half_normal_mean / e;
        var_phase = s2 * (1.0 - 2.0 / kPi) / (e * e);
        abs_cov = half_normal_abs_dev_moment(s2) / e;
        break;
      }
    }
    r.spread_x += n * s2;
    r.spread_w += n * (1.0 / (8.0 * kPi * kPi * z) + var_phase);
    r.cov += n * cov;
    r.abs_cov += n * abs_cov;
  }
  return r;
}

MomentReport extremal_reference_moments(const ExtremalChirpND& p) {
  const double n = p.norm_sq();
  const double z = p.zeta();
  const double e = p.eps();
  const double s2 = z / 2.0;
  MomentReport r;
  r.dims = p.dims();
  r.norm_sq = n;
  r.reference_centered = true;
  r.x0 = p.a();
  r.w0 = p.b();
  for (std::size_t m = 0; m < p.dims(); ++m) {
    const EtaClass c = p.eta()[m];
    r.spread_x += n * s2;
    r.spread_w += n * (1.0 / (8.0 * kPi * kPi * z) + s2 / (e * e));
    if (c == EtaClass::Plus) r.cov += n * s2 / e;
    if (c == EtaClass::Minus) r.cov -= n * s2 / e;
    r.abs_cov += n * s2 / e;
  }
  return r;
}

// ---------------------------------------------------------------- planning

Axes plan_chirp_axes(const GaussianChirp2D& p, const std::vector<Angle>& angles, double n_sigma,
                     std::size_t points_cap) {
  require_positive(n_sigma, "n_sigma");
  const double four_pi2 = 4.0 * kPi * kPi;
  Axes axes;
  for (int k = 0; k < 2; ++k) {
    const double z = p.zeta()[k];
    const double e = p.eps()[k];
    const double sx2 = z / 2.0;
    const double sw2 = z / 2.0 * (1.0 / (four_pi2 * z * z) + 1.0 / (e * e));
    const double c = (k == 0 ? 1.0 : -1.0) * z / (2.0 * e);
    double step = 1.0 / (2.0 * n_sigma * std::sqrt(sw2));
    for (const Angle& a : angles) {
      if (!a.is_generic()) continue;
      const double s = a.sin();
      const double co = a.cos();
      const double su2 = co * co * sx2 + s * s * sw2 + 2.0 * s * co * c;
      step = std::min(step, std::abs(s) / (2.0 * n_sigma * std::sqrt(su2)));
    }
    const double half = n_sigma * std::sqrt(sx2);
    const auto count = static_cast<std::size_t>(std::ceil(2.0 * half / step));
    if (count > points_cap) {
      throw ArgumentError("planned grid needs " + std::to_string(count) + " points per axis, cap is " +
                          std::to_string(points_cap));
    }
    const std::size_t m = std::max<std::size_t>(count, 16);
    axes.push_back(Axis::cells(p.x0()[k] - half, p.x0()[k] + half, m));
  }
  return axes;
}

// ---------------------------------------------------------------- named cases

NamedCase named_case(const std::string& name) {
  if (name == "paper-2d-a") {
    return {name, GaussianChirp2D::unit_norm({1.0, 0.5}, {2.0, 1.0}), 2.0 * kPi / 3.0, kPi / 6.0};
  }
  if (name == "paper-2d-b") {
    return {name, GaussianChirp2D::unit_norm({1.0, 1.0}, {2.0, 2.0}), 2.0 * kPi / 3.0, kPi / 6.0};
  }
  throw ArgumentError("unknown case '" + name + "' (expected paper-2d-a or paper-2d-b)");
}

std::vector<std::string> named_case_ids() { return {"paper-2d-a", "paper-2d-b"}; }

// ---------------------------------------------------------------- JSON

GaussianChirp2D chirp2d_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("chirp spec must be a JSON object");
  try {
    const auto zeta = array_field<2>(j, "zeta", std::nullopt);
    const auto eps = array_field<2>(j, "eps", std::nullopt);
    const auto x0 = array_field<2>(j, "x0", std::array<double, 2>{0.0, 0.0});
    const auto w0 = array_field<2>(j, "w0", std::array<double, 2>{0.0, 0.0});
    const double d1 = j.value("d1", 0.0);
    if (j.contains("d") && !j.at("d").is_null()) {
      return GaussianChirp2D(zeta, eps, x0, w0, j.at("d").get<double>(), d1);
    }
    return GaussianChirp2D::unit_norm(zeta, eps, x0, w0, d1);
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed chirp spec: ") + e.what());
  }
}

ExtremalChirpND extremal_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ArgumentError("chirp spec must be a JSON object");
  try {
    auto a = j.at("a").get<std::vector<double>>();
    auto b = j.contains("b") ? j.at("b").get<std::vector<double>>() : std::vector<double>(a.size(), 0.0);
    const double zeta = j.at("zeta").get<double>();
    const double eps = j.at("eps").get<double>();
    std::vector<EtaClass> eta;
    if (j.contains("eta")) {
      for (const auto& s : j.at("eta")) eta.push_back(parse_eta_class(s.get<std::string>()));
    } else {
      eta.assign(a.size(), EtaClass::Plus);
    }
    std::map<std::string, double> phases;
    if (j.contains("phases")) phases = j.at("phases").get<std::map<std::string, double>>();
    if (j.contains("d") && !j.at("d").is_null()) {
      return ExtremalChirpND(std::move(a), std::move(b), zeta, eps, j.at("d").get<double>(), std::move(eta),
                             std::move(phases));
    }
    return ExtremalChirpND::unit_norm(std::move(a), std::move(b), zeta, eps, std::move(eta), std::move(phases));
  } catch (const nlohmann::json::exception& e) {
    throw ArgumentError(std::string("malformed chirp spec: ") + e.what());
  }
}

nlohmann::ordered_json to_json(const GaussianChirp2D& p) {
  nlohmann::ordered_json j;
  j["zeta"] = p.zeta();
  j["eps"] = p.eps();
  j["x0"] = p.x0();
  j["w0"] = p.w0();
  j["d"] = p.d();
  j["d1"] = p.d1();
  return j;
}

nlohmann::ordered_json to_json(const ExtremalChirpND& p) {
  nlohmann::ordered_json j;
  j["a"] = p.a();
  j["b"] = p.b();
  j["zeta"] = p.zeta();
  j["eps"] = p.eps();
  j["d"] = p.d();
  std::vector<std::string> eta;
  for (EtaClass c : p.eta()) eta.push_back(to_string(c));
  j["eta"] = eta;
  j["phases"] = p.phases();
  return j;
}

}  // namespace nfrft
