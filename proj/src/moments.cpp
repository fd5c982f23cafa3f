#include "nfrft/moments.hpp"

#include <cmath>
#include <string>

namespace nfrft {

namespace {

double require_norm(const GridFunction& f) {
  const double norm = l2_norm_sq(f);
  if (!(norm > 0.0)) throw DomainError("function has zero norm; moments are undefined");
  return norm;
}

void require_point(std::span<const double> p, std::size_t dims, const char* what) {
  if (p.size() != dims) {
    throw ArgumentError(std::string(what) + " has " + std::to_string(p.size()) + " components, expected " +
                        std::to_string(dims));
  }
}

DomainMoments domain_moments(const GridFunction& g, double norm) {
  DomainMoments m;
  m.moment = moment_vector(g, norm);
  m.spread = spread_about(g, m.moment);
  m.tail_mass = tail_mass_fraction(g);
  return m;
}

std::string tail_warning(const char* domain, double tail) {
  return std::string(domain) + " tail mass " + format_number(tail) + " exceeds threshold; widen the grid";
}

}  // namespace

std::vector<double> moment_vector(const GridFunction& g, double norm_sq) {
  if (!(norm_sq > 0.0)) throw DomainError("moment vector needs a positive norm");
  std::vector<double> m(g.dims(), 0.0);
  const std::size_t n = g.dims();
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    const double p = std::norm(g[flat]);
    if (p == 0.0) continue;
    const auto x = g.point(flat);
    for (std::size_t k = 0; k < n; ++k) m[k] += x[k] * p;
  }
  const double vol = cell_volume(g.axes());
  for (double& v : m) v *= vol / norm_sq;
  return m;
}

double spread_about(const GridFunction& g, std::span<const double> center) {
  require_point(center, g.dims(), "centre");
  double sum = 0.0;
  for (std::size_t flat = 0; flat < g.size(); ++flat) {
    const double p = std::norm(g[flat]);
    if (p == 0.0) continue;
    const auto x = g.point(flat);
    double r2 = 0.0;
    for (std::size_t k = 0; k < g.dims(); ++k) r2 += (x[k] - center[k]) * (x[k] - center[k]);
    sum += r2 * p;
  }
  return sum * cell_volume(g.axes());
}

std::vector<double> moment_vector_time(const GridFunction& f) { return moment_vector(f, require_norm(f)); }

double spread_time(const GridFunction& f) { return spread_about(f, moment_vector_time(f)); }

DomainMoments transform_moments(const GridFunction& f, const Angle& alpha, const std::optional<Axes>& target) {
  const double norm = require_norm(f);
  return domain_moments(frft_nd(f, alpha, target), norm);
}

double spread_freq(const GridFunction& f, const std::optional<Axes>& target) {
  const double norm = require_norm(f);
  return domain_moments(ft_nd(f, target), norm).spread;
}

double spread_frft(const GridFunction& f, const Angle& alpha, const std::optional<Axes>& target) {
  return transform_moments(f, alpha, target).spread;
}

std::vector<double> freq_moment_time_route(const GridFunction& f, DiffOrder stencil) {
  const double norm = require_norm(f);
  std::vector<double> w(f.dims());
  for (std::size_t k = 0; k < f.dims(); ++k) w[k] = integrate(phase_density(f, k, stencil)) / norm;
  return w;
}

CovariancePair covariances_about(const GridFunction& f, std::span<const double> a, std::span<const double> b,
                                 DiffOrder stencil) {
  require_point(a, f.dims(), "time centre");
  require_point(b, f.dims(), "frequency centre");
  const double vol = cell_volume(f.axes());
  CovariancePair out;
  for (std::size_t k = 0; k < f.dims(); ++k) {
    const RealGrid pd = phase_density(f, k, stencil);
    double c = 0.0;
    double ac = 0.0;
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
      const double dx = f.point(flat)[k] - a[k];
      const double dw = pd[flat] - b[k] * std::norm(f[flat]);
      c += dx * dw;
      ac += std::abs(dx) * std::abs(dw);
    }
    out.cov += c * vol;
    out.abs_cov += ac * vol;
  }
  return out;
}

double covariance(const GridFunction& f) {
  const double norm = require_norm(f);
  const auto x0 = moment_vector(f, norm);
  const auto w0 = moment_vector(ft_nd(f), norm);
  return covariances_about(f, x0, w0).cov;
}

double abs_covariance(const GridFunction& f) {
  const double norm = require_norm(f);
  const auto x0 = moment_vector(f, norm);
  const auto w0 = moment_vector(ft_nd(f), norm);
  return covariances_about(f, x0, w0).abs_cov;
}

FrequencySpreadSplit freq_spread_about(const GridFunction& f, double b, std::size_t k, DiffOrder stencil) {
  require_norm(f);
  if (k >= f.dims()) throw ArgumentError("dimension index " + std::to_string(k) + " out of range");

  FrequencySpreadSplit s;
  const GridFunction spec = ft_nd(f);
  double ft = 0.0;
  for (std::size_t flat = 0; flat < spec.size(); ++flat) {
    const double dw = spec.point(flat)[k] - b;
    ft += dw * dw * std::norm(spec[flat]);
  }
  s.ft_side = ft * cell_volume(spec.axes());

  const RealGrid dlam = gradient(amplitude(f), k, stencil);
  double amp = 0.0;
  for (double v : dlam.values()) amp += v * v;
  s.amplitude_term = amp * cell_volume(f.axes()) / (4.0 * kPi * kPi);

  // (dphi/dx - b)^2 lambda^2 = (pd - b lambda^2)^2 / lambda^2; zero where f is.
  const RealGrid pd = phase_density(f, k, stencil);
  double ph = 0.0;
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    const double lam2 = std::norm(f[flat]);
    if (!(lam2 > 0.0)) continue;
    const double t = pd[flat] - b * lam2;
    ph += t * t / lam2;
  }
  s.phase_term = ph * cell_volume(f.axes());
  return s;
}

MomentReport moment_report(const GridFunction& f, const std::optional<Angle>& alpha, const MomentOptions& options) {
  MomentReport r;
  r.dims = f.dims();
  r.norm_sq = require_norm(f);
  r.x0 = moment_vector(f, r.norm_sq);
  r.spread_x = spread_about(f, r.x0);

  const DomainMoments freq = domain_moments(ft_nd(f), r.norm_sq);
  r.w0 = freq.moment;
  r.spread_w = freq.spread;

  const CovariancePair c = covariances_about(f, r.x0, r.w0, options.stencil);
  r.cov = c.cov;
  r.abs_cov = c.abs_cov;

  const double time_tail = tail_mass_fraction(f);
  if (time_tail > options.tail_warning) r.warnings.push_back(tail_warning("time-domain", time_tail));
  if (freq.tail_mass > options.tail_warning) r.warnings.push_back(tail_warning("frequency-domain", freq.tail_mass));
  if (r.spread_x == 0.0) r.warnings.push_back("time spread is zero: delta-like sample");

  if (alpha) {
    r.alpha = alpha->radians();
    const DomainMoments u = domain_moments(frft_nd(f, *alpha), r.norm_sq);
    r.u0_alpha = u.moment;
    r.spread_u_alpha = u.spread;
    if (u.tail_mass > options.tail_warning) r.warnings.push_back(tail_warning("FRFT-domain", u.tail_mass));
    if (alpha->snapped()) {
      r.warnings.push_back(std::string("angle snapped to the ") + to_string(alpha->kind()) + " case");
    }
  }
  return r;
}

MomentReport reference_report(const GridFunction& f, std::span<const double> a, std::span<const double> b,
                              const MomentOptions& options) {
  require_point(a, f.dims(), "time reference");
  require_point(b, f.dims(), "frequency reference");
  MomentReport r;
  r.dims = f.dims();
  r.norm_sq = require_norm(f);
  r.reference_centered = true;
  r.x0.assign(a.begin(), a.end());
  r.w0.assign(b.begin(), b.end());
  r.spread_x = spread_about(f, a);

  const GridFunction spec = ft_nd(f);
  r.spread_w = spread_about(spec, b);
  const CovariancePair c = covariances_about(f, a, b, options.stencil);
  r.cov = c.cov;
  r.abs_cov = c.abs_cov;

  const double time_tail = tail_mass_fraction(f);
  const double freq_tail = tail_mass_fraction(spec);
  if (time_tail > options.tail_warning) r.warnings.push_back(tail_warning("time-domain", time_tail));
  if (freq_tail > options.tail_warning) r.warnings.push_back(tail_warning("frequency-domain", freq_tail));
  return r;
}

double spread_relation_residual(const MomentReport& report) {
  if (!report.alpha || !report.spread_u_alpha) throw ArgumentError("report carries no FRFT angle");
  const Angle a(*report.alpha);
  const double s = a.kind() == AngleClass::Generic ? a.sin() : 0.0;
  const double c = a.kind() == AngleClass::Generic ? a.cos() : (a.kind() == AngleClass::IdentityLike ? 1.0 : -1.0);
  const double predicted = c * c * report.spread_x + s * s * report.spread_w + 2.0 * s * c * report.cov;
  return *report.spread_u_alpha - predicted;
}

double spread_relation_check(const GridFunction& f, const Angle& alpha, const MomentOptions& options) {
  return spread_relation_residual(moment_report(f, alpha, options));
}

Json to_json(const MomentReport& r) {
  Json j;
  j["dims"] = r.dims;
  j["norm_sq"] = json_number(r.norm_sq);
  j["x0"] = json_numbers(r.x0);
  j["w0"] = json_numbers(r.w0);
  if (r.alpha) {
    j["alpha"] = json_number(*r.alpha);
    j["u0_alpha"] = json_numbers(r.u0_alpha);
  } else {
    j["alpha"] = nullptr;
    j["u0_alpha"] = nullptr;
  }
  j["spread_x"] = json_number(r.spread_x);
  j["spread_w"] = json_number(r.spread_w);
  j["spread_u"] = r.spread_u_alpha ? json_number(*r.spread_u_alpha) : Json(nullptr);
  j["cov"] = json_number(r.cov);
  j["abs_cov"] = json_number(r.abs_cov);
  j["reference_centered"] = r.reference_centered;
  j["warnings"] = r.warnings;
  return j;
}

}  // namespace nfrft
