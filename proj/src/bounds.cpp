#include "nfrft/bounds.hpp"

#include <cmath>
#include <ostream>

namespace nfrft {

namespace {

// sin/cos with the special classes pinned to exact values.
double angle_sin(const Angle& a) { return a.is_generic() ? a.sin() : 0.0; }
double angle_cos(const Angle& a) {
  switch (a.kind()) {
    case AngleClass::IdentityLike:
      return 1.0;
    case AngleClass::ReflectionLike:
      return -1.0;
    case AngleClass::Generic:
      break;
  }
  return a.cos();
}

void require_report(const MomentReport& r) {
  if (!(r.norm_sq > 0.0)) throw DomainError("moment report has non-positive norm");
  if (r.dims == 0) throw ArgumentError("moment report has no dimensions");
}

bool cov_free(const MomentReport& r, double tol) {
  const double scale = std::sqrt(std::abs(r.spread_x * r.spread_w));
  return std::abs(r.cov) <= tol * std::max(scale, r.norm_sq);
}

}  // namespace

double heisenberg_term(const MomentReport& r) {
  require_report(r);
  const double n = static_cast<double>(r.dims);
  return n * n / (16.0 * kPi * kPi) * r.norm_sq * r.norm_sq;
}

double bound_ft_classical(const MomentReport& r) { return heisenberg_term(r); }

double bound_ft_sharper(const MomentReport& r) { return heisenberg_term(r) + r.abs_cov * r.abs_cov; }

FrftSingleBounds bound_frft_single(const MomentReport& r, const Angle& alpha) {
  const double h = heisenberg_term(r);
  const double s = angle_sin(alpha);
  const double c = angle_cos(alpha);
  const double bracket = c * r.spread_x + s * r.cov;
  FrftSingleBounds b;
  b.sharper = (h + r.abs_cov * r.abs_cov - r.cov * r.cov) * s * s + bracket * bracket;
  b.classical = h * s * s;
  return b;
}

TwoFrftBounds bound_two_frft(const MomentReport& r, const Angle& alpha, const Angle& beta) {
  const double h = heisenberg_term(r);
  const double sa = angle_sin(alpha), ca = angle_cos(alpha);
  const double sb = angle_sin(beta), cb = angle_cos(beta);
  const double sd = sa * cb - ca * sb;  // sin(a - b)
  const double ss = sa * cb + ca * sb;  // sin(a + b)
  const double base = ca * cb * r.spread_x + sa * sb * r.spread_w;
  const double with_cov = base + ss * r.cov;
  TwoFrftBounds b;
  b.main = (h + r.abs_cov * r.abs_cov - r.cov * r.cov) * sd * sd + with_cov * with_cov;
  b.real_fn = (h + r.abs_cov * r.abs_cov) * sd * sd + base * base;
  b.prior = h * sd * sd + base * base;
  return b;
}

double predicted_frft_spread(const MomentReport& r, const Angle& alpha) {
  const double s = angle_sin(alpha);
  const double c = angle_cos(alpha);
  return c * c * r.spread_x + s * s * r.spread_w + 2.0 * s * c * r.cov;
}

double product_identity_check(const MomentReport& r, const Angle& alpha, const Angle& beta) {
  const double sa = angle_sin(alpha), ca = angle_cos(alpha);
  const double sb = angle_sin(beta), cb = angle_cos(beta);
  const double sd = sa * cb - ca * sb;
  const double ss = sa * cb + ca * sb;
  const double lhs = predicted_frft_spread(r, alpha) * predicted_frft_spread(r, beta);
  const double bracket = ca * cb * r.spread_x + sa * sb * r.spread_w + ss * r.cov;
  const double rhs = (r.spread_x * r.spread_w - r.cov * r.cov) * sd * sd + bracket * bracket;
  return lhs - rhs;
}

bool BoundReport::any_violation() const {
  for (const BoundEntry& e : bounds) {
    if (e.violated) return true;
  }
  return false;
}

const BoundEntry& BoundReport::entry(const std::string& name) const {
  for (const BoundEntry& e : bounds) {
    if (e.name == name) return e;
  }
  throw ArgumentError("no bound named '" + name + "'");
}

BoundReport evaluate_bounds(const MomentReport& report, const Angle& alpha, const Angle& beta, double spread_u_alpha,
                            double spread_u_beta, const VerifyOptions& options) {
  BoundReport out;
  out.source = report;
  out.alpha = alpha.radians();
  out.beta = beta.radians();
  out.spread_u_alpha = spread_u_alpha;
  out.spread_u_beta = spread_u_beta;
  out.product = spread_u_alpha * spread_u_beta;
  out.warnings = report.warnings;

  const double xw = report.spread_x * report.spread_w;
  const double xu = report.spread_x * spread_u_alpha;
  const FrftSingleBounds single = bound_frft_single(report, alpha);
  const TwoFrftBounds two = bound_two_frft(report, alpha, beta);
  const bool no_cov = cov_free(report, options.tol_bound);

  auto add = [&](const char* name, const char* eq, double value, double product, bool valid) {
    BoundEntry e;
    e.name = name;
    e.eq = eq;
    e.value = value;
    e.product = product;
    e.slack = product - value;
    e.valid = valid;
    e.violated = valid && e.slack < -options.tol_bound * std::abs(product);
    if (e.violated) {
      out.warnings.push_back(std::string("bound ") + name + " exceeds its product by " + format_number(-e.slack) +
                             "; the inequality holds exactly, so this indicates numerical error");
    }
    out.bounds.push_back(std::move(e));
  };

  add("ft_classical", "dx2*dw2 >= N^2/(16 pi^2)*|f|^4", bound_ft_classical(report), xw, true);
  add("ft_sharper", "dx2*dw2 >= N^2/(16 pi^2)*|f|^4 + COV^2", bound_ft_sharper(report), xw, true);
  add("frft_single_sharper", "dx2*du_a2 >= (H + COV^2 - Cov^2) sin^2 a + (cos a dx2 + sin a Cov)^2", single.sharper,
      xu, true);
  add("frft_single_classical", "dx2*du_a2 >= H sin^2 a", single.classical, xu, true);
  add("two_frft_main",
      "du_a2*du_b2 >= (H + COV^2 - Cov^2) sin^2(a-b) + (cos a cos b dx2 + sin a sin b dw2 + sin(a+b) Cov)^2",
      two.main, out.product, true);
  add("two_frft_real_fn", "du_a2*du_b2 >= (H + COV^2) sin^2(a-b) + (cos a cos b dx2 + sin a sin b dw2)^2 [Cov = 0]",
      two.real_fn, out.product, no_cov);
  add("two_frft_prior", "du_a2*du_b2 >= H sin^2(a-b) + (cos a cos b dx2 + sin a sin b dw2)^2 [Cov = 0]", two.prior,
      out.product, no_cov);
  return out;
}

std::vector<BoundReport> verify(const GridFunction& f, const std::vector<std::pair<Angle, Angle>>& angles,
                                const VerifyOptions& options) {
  const MomentReport report = moment_report(f, std::nullopt, options.moments);
  std::vector<BoundReport> out;
  for (const auto& [alpha, beta] : angles) {
    const DomainMoments ua = transform_moments(f, alpha);
    const DomainMoments ub = transform_moments(f, beta);
    BoundReport b = evaluate_bounds(report, alpha, beta, ua.spread, ub.spread, options);
    for (const auto& [tail, angle] : {std::pair{ua.tail_mass, alpha}, std::pair{ub.tail_mass, beta}}) {
      if (tail > options.moments.tail_warning) {
        b.warnings.push_back("FRFT-domain tail mass " + format_number(tail) + " at angle " +
                             format_number(angle.radians()) + " exceeds threshold; widen the grid");
      }
      if (angle.snapped()) {
        b.warnings.push_back("angle " + format_number(angle.radians()) + " snapped to the " +
                             to_string(angle.kind()) + " case");
      }
    }
    out.push_back(std::move(b));
  }
  return out;
}

Json to_json(const BoundReport& r) {
  Json j;
  j["product"] = json_number(r.product);
  j["angles"] = Json::array({json_number(r.alpha), json_number(r.beta)});
  j["spread_u_alpha"] = json_number(r.spread_u_alpha);
  j["spread_u_beta"] = json_number(r.spread_u_beta);
  Json bounds = Json::array();
  for (const BoundEntry& e : r.bounds) {
    Json b;
    b["name"] = e.name;
    b["eq"] = e.eq;
    b["value"] = json_number(e.value);
    b["product"] = json_number(e.product);
    b["slack"] = json_number(e.slack);
    b["valid"] = e.valid;
    b["violated"] = e.violated;
    bounds.push_back(std::move(b));
  }
  j["bounds"] = std::move(bounds);
  j["warnings"] = r.warnings;
  j["source"] = to_json(r.source);
  return j;
}

void write_bounds_csv_header(std::ostream& out) { out << "function,alpha,beta,bound,value,product,slack,valid\n"; }

void write_bounds_csv(std::ostream& out, const std::string& function_label, const BoundReport& r) {
  for (const BoundEntry& e : r.bounds) {
    out << function_label << ',' << format_number(r.alpha) << ',' << format_number(r.beta) << ',' << e.name << ','
        << format_number(e.value) << ',' << format_number(e.product) << ',' << format_number(e.slack) << ','
        << (e.valid ? "true" : "false") << '\n';
  }
}

}  // namespace nfrft
