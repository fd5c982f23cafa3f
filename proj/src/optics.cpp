#include "nfrft/optics.hpp"

#include <cmath>

#include "nfrft/bounds.hpp"

namespace nfrft {

namespace {

void require_positive(double v, const char* what) {
  if (!std::isfinite(v) || !(v > 0.0)) throw ArgumentError(std::string(what) + " must be finite and > 0");
}

double require_spread(const MomentReport& r) {
  if (!(r.spread_x > 0.0)) throw DomainError("time spread must be > 0 to derive a floor");
  return r.spread_x;
}

}  // namespace

const char* to_string(OpticsVariant v) { return v == OpticsVariant::Fresnel ? "fresnel" : "lens"; }

OpticsVariant parse_optics_variant(const std::string& s) {
  if (s == "fresnel") return OpticsVariant::Fresnel;
  if (s == "lens") return OpticsVariant::Lens;
  throw ArgumentError("unknown optics variant '" + s + "' (expected fresnel or lens)");
}

OpticalSetup::OpticalSetup(OpticsVariant variant, double s, double dist, double focal, double alpha)
    : variant_(variant), s_(s), dist_(dist), focal_(focal), alpha_(alpha) {}

OpticalSetup OpticalSetup::fresnel(double s, double dist) {
  require_positive(s, "s");
  require_positive(dist, "d");
  return OpticalSetup(OpticsVariant::Fresnel, s, dist, 0.0, std::atan(dist / (s * s)));
}

OpticalSetup OpticalSetup::lens(double s, double dist, std::optional<double> focal) {
  require_positive(s, "s");
  require_positive(dist, "d");
  const double s2 = s * s;
  const double ratio = dist / s2;
  if (ratio > 1.0) {
    throw DomainError("lens system needs d <= s^2 (sin a = d/s^2 = " + format_number(ratio) + ")");
  }
  const double alpha = std::asin(ratio);
  const double derived = s2 * std::tan(alpha / 2.0);
  if (focal) {
    require_positive(*focal, "z");
    const double expected = std::tan(alpha / 2.0);
    if (std::abs(*focal / s2 - expected) > kLensConsistencyTolerance * std::max(1.0, expected)) {
      throw ArgumentError("inconsistent lens parameters: z/s^2 = " + format_number(*focal / s2) +
                          " but tan(a/2) = " + format_number(expected) + " for sin a = d/s^2");
    }
    return OpticalSetup(OpticsVariant::Lens, s, dist, *focal, alpha);
  }
  return OpticalSetup(OpticsVariant::Lens, s, dist, derived, alpha);
}

BandwidthFloor bandwidth_floor(const MomentReport& r) {
  const double dx2 = require_spread(r);
  const double h = heisenberg_term(r);
  return {(h + r.abs_cov * r.abs_cov) / dx2, h / dx2};
}

FrftBandwidthFloor frft_bandwidth_floor(const MomentReport& r, const Angle& alpha) {
  const double dx2 = require_spread(r);
  const double h = heisenberg_term(r);
  const FrftSingleBounds single = bound_frft_single(r, alpha);
  const double s = alpha.is_generic() ? alpha.sin() : 0.0;
  const double c = alpha.is_generic() ? alpha.cos() : (alpha.kind() == AngleClass::IdentityLike ? 1.0 : -1.0);
  FrftBandwidthFloor f;
  f.floor_main = single.sharper / dx2;
  f.floor_real = (h * s * s + c * c * dx2 * dx2) / dx2;
  f.floor_classical = single.classical / dx2;
  return f;
}

double optical_spread_floor(const OpticalSetup& setup, const MomentReport& r) {
  const double dx2 = require_spread(r);
  const double sharp = (heisenberg_term(r) + r.abs_cov * r.abs_cov) / dx2;
  const double s2 = setup.s() * setup.s();
  const double t = setup.dist() / s2;
  if (setup.variant() == OpticsVariant::Fresnel) {
    return sharp / (1.0 + 1.0 / (t * t)) + dx2 / (1.0 + t * t) + 2.0 / (t + 1.0 / t) * r.cov;
  }
  const double m = setup.dist() / setup.focal() - 1.0;
  return t * t * sharp + m * m * dx2 + 2.0 * t * m * r.cov;
}

Json to_json(const OpticalSetup& setup) {
  Json j;
  j["variant"] = to_string(setup.variant());
  j["s"] = json_number(setup.s());
  j["d"] = json_number(setup.dist());
  j["z"] = setup.variant() == OpticsVariant::Lens ? json_number(setup.focal()) : Json(nullptr);
  j["alpha"] = json_number(setup.angle().radians());
  return j;
}

}  // namespace nfrft
