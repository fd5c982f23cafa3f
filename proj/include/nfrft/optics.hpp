#pragma once

// Spread floors derived from known moments.
//
// Bandwidth:   dw2  >= (H + COV^2) / dx2 >= H / dx2
// FRFT domain: du_a2 >= [(H + COV^2 - Cov^2) sin^2 a + (cos a dx2 + sin a Cov)^2] / dx2
//                    >= [H sin^2 a + cos^2 a dx2^2] / dx2
//                    >= H sin^2 a / dx2
// with H = N^2 / (16 pi^2) ||f||^4.
//
// Fresnel diffraction over distance d at scale s is an FRFT with tan a = d / s^2.
// A two-lens system (separation d, focal length z) is an FRFT with
// sin a = d / s^2 and tan(a / 2) = z / s^2.

#include <optional>
#include <string>

#include "nfrft/json_format.hpp"
#include "nfrft/moments.hpp"
#include "nfrft/transforms.hpp"

namespace nfrft {

enum class OpticsVariant { Fresnel, Lens };

const char* to_string(OpticsVariant v);
OpticsVariant parse_optics_variant(const std::string& s);

/// Tolerance for tan(a / 2) = z / s^2 when all three lens parameters are given.
inline constexpr double kLensConsistencyTolerance = 1e-9;

class OpticalSetup {
 public:
  /// a = atan(d / s^2), in (0, pi/2).
  static OpticalSetup fresnel(double s, double dist);
  /// a = asin(d / s^2), in (0, pi/2]; needs d <= s^2. Without `focal`, z is
  /// derived as s^2 tan(a / 2); with it, the pair is checked for consistency.
  static OpticalSetup lens(double s, double dist, std::optional<double> focal = std::nullopt);

  OpticsVariant variant() const { return variant_; }
  double s() const { return s_; }
  double dist() const { return dist_; }
  /// Focal length; only meaningful for the lens variant.
  double focal() const { return focal_; }
  Angle angle() const { return Angle(alpha_); }

 private:
  OpticalSetup(OpticsVariant variant, double s, double dist, double focal, double alpha);

  OpticsVariant variant_;
  double s_;
  double dist_;
  double focal_;
  double alpha_;
};

struct BandwidthFloor {
  double freq_floor = 0.0;
  double freq_floor_classical = 0.0;
};
BandwidthFloor bandwidth_floor(const MomentReport& report);

struct FrftBandwidthFloor {
  double floor_main = 0.0;
  double floor_real = 0.0;
  double floor_classical = 0.0;
};
FrftBandwidthFloor frft_bandwidth_floor(const MomentReport& report, const Angle& alpha);

/// Lower estimate of the observed-plane spread, written in the setup's own
/// parameters (d / s^2, d / z) rather than through the angle.
double optical_spread_floor(const OpticalSetup& setup, const MomentReport& report);

Json to_json(const OpticalSetup& setup);

}  // namespace nfrft
