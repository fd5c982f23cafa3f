#pragma once

// Uncertainty lower bounds evaluated from a MomentReport.
//
// With H = N^2 / (16 pi^2) ||f||^4:
//
//   ft_classical         dx2 dw2   >= H
//   ft_sharper           dx2 dw2   >= H + COV^2
//   frft_single_sharper  dx2 du_a2 >= (H + COV^2 - Cov^2) sin^2 a + (cos a dx2 + sin a Cov)^2
//   frft_single_classic  dx2 du_a2 >= H sin^2 a
//   two_frft_main        du_a2 du_b2 >= (H + COV^2 - Cov^2) sin^2(a-b)
//                                       + (cos a cos b dx2 + sin a sin b dw2 + sin(a+b) Cov)^2
//   two_frft_real_fn     main with Cov := 0                        (valid when Cov = 0)
//   two_frft_prior       H sin^2(a-b) + (cos a cos b dx2 + sin a sin b dw2)^2   (valid when Cov = 0)

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nfrft/grid.hpp"
#include "nfrft/json_format.hpp"
#include "nfrft/moments.hpp"
#include "nfrft/transforms.hpp"

namespace nfrft {

/// Relative slack below which a bound counts as violated.
inline constexpr double kDefaultBoundTolerance = 1e-3;

/// N^2 / (16 pi^2) * norm_sq^2.
double heisenberg_term(const MomentReport& report);

double bound_ft_classical(const MomentReport& report);
double bound_ft_sharper(const MomentReport& report);

struct FrftSingleBounds {
  double sharper = 0.0;
  double classical = 0.0;
};
FrftSingleBounds bound_frft_single(const MomentReport& report, const Angle& alpha);

struct TwoFrftBounds {
  double main = 0.0;
  double real_fn = 0.0;
  double prior = 0.0;
};
TwoFrftBounds bound_two_frft(const MomentReport& report, const Angle& alpha, const Angle& beta);

/// du_a2 predicted from dx2, dw2 and Cov: cos^2 a dx2 + sin^2 a dw2 + 2 sin a cos a Cov.
double predicted_frft_spread(const MomentReport& report, const Angle& alpha);

/// du_a2 du_b2 - [(dx2 dw2 - Cov^2) sin^2(a-b) + (cos a cos b dx2 + sin a sin b dw2 + sin(a+b) Cov)^2],
/// with both FRFT spreads taken from predicted_frft_spread.
double product_identity_check(const MomentReport& report, const Angle& alpha, const Angle& beta);

struct BoundEntry {
  std::string name;
  /// Human-readable inequality the value belongs to.
  std::string eq;
  double value = 0.0;
  /// Uncertainty product this bound is compared against.
  double product = 0.0;
  double slack = 0.0;
  /// False for bounds whose hypothesis (Cov = 0) the input does not meet.
  bool valid = true;
  bool violated = false;
};

struct BoundReport {
  /// du_a2 du_b2 for the angle pair.
  double product = 0.0;
  double alpha = 0.0;
  double beta = 0.0;
  double spread_u_alpha = 0.0;
  double spread_u_beta = 0.0;
  std::vector<BoundEntry> bounds;
  std::vector<std::string> warnings;
  MomentReport source;

  bool any_violation() const;
  const BoundEntry& entry(const std::string& name) const;
};

struct VerifyOptions {
  double tol_bound = kDefaultBoundTolerance;
  MomentOptions moments;
};

/// Bounds for one angle pair from a report and the two FRFT-domain spreads
/// (measured or closed-form).
BoundReport evaluate_bounds(const MomentReport& report, const Angle& alpha, const Angle& beta, double spread_u_alpha,
                            double spread_u_beta, const VerifyOptions& options = {});

/// Moment report of f plus the bound report for every angle pair. FRFT spreads
/// are measured on default target grids.
std::vector<BoundReport> verify(const GridFunction& f, const std::vector<std::pair<Angle, Angle>>& angles,
                                const VerifyOptions& options = {});

Json to_json(const BoundReport& report);

/// One CSV row per bound: function,alpha,beta,bound,value,product,slack,valid.
void write_bounds_csv_header(std::ostream& out);
void write_bounds_csv(std::ostream& out, const std::string& function_label, const BoundReport& report);

}  // namespace nfrft
