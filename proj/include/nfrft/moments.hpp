#pragma once

// Moment, spread and covariance functionals of a sampled f = lambda e^{2 pi i phi}.
//
//   x0_k      = integral x_k |f|^2 / ||f||^2
//   w0_k      = integral w_k |F|^2 / ||f||^2                  (F = FT of f)
//   u0_k      = integral u_k |F_alpha|^2 / ||f||^2
//   spread_x  = integral |x - x0|^2 |f|^2                      (not normalised)
//   spread_w  = integral |w - w0|^2 |F|^2
//   spread_u  = integral |u - u0|^2 |F_alpha|^2
//   cov       = sum_k integral (x_k - x0_k)(dphi/dx_k - w0_k) lambda^2
//   abs_cov   = sum_k integral |x_k - x0_k| |dphi/dx_k - w0_k| lambda^2
//
// lambda^2 dphi/dx_k is evaluated as phase_density(f, k), so the phase is
// never unwrapped.

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "nfrft/grid.hpp"
#include "nfrft/json_format.hpp"
#include "nfrft/transforms.hpp"

namespace nfrft {

struct MomentOptions {
  /// Stencil used for every phase and amplitude derivative.
  DiffOrder stencil = DiffOrder::Spectral;
  /// Tail-mass fraction (outer 5% shell) above which a report carries a warning.
  double tail_warning = 1e-6;
};

struct MomentReport {
  std::size_t dims = 0;
  double norm_sq = 0.0;
  std::vector<double> x0;
  std::vector<double> w0;
  double spread_x = 0.0;
  double spread_w = 0.0;
  double cov = 0.0;
  double abs_cov = 0.0;
  /// Set when the report was evaluated at an FRFT angle.
  std::optional<double> alpha;
  std::vector<double> u0_alpha;
  std::optional<double> spread_u_alpha;
  /// True when x0 / w0 are caller-supplied reference points rather than
  /// the moment vectors of f.
  bool reference_centered = false;
  std::vector<std::string> warnings;
};

/// Moment vector and spread of a transformed function on its own grid.
struct DomainMoments {
  std::vector<double> moment;
  double spread = 0.0;
  double tail_mass = 0.0;
};

struct CovariancePair {
  double cov = 0.0;
  double abs_cov = 0.0;
};

/// Both sides of the frequency-spread decomposition along axis k:
///   integral (w_k - b)^2 |F|^2
///     = 1/(4 pi^2) integral (dlambda/dx_k)^2 + integral (dphi/dx_k - b)^2 lambda^2
struct FrequencySpreadSplit {
  double ft_side = 0.0;
  double amplitude_term = 0.0;
  double phase_term = 0.0;
  double time_side() const { return amplitude_term + phase_term; }
  double difference() const { return ft_side - time_side(); }
};

/// Centre of mass of |g|^2 on g's own grid, divided by `norm_sq`.
std::vector<double> moment_vector(const GridFunction& g, double norm_sq);
/// integral |x - center|^2 |g|^2.
double spread_about(const GridFunction& g, std::span<const double> center);

std::vector<double> moment_vector_time(const GridFunction& f);
double spread_time(const GridFunction& f);

/// Moments of the FT (angle pi/2) or FRFT of f, normalised by ||f||^2 of the
/// time-domain samples. Target grid defaults to default_target_axes.
DomainMoments transform_moments(const GridFunction& f, const Angle& alpha,
                                const std::optional<Axes>& target = std::nullopt);
double spread_freq(const GridFunction& f, const std::optional<Axes>& target = std::nullopt);
double spread_frft(const GridFunction& f, const Angle& alpha, const std::optional<Axes>& target = std::nullopt);

/// Frequency moment through the time domain: integral lambda^2 dphi/dx_k / ||f||^2.
/// Cross-check for the FT-domain w0.
std::vector<double> freq_moment_time_route(const GridFunction& f, DiffOrder stencil = DiffOrder::Spectral);

/// Covariances about explicit centres a (time) and b (frequency).
CovariancePair covariances_about(const GridFunction& f, std::span<const double> a, std::span<const double> b,
                                 DiffOrder stencil = DiffOrder::Spectral);
/// Covariances about the moment vectors (w0 from the FT domain).
double covariance(const GridFunction& f);
double abs_covariance(const GridFunction& f);

FrequencySpreadSplit freq_spread_about(const GridFunction& f, double b, std::size_t k,
                                       DiffOrder stencil = DiffOrder::Spectral);

/// Full report about the moment vectors; adds the FRFT moment and spread
/// when `alpha` is given.
MomentReport moment_report(const GridFunction& f, const std::optional<Angle>& alpha = std::nullopt,
                           const MomentOptions& options = {});

/// Report with spreads and covariances taken about arbitrary reference
/// points a (time) and b (frequency).
MomentReport reference_report(const GridFunction& f, std::span<const double> a, std::span<const double> b,
                              const MomentOptions& options = {});

/// spread_u - (cos^2 a spread_x + sin^2 a spread_w + 2 sin a cos a cov).
double spread_relation_residual(const MomentReport& report);
double spread_relation_check(const GridFunction& f, const Angle& alpha, const MomentOptions& options = {});

Json to_json(const MomentReport& report);

}  // namespace nfrft
