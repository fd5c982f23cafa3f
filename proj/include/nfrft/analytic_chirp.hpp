#pragma once

// Closed-form Gaussian-chirp families.
//
// GaussianChirp2D:
//   f(x) = exp(-sum_k (x_k - x0_k)^2 / (2 zeta_k) + d)
//        * exp(2 pi i [ (x_1 - x0_1)^2 / (2 eps_1) - (x_2 - x0_2)^2 / (2 eps_2) + w0.x + d1 ])
//
// ExtremalChirpND:
//   f(x) = exp(-|x - a|^2 / (2 zeta) + d)
//        * exp(2 pi i [ sum_m eta_m(x) (x_m - a_m)^2 / (2 eps) + b.x + d^{eta(x)} ])
//   eta_m = +1 (Plus), -1 (Minus), sgn(x_m - a_m) (Sgn), -sgn(x_m - a_m) (NegSgn),
//   with sgn(0) = +1.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "nfrft/grid.hpp"
#include "nfrft/moments.hpp"
#include "nfrft/transforms.hpp"

namespace nfrft {

class GaussianChirp2D {
 public:
  GaussianChirp2D(std::array<double, 2> zeta, std::array<double, 2> eps, std::array<double, 2> x0,
                  std::array<double, 2> w0, double d, double d1 = 0.0);

  /// Solves d from e^{2d} pi sqrt(zeta_1 zeta_2) = 1.
  static GaussianChirp2D unit_norm(std::array<double, 2> zeta, std::array<double, 2> eps,
                                   std::array<double, 2> x0 = {0.0, 0.0}, std::array<double, 2> w0 = {0.0, 0.0},
                                   double d1 = 0.0);

  const std::array<double, 2>& zeta() const { return zeta_; }
  const std::array<double, 2>& eps() const { return eps_; }
  const std::array<double, 2>& x0() const { return x0_; }
  const std::array<double, 2>& w0() const { return w0_; }
  double d() const { return d_; }
  double d1() const { return d1_; }

  /// e^{2d} pi sqrt(zeta_1 zeta_2); 1 for unit_norm instances.
  double norm_sq() const;

  Complex operator()(double x1, double x2) const;
  GridFunction sample(const Axes& axes) const;

 private:
  std::array<double, 2> zeta_;
  std::array<double, 2> eps_;
  std::array<double, 2> x0_;
  std::array<double, 2> w0_;
  double d_;
  double d1_;
};

/// Closed-form report. Adds u0_alpha and spread_u_alpha when an angle is given.
MomentReport chirp2d_moments(const GaussianChirp2D& p, const std::optional<Angle>& alpha = std::nullopt);
double chirp2d_frft_spread(const GaussianChirp2D& p, const Angle& alpha);

struct ChirpProducts {
  double xw = 0.0;  // dx2 dw2
  double xu = 0.0;  // dx2 du_a2
  double uu = 0.0;  // du_a2 du_b2
};
ChirpProducts chirp2d_products(const GaussianChirp2D& p, const Angle& alpha, const Angle& beta);

enum class EtaClass { Plus, Minus, Sgn, NegSgn };

const char* to_string(EtaClass c);
/// Accepts "+", "-", "sgn", "-sgn".
EtaClass parse_eta_class(const std::string& s);

class ExtremalChirpND {
 public:
  /// Orthant phases are keyed by the realised eta pattern, one '+' or '-'
  /// per dimension. An empty map means every phase is 0; a non-empty map
  /// must cover every pattern the partition can realise.
  ExtremalChirpND(std::vector<double> a, std::vector<double> b, double zeta, double eps, double d,
                  std::vector<EtaClass> eta, std::map<std::string, double> phases = {});

  static ExtremalChirpND unit_norm(std::vector<double> a, std::vector<double> b, double zeta, double eps,
                                   std::vector<EtaClass> eta, std::map<std::string, double> phases = {});

  std::size_t dims() const { return a_.size(); }
  const std::vector<double>& a() const { return a_; }
  const std::vector<double>& b() const { return b_; }
  double zeta() const { return zeta_; }
  double eps() const { return eps_; }
  double d() const { return d_; }
  const std::vector<EtaClass>& eta() const { return eta_; }
  const std::map<std::string, double>& phases() const { return phases_; }

  double norm_sq() const;
  /// Every eta pattern the partition can produce, sorted.
  std::vector<std::string> realizable_patterns() const;
  /// Pattern at x.
  std::string pattern_at(std::span<const double> x) const;
  /// True when crossing any Sgn/NegSgn hyperplane changes the orthant phase
  /// by an integer, i.e. f is continuous there.
  bool phase_continuous(double tol = 1e-12) const;

  Complex operator()(std::span<const double> x) const;
  GridFunction sample(const Axes& axes) const;

  ExtremalChirpND with_phases(std::map<std::string, double> phases) const;

 private:
  double orthant_phase(const std::string& pattern) const;

  std::vector<double> a_;
  std::vector<double> b_;
  double zeta_;
  double eps_;
  double d_;
  std::vector<EtaClass> eta_;
  std::map<std::string, double> phases_;
};

/// Closed-form report about the moment vectors x0 = a, w0 = E[grad phi].
MomentReport extremal_moments(const ExtremalChirpND& p);
/// Closed-form report with spreads and covariances about (a, b).
MomentReport extremal_reference_moments(const ExtremalChirpND& p);

/// Per-axis grid for sampling `p` so that time, frequency and every FRFT
/// domain in `angles` hold `n_sigma` standard deviations on each side of the
/// centre, with the FRFT windows from default_target_axes. `points_cap`
/// bounds the count per axis (ArgumentError if exceeded).
Axes plan_chirp_axes(const GaussianChirp2D& p, const std::vector<Angle>& angles, double n_sigma = 6.0,
                     std::size_t points_cap = 1024);

/// Named parameter sets "paper-2d-a" and "paper-2d-b" with their angle pair.
struct NamedCase {
  std::string name;
  GaussianChirp2D chirp;
  double alpha;
  double beta;
};
NamedCase named_case(const std::string& name);
std::vector<std::string> named_case_ids();

GaussianChirp2D chirp2d_from_json(const nlohmann::json& j);
ExtremalChirpND extremal_from_json(const nlohmann::json& j);
nlohmann::ordered_json to_json(const GaussianChirp2D& p);
nlohmann::ordered_json to_json(const ExtremalChirpND& p);

}  // namespace nfrft
