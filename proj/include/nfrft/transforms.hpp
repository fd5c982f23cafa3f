#pragma once

// N-dimensional Fourier and fractional Fourier transforms by direct
// quadrature.
//
//   FT:    F(w)        = integral f(x) exp(-2 pi i x.w) dx
//   FRFT:  F_alpha(u)  = integral f(x) K_alpha(x, u) dx,   alpha != n pi
//          K_alpha(x,u) = (1 - i cot a)^(N/2)
//                         * exp(pi i (|x|^2 + |u|^2) cot a - 2 pi i x.u csc a)
//          F_alpha(u)  = f(u)  for alpha = 2n pi,  f(-u) for alpha = (2n+1) pi
//
// The kernel factorises over dimensions, so a transform is N successive
// dense matrix applications, one per axis. The prefactor uses the principal
// square root of (1 - i cot a) once per dimension.

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "nfrft/grid.hpp"

namespace nfrft {

/// Angles within this many radians of a multiple of pi snap to the exact
/// identity / reflection cases.
inline constexpr double kAngleSnapTolerance = 1e-8;

enum class AngleClass { Generic, IdentityLike, ReflectionLike };

const char* to_string(AngleClass c);

/// FRFT rotation angle, classified once on construction.
class Angle {
 public:
  explicit Angle(double radians);

  double radians() const { return radians_; }
  AngleClass kind() const { return kind_; }
  bool is_generic() const { return kind_ == AngleClass::Generic; }
  /// Special class reached by snapping a value that was not an exact
  /// multiple of pi.
  bool snapped() const { return snapped_; }

  double sin() const;
  double cos() const;

  Angle operator-() const { return Angle(-radians_); }

 private:
  double radians_;
  AngleClass kind_;
  bool snapped_;
};

using KernelMatrix = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

/// Precomputed per-axis kernels for one angle and one pair of grids.
/// Immutable; safe to share between threads.
class FrftPlan {
 public:
  /// Generic angles accept any target axes. Identity-like angles need
  /// target == source; reflection-like ones additionally need every source
  /// axis to be symmetric about zero.
  FrftPlan(Angle alpha, Axes source, Axes target);

  const Angle& angle() const { return angle_; }
  const Axes& source_axes() const { return source_; }
  const Axes& target_axes() const { return target_; }

  /// Kernel for axis k, entry (j, l) = step_l * (1 - i cot a)^(1/2)
  ///   * exp(pi i (x_l^2 + u_j^2) cot a - 2 pi i x_l u_j csc a).
  /// Empty for special angles.
  const KernelMatrix& kernel(std::size_t k) const { return kernels_.at(k); }

  GridFunction apply(const GridFunction& f) const;

  /// max |(h_u / h_x) K^H K - I| for axis k: how far the discrete map is from
  /// an isometry between the weighted source and target sample spaces.
  double unitarity_defect(std::size_t k) const;

 private:
  Angle angle_;
  Axes source_;
  Axes target_;
  std::vector<KernelMatrix> kernels_;
};

/// Target grid used when the caller does not supply one. Special angles keep
/// the source grid. Generic angles get, per axis, the same sample count over
/// the widest window that the source step resolves without aliasing,
/// |sin a| / h, centred on the predicted transform-domain moment
/// cos a * x0 + sin a * w0 (snapped to the target step).
Axes default_target_axes(const GridFunction& f, const Angle& alpha);

/// Fourier transform by separable quadrature onto `target` (default:
/// default_target_axes at alpha = pi/2).
GridFunction ft_nd(const GridFunction& f, const std::optional<Axes>& target = std::nullopt);

GridFunction frft_nd(const GridFunction& f, const Angle& alpha, const std::optional<Axes>& target = std::nullopt);

/// F^{-alpha}: recovers f from its FRFT at alpha.
GridFunction inverse_frft(const GridFunction& g, const Angle& alpha, const std::optional<Axes>& target = std::nullopt);

/// Apply per-axis matrices (target_count x source_count) along each axis in
/// turn. Exposed for plan-like reuse and testing.
GridFunction apply_separable(const GridFunction& f, const std::vector<KernelMatrix>& kernels, const Axes& target);

}  // namespace nfrft
