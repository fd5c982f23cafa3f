#pragma once

// Uniformly sampled functions on N-dimensional boxes (1 <= N <= 4).
//
// Samples are stored row-major: the last axis varies fastest. Every
// integral in the library is the plain Riemann sum
//
//     integral(g) = sum_j g_j * prod_k step_k
//
// which is spectrally accurate for the Gaussian-decaying functions this
// toolkit is built around and keeps every functional linear.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "nfrft/errors.hpp"

namespace nfrft {

using Complex = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr std::size_t kMaxDims = 4;

/// One uniformly sampled coordinate axis: sample j sits at start + j * step.
class Axis {
 public:
  Axis(double start, double step, std::size_t count);

  /// `count` cell-centred samples covering [lo, hi]: step = (hi - lo) / count,
  /// first sample at lo + step / 2.
  static Axis cells(double lo, double hi, std::size_t count);
  /// Cell-centred samples on [-half_width, half_width]; symmetric about 0.
  static Axis centered(double half_width, std::size_t count);

  double start() const { return start_; }
  double step() const { return step_; }
  std::size_t count() const { return count_; }
  double coord(std::size_t j) const { return start_ + static_cast<double>(j) * step_; }
  double last() const { return coord(count_ - 1); }
  double center() const { return start_ + 0.5 * static_cast<double>(count_ - 1) * step_; }

  /// True when the sample set is mirror-symmetric about the origin.
  bool symmetric_about_zero(double rel_tol = 1e-12) const;

  friend bool operator==(const Axis&, const Axis&) = default;

 private:
  double start_;
  double step_;
  std::size_t count_;
};

using Axes = std::vector<Axis>;

/// Total number of samples on the product grid.
std::size_t sample_count(std::span<const Axis> axes);
/// Quadrature weight prod_k step_k.
double cell_volume(std::span<const Axis> axes);
/// Row-major strides (last axis has stride 1).
std::vector<std::size_t> strides(std::span<const Axis> axes);

/// Sampled function on an N-dimensional uniform grid. Immutable once built.
template <typename T>
class SampledGrid {
 public:
  using value_type = T;

  SampledGrid(Axes axes, std::vector<T> values) : axes_(std::move(axes)), values_(std::move(values)) {
    if (axes_.empty() || axes_.size() > kMaxDims) {
      throw ArgumentError("grid dimension must be between 1 and " + std::to_string(kMaxDims) + ", got " +
                          std::to_string(axes_.size()));
    }
    if (values_.size() != sample_count(axes_)) {
      throw ArgumentError("grid has " + std::to_string(values_.size()) + " values but axes describe " +
                          std::to_string(sample_count(axes_)) + " samples");
    }
    for (const T& v : values_) {
      if (!is_finite(v)) throw DataError("grid contains non-finite sample values");
    }
  }

  /// Evaluate `fn(std::span<const double> x)` at every sample point.
  template <typename Fn>
  static SampledGrid sample(const Axes& axes, Fn&& fn) {
    const std::size_t n = sample_count(axes);
    std::vector<T> values(n);
    std::vector<double> x(axes.size());
    std::vector<std::size_t> idx(axes.size(), 0);
    for (std::size_t k = 0; k < axes.size(); ++k) x[k] = axes[k].coord(0);
    for (std::size_t flat = 0; flat < n; ++flat) {
      values[flat] = static_cast<T>(fn(std::span<const double>(x)));
      // odometer increment, last axis fastest
      for (std::size_t k = axes.size(); k-- > 0;) {
        if (++idx[k] < axes[k].count()) {
          x[k] = axes[k].coord(idx[k]);
          break;
        }
        idx[k] = 0;
        x[k] = axes[k].coord(0);
      }
    }
    return SampledGrid(axes, std::move(values));
  }

  std::size_t dims() const { return axes_.size(); }
  const Axes& axes() const { return axes_; }
  const Axis& axis(std::size_t k) const { return axes_.at(k); }
  std::size_t size() const { return values_.size(); }
  std::span<const T> values() const { return values_; }
  const T& operator[](std::size_t flat) const { return values_[flat]; }

  /// Coordinates of the sample at `flat`.
  std::vector<double> point(std::size_t flat) const {
    std::vector<double> x(axes_.size());
    for (std::size_t k = axes_.size(); k-- > 0;) {
      const std::size_t n = axes_[k].count();
      x[k] = axes_[k].coord(flat % n);
      flat /= n;
    }
    return x;
  }

  /// Pointwise map into a new grid on the same axes.
  template <typename U = T, typename Fn>
  SampledGrid<U> map(Fn&& fn) const {
    std::vector<U> out(values_.size());
    std::transform(values_.begin(), values_.end(), out.begin(), fn);
    return SampledGrid<U>(axes_, std::move(out));
  }

 private:
  static bool is_finite(double v) { return std::isfinite(v); }
  static bool is_finite(const Complex& v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

  Axes axes_;
  std::vector<T> values_;
};

using GridFunction = SampledGrid<Complex>;
using RealGrid = SampledGrid<double>;

double integrate(const RealGrid& g);
Complex integrate(const GridFunction& g);

/// Discrete squared L2 norm, integrate(|f|^2).
double l2_norm_sq(const GridFunction& f);

RealGrid intensity(const GridFunction& f);  // |f|^2
RealGrid amplitude(const GridFunction& f);  // |f|

/// Interior stencil accuracy for finite differences. Both orders fall back to
/// second-order one-sided stencils on the two boundary samples.
/// Spectral differentiates the periodic trigonometric interpolant along the
/// axis; only meaningful when f is negligible at the grid edges.
enum class DiffOrder { Second = 2, Sixth = 6, Spectral = 0 };

/// Partial derivative along axis k. Needs at least three samples on that axis.
GridFunction gradient(const GridFunction& f, std::size_t k, DiffOrder order = DiffOrder::Second);
RealGrid gradient(const RealGrid& f, std::size_t k, DiffOrder order = DiffOrder::Second);

/// Im(conj(f) * df/dx_k) / (2 pi). For f = lambda * exp(2 pi i phi) this is
/// lambda^2 * dphi/dx_k, computed without extracting or unwrapping the phase.
/// Samples where f vanishes contribute 0.
RealGrid phase_density(const GridFunction& f, std::size_t k, DiffOrder order = DiffOrder::Second);

/// Fraction of ||f||^2 held by samples in the outer `shell` fraction of any
/// axis (default: outermost 5% on each side). Returns 0 for the zero function.
double tail_mass_fraction(const GridFunction& f, double shell = 0.05);

}  // namespace nfrft
