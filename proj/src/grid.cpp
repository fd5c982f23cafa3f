#include "nfrft/grid.hpp"

#include <numeric>

#include <Eigen/Dense>

namespace nfrft {

Axis::Axis(double start, double step, std::size_t count) : start_(start), step_(step), count_(count) {
  if (!std::isfinite(start) || !std::isfinite(step) || !(step > 0.0)) {
    throw ArgumentError("axis step must be finite and > 0");
  }
  if (count < 2) throw ArgumentError("axis needs at least 2 samples");
}

Axis Axis::cells(double lo, double hi, std::size_t count) {
  if (count < 2 || !(hi > lo)) throw ArgumentError("Axis::cells needs hi > lo and count >= 2");
  const double step = (hi - lo) / static_cast<double>(count);
  return Axis(lo + 0.5 * step, step, count);
}

Axis Axis::centered(double half_width, std::size_t count) {
  if (!(half_width > 0.0)) throw ArgumentError("half width must be > 0");
  return cells(-half_width, half_width, count);
}

bool Axis::symmetric_about_zero(double rel_tol) const {
  return std::abs(start_ + last()) <= rel_tol * std::max(std::abs(start_), step_);
}

std::size_t sample_count(std::span<const Axis> axes) {
  std::size_t n = 1;
  for (const Axis& a : axes) n *= a.count();
  return n;
}

double cell_volume(std::span<const Axis> axes) {
  double v = 1.0;
  for (const Axis& a : axes) v *= a.step();
  return v;
}

std::vector<std::size_t> strides(std::span<const Axis> axes) {
  std::vector<std::size_t> s(axes.size(), 1);
  for (std::size_t k = axes.size(); k-- > 1;) s[k - 1] = s[k] * axes[k].count();
  return s;
}

double integrate(const RealGrid& g) {
  double sum = 0.0;
  for (double v : g.values()) sum += v;
  return sum * cell_volume(g.axes());
}

Complex integrate(const GridFunction& g) {
  Complex sum = 0.0;
  for (const Complex& v : g.values()) sum += v;
  return sum * cell_volume(g.axes());
}

double l2_norm_sq(const GridFunction& f) { return integrate(intensity(f)); }

RealGrid intensity(const GridFunction& f) {
  return f.map<double>([](const Complex& v) { return std::norm(v); });
}

RealGrid amplitude(const GridFunction& f) {
  return f.map<double>([](const Complex& v) { return std::abs(v); });
}

namespace {

template <typename T>
SampledGrid<T> differentiate(const SampledGrid<T>& f, std::size_t k, DiffOrder order) {
  if (k >= f.dims()) {
    throw ArgumentError("gradient axis " + std::to_string(k) + " out of range for " + std::to_string(f.dims()) +
                        "-dimensional grid");
  }
  const std::size_t m = f.axis(k).count();
  if (m < 3) throw ArgumentError("gradient needs at least 3 samples along the axis");
  const double h = f.axis(k).step();
  const std::size_t stride = strides(f.axes())[k];
  const std::size_t outer = f.size() / (m * stride);
  const bool sixth = order == DiffOrder::Sixth;

  auto vals = f.values();
  std::vector<T> out(f.size());
  if (order == DiffOrder::Spectral) {
    // periodic sinc interpolant, differentiated; lines are batched as columns
    using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
    const double scale = kPi / (static_cast<double>(m) * h);
    Mat d = Mat::Zero(static_cast<Eigen::Index>(m), static_cast<Eigen::Index>(m));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t l = 0; l < m; ++l) {
        if (j == l) continue;
        const double diff = static_cast<double>(j) - static_cast<double>(l);
        const double sign = ((j + l) % 2 == 0) ? 1.0 : -1.0;
        const double t = kPi * diff / static_cast<double>(m);
        const double v = m % 2 == 0 ? std::cos(t) / std::sin(t) : 1.0 / std::sin(t);
        d(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) = T(sign * scale * v);
      }
    }
    const auto lines = static_cast<Eigen::Index>(outer * stride);
    Mat x(static_cast<Eigen::Index>(m), lines);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < stride; ++i) {
        const auto c = static_cast<Eigen::Index>(o * stride + i);
        for (std::size_t j = 0; j < m; ++j) x(static_cast<Eigen::Index>(j), c) = vals[o * m * stride + i + j * stride];
      }
    }
    const Mat y = d * x;
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t i = 0; i < stride; ++i) {
        const auto c = static_cast<Eigen::Index>(o * stride + i);
        for (std::size_t j = 0; j < m; ++j) out[o * m * stride + i + j * stride] = y(static_cast<Eigen::Index>(j), c);
      }
    }
    return SampledGrid<T>(f.axes(), std::move(out));
  }
  for (std::size_t o = 0; o < outer; ++o) {
    for (std::size_t i = 0; i < stride; ++i) {
      const std::size_t base = o * m * stride + i;
      auto at = [&](std::size_t j) -> const T& { return vals[base + j * stride]; };
      for (std::size_t j = 0; j < m; ++j) {
        T d;
        if (j == 0) {
          d = (-3.0 * at(0) + 4.0 * at(1) - at(2)) / (2.0 * h);
        } else if (j == m - 1) {
          d = (3.0 * at(m - 1) - 4.0 * at(m - 2) + at(m - 3)) / (2.0 * h);
        } else if (sixth && j >= 3 && j + 3 < m) {
          d = (-at(j - 3) + 9.0 * at(j - 2) - 45.0 * at(j - 1) + 45.0 * at(j + 1) - 9.0 * at(j + 2) + at(j + 3)) /
              (60.0 * h);
        } else if (sixth && j >= 2 && j + 2 < m) {
          d = (at(j - 2) - 8.0 * at(j - 1) + 8.0 * at(j + 1) - at(j + 2)) / (12.0 * h);
        } else {
          d = (at(j + 1) - at(j - 1)) / (2.0 * h);
        }
        out[base + j * stride] = d;
      }
    }
  }
  return SampledGrid<T>(f.axes(), std::move(out));
}

}  // namespace

GridFunction gradient(const GridFunction& f, std::size_t k, DiffOrder order) { return differentiate(f, k, order); }

RealGrid gradient(const RealGrid& f, std::size_t k, DiffOrder order) { return differentiate(f, k, order); }

RealGrid phase_density(const GridFunction& f, std::size_t k, DiffOrder order) {
  const GridFunction df = gradient(f, k, order);
  std::vector<double> out(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) {
    out[j] = (std::conj(f[j]) * df[j]).imag() / (2.0 * kPi);
  }
  return RealGrid(f.axes(), std::move(out));
}

double tail_mass_fraction(const GridFunction& f, double shell) {
  if (!(shell > 0.0 && shell < 0.5)) throw ArgumentError("tail shell fraction must be in (0, 0.5)");
  const std::size_t n_dims = f.dims();
  std::vector<std::size_t> width(n_dims);
  for (std::size_t k = 0; k < n_dims; ++k) {
    const auto m = f.axis(k).count();
    width[k] = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(shell * static_cast<double>(m))));
  }
  double total = 0.0;
  double tail = 0.0;
  std::vector<std::size_t> idx(n_dims, 0);
  for (std::size_t flat = 0; flat < f.size(); ++flat) {
    const double p = std::norm(f[flat]);
    total += p;
    bool outer = false;
    for (std::size_t k = 0; k < n_dims; ++k) {
      const auto m = f.axis(k).count();
      if (idx[k] < width[k] || idx[k] >= m - width[k]) {
        outer = true;
        break;
      }
    }
    if (outer) tail += p;
    for (std::size_t k = n_dims; k-- > 0;) {
      if (++idx[k] < f.axis(k).count()) break;
      idx[k] = 0;
    }
  }
  return total > 0.0 ? tail / total : 0.0;
}

}  // namespace nfrft
