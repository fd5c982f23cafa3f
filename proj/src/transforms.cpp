#include "nfrft/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace nfrft {

const char* to_string(AngleClass c) {
  switch (c) {
    case AngleClass::Generic:
      return "generic";
    case AngleClass::IdentityLike:
      return "identity";
    case AngleClass::ReflectionLike:
      return "reflection";
  }
  return "unknown";
}

Angle::Angle(double radians) : radians_(radians), kind_(AngleClass::Generic), snapped_(false) {
  if (!std::isfinite(radians)) throw ArgumentError("angle must be finite");
  const double turns = std::nearbyint(radians / kPi);
  const double offset = radians - turns * kPi;
  if (std::abs(offset) < kAngleSnapTolerance) {
    const bool even = std::fmod(std::abs(turns), 2.0) == 0.0;
    kind_ = even ? AngleClass::IdentityLike : AngleClass::ReflectionLike;
    snapped_ = offset != 0.0;
  }
}

double Angle::sin() const { return std::sin(radians_); }
double Angle::cos() const { return std::cos(radians_); }

namespace {

KernelMatrix fractional_kernel(const Angle& alpha, const Axis& src, const Axis& dst) {
  const double s = alpha.sin();
  const double cot = alpha.cos() / s;
  const double csc = 1.0 / s;
  const Complex prefactor = src.step() * std::sqrt(Complex(1.0, -cot));
  KernelMatrix k(dst.count(), src.count());
  for (std::size_t j = 0; j < dst.count(); ++j) {
    const double u = dst.coord(j);
    for (std::size_t l = 0; l < src.count(); ++l) {
      const double x = src.coord(l);
      const double phase = kPi * cot * (x * x + u * u) - 2.0 * kPi * csc * x * u;
      k(j, l) = prefactor * std::polar(1.0, phase);
    }
  }
  return k;
}

KernelMatrix fourier_kernel(const Axis& src, const Axis& dst) {
  KernelMatrix k(dst.count(), src.count());
  for (std::size_t j = 0; j < dst.count(); ++j) {
    const double w = dst.coord(j);
    for (std::size_t l = 0; l < src.count(); ++l) {
      k(j, l) = src.step() * std::polar(1.0, -2.0 * kPi * src.coord(l) * w);
    }
  }
  return k;
}

void require_finite(const std::vector<Complex>& v) {
  for (const Complex& z : v) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
      throw NumericalError("transform produced non-finite values");
    }
  }
}

void require_dims(const GridFunction& f, const Axes& target) {
  if (target.size() != f.dims()) {
    throw ArgumentError("target grid has " + std::to_string(target.size()) + " axes, function has " +
                        std::to_string(f.dims()));
  }
}

}  // namespace

GridFunction apply_separable(const GridFunction& f, const std::vector<KernelMatrix>& kernels, const Axes& target) {
  require_dims(f, target);
  if (kernels.size() != f.dims()) throw ArgumentError("need one kernel per axis");

  using Block = Eigen::Matrix<Complex, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  std::vector<std::size_t> counts;
  for (const Axis& a : f.axes()) counts.push_back(a.count());
  std::vector<Complex> cur(f.values().begin(), f.values().end());

  for (std::size_t k = 0; k < f.dims(); ++k) {
    const KernelMatrix& kern = kernels[k];
    const std::size_t m_in = counts[k];
    const std::size_t m_out = target[k].count();
    if (static_cast<std::size_t>(kern.cols()) != m_in || static_cast<std::size_t>(kern.rows()) != m_out) {
      throw ArgumentError("kernel shape does not match axis " + std::to_string(k));
    }
    std::size_t outer = 1;
    std::size_t inner = 1;
    for (std::size_t i = 0; i < k; ++i) outer *= counts[i];
    for (std::size_t i = k + 1; i < counts.size(); ++i) inner *= counts[i];

    std::vector<Complex> next(outer * m_out * inner);
    if (inner == 1) {
      Eigen::Map<const Block> in(cur.data(), outer, m_in);
      Eigen::Map<Block> out(next.data(), outer, m_out);
      out.noalias() = in * kern.transpose();
    } else {
      for (std::size_t o = 0; o < outer; ++o) {
        Eigen::Map<const Block> in(cur.data() + o * m_in * inner, m_in, inner);
        Eigen::Map<Block> out(next.data() + o * m_out * inner, m_out, inner);
        out.noalias() = kern * in;
      }
    }
    cur = std::move(next);
    counts[k] = m_out;
  }
  require_finite(cur);
  return GridFunction(target, std::move(cur));
}

FrftPlan::FrftPlan(Angle alpha, Axes source, Axes target)
    : angle_(alpha), source_(std::move(source)), target_(std::move(target)) {
  if (source_.size() != target_.size()) throw ArgumentError("source and target grids differ in dimension");
  switch (angle_.kind()) {
    case AngleClass::Generic:
      for (std::size_t k = 0; k < source_.size(); ++k) {
        kernels_.push_back(fractional_kernel(angle_, source_[k], target_[k]));
      }
      break;
    case AngleClass::ReflectionLike:
      for (const Axis& a : source_) {
        if (!a.symmetric_about_zero()) {
          throw DomainError("reflection-like FRFT needs a grid symmetric about the origin");
        }
      }
      [[fallthrough]];
    case AngleClass::IdentityLike:
      if (target_ != source_) {
        throw ArgumentError("identity/reflection FRFT maps onto the source grid; resampling is not supported");
      }
      kernels_.resize(source_.size());
      break;
  }
}

GridFunction FrftPlan::apply(const GridFunction& f) const {
  if (f.axes() != source_) throw ArgumentError("function grid does not match the plan's source grid");
  switch (angle_.kind()) {
    case AngleClass::IdentityLike:
      return f;
    case AngleClass::ReflectionLike: {
      std::vector<Complex> out(f.values().rbegin(), f.values().rend());
      return GridFunction(f.axes(), std::move(out));
    }
    case AngleClass::Generic:
      break;
  }
  return apply_separable(f, kernels_, target_);
}

double FrftPlan::unitarity_defect(std::size_t k) const {
  const KernelMatrix& kern = kernels_.at(k);
  if (kern.size() == 0) return 0.0;
  const double ratio = target_[k].step() / source_[k].step();
  const KernelMatrix gram = ratio * (kern.adjoint() * kern);
  const KernelMatrix eye = KernelMatrix::Identity(gram.rows(), gram.cols());
  return (gram - eye).cwiseAbs().maxCoeff();
}

Axes default_target_axes(const GridFunction& f, const Angle& alpha) {
  if (!alpha.is_generic()) return f.axes();

  // Predicted moments: x0 from |f|^2, w0 from the phase gradient.
  const double norm = l2_norm_sq(f);
  const RealGrid dens = intensity(f);
  std::vector<double> x0(f.dims(), 0.0);
  std::vector<double> w0(f.dims(), 0.0);
  if (norm > 0.0) {
    const double vol = cell_volume(f.axes());
    for (std::size_t flat = 0; flat < f.size(); ++flat) {
      const auto x = f.point(flat);
      for (std::size_t k = 0; k < f.dims(); ++k) x0[k] += x[k] * dens[flat];
    }
    for (std::size_t k = 0; k < f.dims(); ++k) {
      x0[k] *= vol / norm;
      if (f.axis(k).count() >= 3) w0[k] = integrate(phase_density(f, k, DiffOrder::Spectral)) / norm;
    }
  }

  Axes target;
  for (std::size_t k = 0; k < f.dims(); ++k) {
    const Axis& src = f.axis(k);
    const std::size_t m = src.count();
    const double window = std::abs(alpha.sin()) / src.step();
    const double step = window / static_cast<double>(m);
    const double center = std::nearbyint((alpha.cos() * x0[k] + alpha.sin() * w0[k]) / step) * step;
    target.push_back(Axis::cells(center - 0.5 * window, center + 0.5 * window, m));
  }
  return target;
}

GridFunction ft_nd(const GridFunction& f, const std::optional<Axes>& target) {
  const Axes dst = target ? *target : default_target_axes(f, Angle(kPi / 2));
  require_dims(f, dst);
  std::vector<KernelMatrix> kernels;
  for (std::size_t k = 0; k < f.dims(); ++k) kernels.push_back(fourier_kernel(f.axis(k), dst[k]));
  return apply_separable(f, kernels, dst);
}

GridFunction frft_nd(const GridFunction& f, const Angle& alpha, const std::optional<Axes>& target) {
  Axes dst = target ? *target : default_target_axes(f, alpha);
  return FrftPlan(alpha, f.axes(), std::move(dst)).apply(f);
}

GridFunction inverse_frft(const GridFunction& g, const Angle& alpha, const std::optional<Axes>& target) {
  return frft_nd(g, -alpha, target);
}

}  // namespace nfrft
