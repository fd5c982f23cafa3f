#include <gtest/gtest.h>

#include <limits>

#include "nfrft/grid.hpp"
#include "test_support.hpp"

using namespace nfrft;
using nfrft::testing::case_a;
using nfrft::testing::reference_axes;

namespace {

GridFunction gauss1d(std::size_t n, double half = 8.0) {
  return GridFunction::sample({Axis::centered(half, n)},
                              [](std::span<const double> x) { return Complex(std::exp(-kPi * x[0] * x[0]), 0.0); });
}

}  // namespace

TEST(Axis, Validation) {
  EXPECT_THROW(Axis(0.0, 0.0, 10), ArgumentError);
  EXPECT_THROW(Axis(0.0, -1.0, 10), ArgumentError);
  EXPECT_THROW(Axis(0.0, 1.0, 1), ArgumentError);
  EXPECT_THROW(Axis(std::numeric_limits<double>::quiet_NaN(), 1.0, 4), ArgumentError);
  const Axis a(1.0, 0.5, 5);
  EXPECT_DOUBLE_EQ(a.coord(3), 2.5);
  EXPECT_DOUBLE_EQ(a.last(), 3.0);
}

TEST(Axis, CellCentredConstruction) {
  const Axis a = Axis::centered(8.0, 256);
  EXPECT_DOUBLE_EQ(a.step(), 1.0 / 16.0);
  EXPECT_DOUBLE_EQ(a.start(), -8.0 + 1.0 / 32.0);
  EXPECT_TRUE(a.symmetric_about_zero());
  EXPECT_FALSE(Axis::cells(0.0, 1.0, 10).symmetric_about_zero());
}

TEST(GridFunction, ShapeAndFiniteness) {
  const Axes axes{Axis(0.0, 1.0, 3), Axis(0.0, 1.0, 2)};
  EXPECT_THROW(GridFunction(axes, std::vector<Complex>(5)), ArgumentError);
  std::vector<Complex> v(6);
  v[2] = Complex(std::numeric_limits<double>::infinity(), 0.0);
  EXPECT_THROW(GridFunction(axes, v), DataError);
  EXPECT_THROW(GridFunction(Axes{}, {}), ArgumentError);
  EXPECT_THROW(GridFunction(Axes(5, Axis(0.0, 1.0, 2)), std::vector<Complex>(32)), ArgumentError);
}

TEST(GridFunction, RowMajorPoints) {
  const Axes axes{Axis(0.0, 1.0, 3), Axis(10.0, 2.0, 4)};
  const auto f = GridFunction::sample(axes, [](std::span<const double> x) { return Complex(x[0], x[1]); });
  EXPECT_EQ(f[5], Complex(1.0, 12.0));
  EXPECT_EQ(f.point(5), (std::vector<double>{1.0, 12.0}));
  EXPECT_EQ(strides(axes), (std::vector<std::size_t>{4, 1}));
}

TEST(Integrate, ConstantOnUnitInterval) {
  const RealGrid g({Axis::cells(0.0, 1.0, 100)}, std::vector<double>(100, 1.0));
  EXPECT_NEAR(integrate(g), 1.0, 1e-12);
}

TEST(Integrate, Gaussian1D) { EXPECT_NEAR(integrate(gauss1d(2048)).real(), 1.0, 1e-9); }

TEST(Integrate, Gaussian2D) {
  const auto f = GridFunction::sample(reference_axes(2, 512), [](std::span<const double> x) {
    return Complex(std::exp(-kPi * (x[0] * x[0] + x[1] * x[1])), 0.0);
  });
  EXPECT_NEAR(integrate(f).real(), 1.0, 1e-8);
}

TEST(Integrate, Linear) {
  const auto f = gauss1d(64);
  const auto g = GridFunction::sample(f.axes(), [](std::span<const double> x) { return Complex(x[0], 1.0); });
  const Complex a(2.0, -1.0), b(0.5, 3.0);
  std::vector<Complex> mix(f.size());
  for (std::size_t j = 0; j < f.size(); ++j) mix[j] = a * f[j] + b * g[j];
  const Complex lhs = integrate(GridFunction(f.axes(), mix));
  const Complex rhs = a * integrate(f) + b * integrate(g);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-13);
}

TEST(L2Norm, UnitChirp) { EXPECT_NEAR(l2_norm_sq(case_a().sample(reference_axes())), 1.0, 1e-6); }

TEST(L2Norm, ZeroAndScaling) {
  const Axes axes{Axis::centered(4.0, 32)};
  EXPECT_EQ(l2_norm_sq(GridFunction(axes, std::vector<Complex>(32))), 0.0);
  const auto f = gauss1d(32, 4.0);
  const Complex c(1.5, -2.0);
  const auto g = f.map([&](const Complex& v) { return c * v; });
  EXPECT_NEAR(l2_norm_sq(g), std::norm(c) * l2_norm_sq(f), 1e-14);
}

TEST(Gradient, LinearIsExact) {
  const auto f = GridFunction::sample({Axis(-1.0, 0.1, 21)}, [](std::span<const double> x) { return Complex(x[0]); });
  for (auto order : {DiffOrder::Second, DiffOrder::Sixth}) {
    const auto g = gradient(f, 0, order);
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_NEAR(g[j].real(), 1.0, 1e-12);
  }
}

TEST(Gradient, Quadratic) {
  const double h = 0.05;
  const auto f = GridFunction::sample({Axis(-1.0, h, 41)}, [](std::span<const double> x) { return Complex(x[0] * x[0]); });
  const auto g = gradient(f, 0);
  for (std::size_t j = 0; j < g.size(); ++j) {
    EXPECT_NEAR(g[j].real(), 2.0 * f.axis(0).coord(j), h * h) << j;
  }
}

TEST(Gradient, PlaneWaveFrequency) {
  const double c = 0.7;
  for (std::size_t n : {200, 400}) {
    const Axis ax = Axis::cells(-2.0, 2.0, n);
    const auto f = GridFunction::sample({ax}, [&](std::span<const double> x) { return std::polar(1.0, 2 * kPi * c * x[0]); });
    const auto g = gradient(f, 0);
    const double h = ax.step();
    for (std::size_t j = 1; j + 1 < n; ++j) {
      const Complex est = g[j] / (2.0 * kPi * Complex(0, 1) * f[j]);
      EXPECT_NEAR(est.real(), c, 4.0 * h * h) << j;
    }
  }
}

TEST(Gradient, ErrorsAndConstant) {
  const auto f = GridFunction::sample(reference_axes(2, 16), [](std::span<const double>) { return Complex(3.0, -1.0); });
  EXPECT_THROW(gradient(f, 2), ArgumentError);
  for (auto order : {DiffOrder::Second, DiffOrder::Sixth}) {
    const auto g = gradient(f, 1, order);
    for (std::size_t j = 0; j < g.size(); ++j) EXPECT_EQ(std::abs(g[j]), 0.0);
  }
  const GridFunction tiny({Axis(0.0, 1.0, 2)}, {1.0, 2.0});
  EXPECT_THROW(gradient(tiny, 0), ArgumentError);
}

TEST(Gradient, SixthOrderBeatsSecond) {
  const auto f = gauss1d(128);
  const auto exact = GridFunction::sample(f.axes(), [](std::span<const double> x) {
    return Complex(-2 * kPi * x[0] * std::exp(-kPi * x[0] * x[0]), 0.0);
  });
  double e2 = 0.0, e6 = 0.0;
  const auto g2 = gradient(f, 0, DiffOrder::Second);
  const auto g6 = gradient(f, 0, DiffOrder::Sixth);
  for (std::size_t j = 0; j < f.size(); ++j) {
    e2 = std::max(e2, std::abs(g2[j] - exact[j]));
    e6 = std::max(e6, std::abs(g6[j] - exact[j]));
  }
  EXPECT_LT(e6, e2 / 100.0);
}

TEST(Gradient, SpectralOnDecayingFunction) {
  for (std::size_t n : {127, 128}) {
    const auto f = GridFunction::sample({Axis::centered(8.0, n)}, [](std::span<const double> x) {
      return std::polar(std::exp(-kPi * x[0] * x[0]), kPi * x[0] * x[0] / 2.0);
    });
    const auto g = gradient(f, 0, DiffOrder::Spectral);
    for (std::size_t j = 0; j < n; ++j) {
      const double x = f.axis(0).coord(j);
      const Complex want = f[j] * Complex(-2 * kPi * x, kPi * x);
      EXPECT_LT(std::abs(g[j] - want), 1e-10) << n << " " << x;
    }
  }
}

TEST(Gradient, SpectralAlongInnerAxis) {
  const auto f = nfrft::testing::real_gaussian(reference_axes(2, 96, 6.0));
  const auto g = gradient(f, 1, DiffOrder::Spectral);
  for (std::size_t j = 0; j < f.size(); ++j) {
    EXPECT_LT(std::abs(g[j] - f[j] * (-2 * kPi * f.point(j)[1])), 1e-9);
  }
}

TEST(PhaseDensity, RealFunctionIsZero) {
  const auto pd = phase_density(gauss1d(256), 0);
  for (std::size_t j = 0; j < pd.size(); ++j) EXPECT_EQ(pd[j], 0.0);
}

TEST(PhaseDensity, ModulatedGaussian) {
  const double b = 0.4;
  const Axis ax = Axis::centered(8.0, 1024);
  const auto f = GridFunction::sample(
      {ax}, [&](std::span<const double> x) { return std::polar(std::exp(-kPi * x[0] * x[0]), 2 * kPi * b * x[0]); });
  const auto pd = phase_density(f, 0);
  const double h = ax.step();
  for (std::size_t j = 0; j < pd.size(); ++j) {
    const double x = ax.coord(j);
    EXPECT_NEAR(pd[j], b * std::exp(-2 * kPi * x * x), 10.0 * h * h) << j;
  }
}

TEST(PhaseDensity, ChirpFirstAxis) {
  const auto p = GaussianChirp2D::unit_norm({1.0, 0.5}, {2.0, 1.0}, {0.3, -0.2}, {0.25, -0.1});
  const auto f = p.sample(reference_axes());
  const auto pd = phase_density(f, 0);
  const double h = f.axis(0).step();
  double worst = 0.0;
  for (std::size_t j = 0; j < f.size(); ++j) {
    const auto x = f.point(j);
    const double y1 = x[0] - 0.3, y2 = x[1] + 0.2;
    const double lam2 = std::exp(2 * p.d() - y1 * y1 / 1.0 - y2 * y2 / 0.5);
    worst = std::max(worst, std::abs(pd[j] - lam2 * (y1 / 2.0 + 0.25)));
  }
  EXPECT_LT(worst, 5.0 * h * h);
}

TEST(PhaseDensity, ConjugationFlipsSign) {
  const auto f = case_a().sample(reference_axes(2, 64));
  const auto g = f.map([](const Complex& v) { return std::conj(v); });
  for (std::size_t k = 0; k < 2; ++k) {
    const auto pf = phase_density(f, k), pg = phase_density(g, k);
    for (std::size_t j = 0; j < f.size(); ++j) EXPECT_EQ(pf[j], -pg[j]);
  }
}

TEST(TailMass, Diagnostic) {
  EXPECT_LT(tail_mass_fraction(case_a().sample(reference_axes())), 1e-12);
  const auto wide = gauss1d(64, 1.0);
  EXPECT_GT(tail_mass_fraction(wide), 1e-3);
  EXPECT_THROW(tail_mass_fraction(wide, 0.7), ArgumentError);
  EXPECT_EQ(tail_mass_fraction(GridFunction({Axis::centered(1.0, 8)}, std::vector<Complex>(8))), 0.0);
}
