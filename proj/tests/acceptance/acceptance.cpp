// Acceptance runner: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "nfrft/analytic_chirp.hpp"
#include "nfrft/bounds.hpp"
#include "nfrft/moments.hpp"
#include "nfrft/optics.hpp"
#include "nfrft/transforms.hpp"

using namespace nfrft;

namespace {

// Property-suite seed.
constexpr unsigned kSeed = 20240611;

const Angle kAlpha(2 * kPi / 3);
const Angle kBeta(kPi / 6);

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    if (!ok) {
      ++failures_;
      if (failures_ <= 12) std::printf("    fail: %s\n", what.c_str());
    }
    ++checks_;
  }
  void near(double got, double want, double tol, const std::string& what) {
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: got %.15g want %.15g (tol %.1e)", what.c_str(), got, want, tol);
    expect(std::abs(got - want) <= tol, buf);
  }
  void rel(double got, double want, double tol, const std::string& what, double floor = 0.0) {
    const double scale = std::max(std::abs(want), floor);
    char buf[256];
    std::snprintf(buf, sizeof buf, "%s: got %.12g want %.12g (rel %.2e > %.1e)", what.c_str(), got, want,
                  std::abs(got - want) / scale, tol);
    expect(std::abs(got - want) <= tol * scale, buf);
  }
  bool ok() const { return failures_ == 0; }
  int checks() const { return checks_; }
  int failures() const { return failures_; }

 private:
  int checks_ = 0;
  int failures_ = 0;
};

double rel_l2(const GridFunction& f, const GridFunction& g) {
  double num = 0.0, den = 0.0;
  for (std::size_t j = 0; j < g.size(); ++j) {
    num += std::norm(f[j] - g[j]);
    den += std::norm(g[j]);
  }
  return std::sqrt(num / den);
}

Axes reference_axes() { return Axes(2, Axis::centered(8.0, 256)); }

GridFunction real_gaussian(const Axes& axes) {
  return GridFunction::sample(axes, [](std::span<const double> x) {
    double r2 = 0.0;
    for (double v : x) r2 += v * v;
    return Complex(std::exp(-kPi * r2), 0.0);
  });
}

struct PrintedValues {
  double xw, ft_sharper, ft_classical, xu, single_sharper, single_classical, uu, two_main, two_prior;
};

void analytic_case(Check& c, const GaussianChirp2D& p, const PrintedValues& v) {
  const auto r = chirp2d_moments(p);
  const auto pr = chirp2d_products(p, kAlpha, kBeta);
  const auto single = bound_frft_single(r, kAlpha);
  const auto two = bound_two_frft(r, kAlpha, kBeta);
  c.near(pr.xw, v.xw, 1e-12, "dx2 dw2");
  c.near(bound_ft_sharper(r), v.ft_sharper, 1e-12, "ft sharper bound");
  c.near(bound_ft_classical(r), v.ft_classical, 1e-12, "ft classical bound");
  c.near(pr.xu, v.xu, 1e-12, "dx2 du2");
  c.near(single.sharper, v.single_sharper, 1e-12, "single sharper bound");
  c.near(single.classical, v.single_classical, 1e-12, "single classical bound");
  c.near(pr.uu, v.uu, 1e-12, "du2 du2");
  c.near(two.main, v.two_main, 1e-12, "two-angle main bound");
  c.near(two.prior, v.two_prior, 1e-12, "two-angle prior bound");
}

bool criterion1() {
  Check c;
  analytic_case(c, named_case("paper-2d-a").chirp,
                {0.309746582899407, 0.275330295910584, 0.025330295910584, 0.372934937174556, 0.347122721932938,
                 0.018997721932938, 0.331041346184749, 0.296625059195926, 0.046625059195926});
  return c.ok();
}

bool criterion2() {
  Check c;
  const auto p = named_case("paper-2d-b").chirp;
  analytic_case(c, p,
                {0.275330295910584, 0.275330295910584, 0.025330295910584, 0.456497721932938, 0.456497721932938,
                 0.018997721932938, 0.373795204665280, 0.373795204665280, 0.123795204665280});
  const auto r = chirp2d_moments(p);
  const auto pr = chirp2d_products(p, kAlpha, kBeta);
  c.near(pr.xw - bound_ft_sharper(r), 0.0, 1e-12, "equality dx2 dw2");
  c.near(pr.xu - bound_frft_single(r, kAlpha).sharper, 0.0, 1e-12, "equality dx2 du2");
  c.near(pr.uu - bound_two_frft(r, kAlpha, kBeta).main, 0.0, 1e-12, "equality du2 du2");
  return c.ok();
}

bool criterion3() {
  Check c;
  for (const char* id : {"paper-2d-a", "paper-2d-b"}) {
    const std::string tag(id);
    const auto p = named_case(id).chirp;
    const auto q = verify(p.sample(reference_axes()), {{kAlpha, kBeta}}).front();
    const auto& m = q.source;
    const auto a = chirp2d_moments(p);
    const double scale = std::sqrt(a.spread_x * a.spread_w);
    c.rel(m.norm_sq, a.norm_sq, 1e-3, tag + " norm_sq");
    for (int k = 0; k < 2; ++k) {
      c.rel(m.x0[k], a.x0[k], 1e-3, tag + " x0", scale);
      c.rel(m.w0[k], a.w0[k], 1e-3, tag + " w0", scale);
    }
    c.rel(m.spread_x, a.spread_x, 1e-3, tag + " spread_x");
    c.rel(m.spread_w, a.spread_w, 1e-3, tag + " spread_w");
    c.rel(m.cov, a.cov, 1e-3, tag + " cov", scale);
    c.rel(m.abs_cov, a.abs_cov, 1e-3, tag + " abs_cov");
    c.rel(q.spread_u_alpha, chirp2d_frft_spread(p, kAlpha), 1e-3, tag + " spread_u alpha");
    c.rel(q.spread_u_beta, chirp2d_frft_spread(p, kBeta), 1e-3, tag + " spread_u beta");

    const auto want = evaluate_bounds(a, kAlpha, kBeta, chirp2d_frft_spread(p, kAlpha), chirp2d_frft_spread(p, kBeta));
    for (std::size_t i = 0; i < want.bounds.size(); ++i) {
      c.rel(q.bounds[i].value, want.bounds[i].value, 1e-3, tag + " " + want.bounds[i].name + " value");
      c.rel(q.bounds[i].product, want.bounds[i].product, 1e-3, tag + " " + want.bounds[i].name + " product");
    }
    c.expect(!q.any_violation(), tag + " no violation flag");
  }
  return c.ok();
}

bool criterion4() {
  Check c;
  const Axes axes = reference_axes();
  const std::vector<std::pair<std::string, GridFunction>> inputs{
      {"case A", named_case("paper-2d-a").chirp.sample(axes)},
      {"case B", named_case("paper-2d-b").chirp.sample(axes)},
      {"real Gaussian", real_gaussian(axes)}};
  for (const auto& [tag, f] : inputs) {
    c.expect(rel_l2(frft_nd(f, Angle(kPi / 2)), ft_nd(f)) <= 1e-6, tag + " quarter turn vs FT");
    const double n = l2_norm_sq(f);
    for (double a : {kPi / 6, kPi / 4, 2 * kPi / 3, 5 * kPi / 6}) {
      const Angle alpha(a);
      const GridFunction g = frft_nd(f, alpha);
      c.rel(l2_norm_sq(g), n, 1e-5, tag + " Parseval");
      c.expect(rel_l2(inverse_frft(g, alpha, f.axes()), f) <= 1e-5, tag + " round trip");
    }
    c.rel(l2_norm_sq(ft_nd(f)), n, 1e-5, tag + " Parseval FT");
  }
  return c.ok();
}

bool criterion5() {
  Check c;
  for (const char* id : {"paper-2d-a", "paper-2d-b"}) {
    const std::string tag(id);
    const auto f = named_case(id).chirp.sample(reference_axes());
    const auto m = moment_report(f);
    for (std::size_t k = 0; k < 2; ++k) {
      const auto s = freq_spread_about(f, m.w0[k], k);
      c.rel(s.time_side(), s.ft_side, 1e-4, tag + " frequency spread decomposition");
    }
    for (double a : {kPi / 6, kPi / 4, 2 * kPi / 3, 5 * kPi / 6}) {
      const auto r = moment_report(f, Angle(a));
      c.expect(std::abs(spread_relation_residual(r)) <= 1e-4 * *r.spread_u_alpha, tag + " spread relation");
    }
  }
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> par(0.3, 3.0), ang(-kPi, kPi);
  for (int i = 0; i < 50; ++i) {
    const auto p = GaussianChirp2D::unit_norm({par(rng), par(rng)}, {par(rng), par(rng)});
    const auto r = chirp2d_moments(p);
    const Angle a(ang(rng)), b(ang(rng));
    c.expect(std::abs(product_identity_check(r, a, b)) <= 1e-10, "product identity");
  }
  return c.ok();
}

bool criterion6() {
  Check c;
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> par(0.3, 3.0), ang(kPi / 6, 5 * kPi / 6);
  std::size_t max_points = 0;
  for (int draw = 0; draw < 20; ++draw) {
    const auto p = GaussianChirp2D::unit_norm({par(rng), par(rng)}, {par(rng), par(rng)});
    std::vector<std::pair<Angle, Angle>> pairs;
    std::vector<Angle> all;
    for (int i = 0; i < 10; ++i) {
      pairs.emplace_back(Angle(ang(rng)), Angle(ang(rng)));
      all.push_back(pairs.back().first);
      all.push_back(pairs.back().second);
    }
    const Axes axes = plan_chirp_axes(p, all, 6.0, 1024);
    max_points = std::max({max_points, axes[0].count(), axes[1].count()});
    const auto reports = verify(p.sample(axes), pairs);
    const std::string tag = "draw " + std::to_string(draw);
    for (const auto& r : reports) {
      for (const auto& e : r.bounds) {
        if (!e.valid) continue;
        c.expect(e.slack >= -1e-3 * e.product, tag + " " + e.name + " slack");
      }
      c.expect(!r.any_violation(), tag + " violation flag");
    }

    const auto an = chirp2d_moments(p);
    c.expect(bound_ft_sharper(an) >= bound_ft_classical(an), tag + " sharper >= classical");
    // partner draw with matched zeta/eps ratios has cov = 0
    const auto z = GaussianChirp2D::unit_norm(p.zeta(), {p.eps()[0], p.eps()[0] * p.zeta()[1] / p.zeta()[0]});
    const auto zr = chirp2d_moments(z);
    for (const auto& [a, b] : pairs) {
      const auto two = bound_two_frft(zr, a, b);
      c.expect(two.main >= two.prior, tag + " main >= prior when cov = 0");
      const auto ab = bound_two_frft(an, a, b);
      c.expect(std::abs(an.cov) > 0 || ab.main >= ab.prior, tag + " main >= prior");
    }
  }
  std::printf("    (largest planned axis: %zu points)\n", max_points);
  return c.ok();
}

bool criterion7() {
  Check c;
  const std::vector<std::vector<EtaClass>> smooth{
      {EtaClass::Plus, EtaClass::Minus}, {EtaClass::Minus, EtaClass::Minus}, {EtaClass::Plus, EtaClass::Plus}};
  for (const auto& eta : smooth) {
    const auto p = ExtremalChirpND::unit_norm({0.2, -0.3}, {0.1, 0.25}, 1.2, 1.5, eta);
    const auto r = verify(p.sample(reference_axes()), {{kAlpha, kBeta}}).front();
    const std::string tag = std::string(to_string(eta[0])) + to_string(eta[1]);
    const auto& s = r.entry("ft_sharper");
    const auto& m = r.entry("two_frft_main");
    c.expect(std::abs(s.slack) <= 1e-3 * s.product, tag + " time-frequency equality");
    c.expect(std::abs(m.slack) <= 1e-3 * m.product, tag + " two-angle equality");
  }

  // mixed partitions with a sign-switching dimension, about the reference point (a, b)
  const std::vector<std::vector<EtaClass>> mixed{{EtaClass::Plus, EtaClass::Sgn}, {EtaClass::NegSgn, EtaClass::Minus}};
  for (const auto& eta : mixed) {
    const std::vector<double> a{0.2, -0.3}, b{0.1, 0.25};
    const auto p = ExtremalChirpND::unit_norm(a, b, 1.2, 1.5, eta);
    const auto q = reference_report(p.sample(reference_axes()), a, b);
    const double product = q.spread_x * q.spread_w;
    const double slack = product - bound_ft_sharper(q);
    const std::string tag = std::string(to_string(eta[0])) + "," + to_string(eta[1]);
    c.expect(std::abs(slack) <= 1e-3 * product, tag + " reference-point equality");
    const auto an = extremal_reference_moments(p);
    c.rel(product, an.spread_x * an.spread_w, 1e-3, tag + " reference product vs closed form");
    const auto mc = moment_report(p.sample(reference_axes()));
    std::printf("    %s moment-centred relative slack %.4f (informational)\n", tag.c_str(),
                (mc.spread_x * mc.spread_w - bound_ft_sharper(mc)) / (mc.spread_x * mc.spread_w));
  }

  // orthant phases: continuity-preserving changes leave every field unchanged
  const auto base = ExtremalChirpND::unit_norm({0.2, -0.3}, {0.1, 0.25}, 1.2, 1.5, {EtaClass::Sgn, EtaClass::Sgn});
  const std::vector<std::map<std::string, double>> phase_sets{
      {{"++", 0.37}, {"+-", 0.37}, {"-+", 0.37}, {"--", 0.37}},
      {{"++", 0.0}, {"+-", 1.0}, {"-+", -2.0}, {"--", 3.0}},
      {{"++", 0.61}, {"+-", 2.61}, {"-+", -0.39}, {"--", 1.61}}};
  const auto ref_an = extremal_moments(base);
  const auto ref_q = moment_report(base.sample(reference_axes()), kAlpha);
  auto same_bits = [](const MomentReport& x, const MomentReport& y) {
    return x.norm_sq == y.norm_sq && x.x0 == y.x0 && x.w0 == y.w0 && x.spread_x == y.spread_x &&
           x.spread_w == y.spread_w && x.cov == y.cov && x.abs_cov == y.abs_cov;
  };
  for (const auto& ph : phase_sets) {
    const auto p = base.with_phases(ph);
    c.expect(p.phase_continuous(), "phase set is continuity-preserving");
    c.expect(same_bits(extremal_moments(p), ref_an), "analytic report bitwise equal");
    c.expect(same_bits(extremal_reference_moments(p), extremal_reference_moments(base)),
             "analytic reference report bitwise equal");
    const auto q = moment_report(p.sample(reference_axes()), kAlpha);
    c.near(q.norm_sq, ref_q.norm_sq, 1e-12, "quadrature norm_sq");
    for (int k = 0; k < 2; ++k) {
      c.near(q.x0[k], ref_q.x0[k], 1e-12, "quadrature x0");
      c.near(q.w0[k], ref_q.w0[k], 1e-12, "quadrature w0");
      c.near(q.u0_alpha[k], ref_q.u0_alpha[k], 1e-12, "quadrature u0");
    }
    c.near(q.spread_x, ref_q.spread_x, 1e-12, "quadrature spread_x");
    c.near(q.spread_w, ref_q.spread_w, 1e-12, "quadrature spread_w");
    c.near(*q.spread_u_alpha, *ref_q.spread_u_alpha, 1e-12, "quadrature spread_u");
    c.near(q.cov, ref_q.cov, 1e-12, "quadrature cov");
    c.near(q.abs_cov, ref_q.abs_cov, 1e-12, "quadrature abs_cov");
  }
  return c.ok();
}

bool criterion8() {
  Check c;
  std::vector<MomentReport> reports{chirp2d_moments(named_case("paper-2d-a").chirp),
                                    chirp2d_moments(named_case("paper-2d-b").chirp)};
  std::mt19937_64 rng(kSeed);
  std::uniform_real_distribution<double> par(0.3, 3.0), geo(0.1, 5.0);
  for (int i = 0; i < 10; ++i) {
    reports.push_back(chirp2d_moments(GaussianChirp2D::unit_norm({par(rng), par(rng)}, {par(rng), par(rng)})));
  }
  for (const auto& r : reports) {
    for (int i = 0; i < 5; ++i) {
      const auto s = OpticalSetup::fresnel(geo(rng), geo(rng));
      const double want = bound_frft_single(r, s.angle()).sharper / r.spread_x;
      c.near(optical_spread_floor(s, r), want, 1e-12 * std::max(1.0, want), "fresnel floor");
    }
  }
  auto rejects = [](double s, double d, double z) {
    try {
      OpticalSetup::lens(s, d, z);
    } catch (const ArgumentError&) {
      return true;
    } catch (const DomainError&) {
      return true;
    }
    return false;
  };
  c.expect(rejects(1.0, 0.5, 0.9), "lens rejects wrong focal length");
  c.expect(rejects(1.0, 0.5, 0.2679 * 1.001), "lens rejects a slightly wrong focal length");
  c.expect(rejects(1.0, 1.5, 1.0), "lens rejects d > s^2");
  c.expect(!rejects(1.0, 0.5, std::tan(std::asin(0.5) / 2)), "lens accepts a consistent triple");
  return c.ok();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<bool()>>> criteria{
      {"analytic reproduction, case A", criterion1},
      {"analytic reproduction, case B with equalities", criterion2},
      {"quadrature matches analytic at 256^2", criterion3},
      {"transform correctness", criterion4},
      {"identity residuals", criterion5},
      {"property suite, no bound violated", criterion6},
      {"extremal equality and phase invariance", criterion7},
      {"optics consistency", criterion8}};
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
      ok = criteria[i].second();
    } catch (const std::exception& e) {
      std::printf("    exception: %s\n", e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::printf("%s criterion %zu: %s (%.1f s)\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs);
    std::fflush(stdout);
    if (!ok) ++failed;
  }
  return failed == 0 ? 0 : 1;
}
