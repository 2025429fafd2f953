#include <cmath>
#include <numbers>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/fourier.hpp"
#include "subord/testkit.hpp"

using namespace subord;

namespace {

SampledFunction gauss(const GridSpec& g, double a = 1.0) {
  return SampledFunction::sample(g, Side::space, [a](double x) { return cplx(std::exp(-a * x * x)); });
}

double max_rel_on(const SampledFunction& f, double bound, const std::function<cplx(double)>& exact,
                  bool relative_to_peak = false) {
  double err = 0.0, peak = 0.0;
  for (std::size_t i = 0; i < f.size(); ++i) {
    const double t = f.abscissa(i);
    if (std::abs(t) > bound) continue;
    const cplx e = exact(t);
    peak = std::max(peak, std::abs(e));
    err = std::max(err, relative_to_peak ? std::abs(f[i] - e) : std::abs(f[i] - e) / std::abs(e));
  }
  return relative_to_peak ? err / peak : err;
}

}  // namespace

TEST_CASE("make_grid spacing and validation") {
  CHECK(make_grid(20, 4096).spacing() == 0.009765625);
  CHECK(make_grid(1, 16).spacing() == 0.125);
  CHECK_THROWS_AS(make_grid(20, 100), Error);
  CHECK_THROWS_AS(make_grid(1, 8), Error);
  CHECK_THROWS_AS(make_grid(-1, 16), Error);
  try {
    make_grid(20, 100);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::invalid_parameter);
  }
  const auto g = make_grid(3, 64);
  CHECK(g.node(0) == -3.0);
  CHECK(g.dual_spacing() == doctest::Approx(2 * std::numbers::pi / (64 * g.spacing())));
  CHECK(g.dual_node(0) == doctest::Approx(-std::numbers::pi / g.spacing()));
}

TEST_CASE("sampled function invariants") {
  const auto g = make_grid(1, 16);
  CHECK_THROWS_AS(SampledFunction(g, std::vector<cplx>(15), Side::space), Error);
  std::vector<cplx> bad(16);
  bad[3] = std::nan("");
  CHECK_THROWS_AS(SampledFunction(g, bad, Side::space), Error);
}

TEST_CASE("forward transform of a Gaussian") {
  const auto g = make_grid(20, 4096);
  const auto fh = forward_ft(gauss(g));
  CHECK(fh.side() == Side::frequency);
  const double err = max_rel_on(fh, 10.0, [](double y) {
    return cplx(std::sqrt(std::numbers::pi) * std::exp(-y * y / 4));
  });
  CHECK(err <= 1e-6);
}

TEST_CASE("forward transform of the two-sided exponential") {
  const auto g = make_grid(40, 8192);
  const double d = g.spacing();
  const auto f = SampledFunction::sample(g, Side::space, [](double x) { return cplx(std::exp(-std::abs(x))); });
  const auto fh = forward_ft(f);
  // rectangle rule on the infinite lattice, summed in closed form
  const double discrete = max_rel_on(fh, 10.0, [d](double y) {
    return cplx(d * std::sinh(d) / (std::cosh(d) - std::cos(d * y)));
  });
  CHECK(discrete <= 1e-11);
  double abs_err = 0.0;
  for (std::size_t k = 0; k < fh.size(); ++k) {
    const double y = g.dual_node(k);
    if (std::abs(y) <= 10) abs_err = std::max(abs_err, std::abs(fh[k] - 2.0 / (1.0 + y * y)));
  }
  // the sampling floor of the kink is d^2/6
  CHECK(abs_err <= 2e-5);
  CHECK(abs_err == doctest::Approx(d * d / 6).epsilon(1e-2));
}

TEST_CASE("transform of zero is zero; linearity") {
  const auto g = make_grid(10, 1024);
  const auto z = forward_ft(SampledFunction::zero(g, Side::space));
  CHECK(z.max_abs() == 0.0);
  const auto a = gauss(g, 1.0), b = gauss(g, 3.0);
  const auto lhs = forward_ft(a * cplx(2.0, 1.0) + b * cplx(-0.5));
  const auto rhs = forward_ft(a) * cplx(2.0, 1.0) + forward_ft(b) * cplx(-0.5);
  CHECK((lhs - rhs).max_abs() <= 1e-14 * lhs.max_abs());
}

TEST_CASE("inverse transform") {
  const auto g = make_grid(20, 4096);
  const auto F = SampledFunction::sample(g, Side::frequency, [](double y) {
    return cplx(std::sqrt(std::numbers::pi) * std::exp(-y * y / 4));
  });
  const auto f = inverse_ft(F);
  CHECK(max_rel_on(f, 10.0, [](double x) { return cplx(std::exp(-x * x)); }, true) <= 1e-6);
  const auto rt = inverse_ft(forward_ft(gauss(g)));
  CHECK((rt - gauss(g)).max_abs() <= 1e-10);

  const auto g2 = make_grid(40, 16384);
  const auto E = SampledFunction::sample(g2, Side::frequency, [](double y) { return cplx(std::exp(-std::abs(y))); });
  const auto cauchy = inverse_ft(E);
  // periodization of the 1/x^2 tail limits this to about 1e-4 at L=40
  CHECK(max_rel_on(cauchy, 10.0, [](double x) { return cplx(1.0 / (std::numbers::pi * (1 + x * x))); }, true) <= 5e-3);
}

TEST_CASE("lp norms") {
  const auto g = make_grid(40, 8192);
  const auto e = SampledFunction::sample(g, Side::space, [](double x) { return cplx(std::exp(-std::abs(x))); });
  CHECK(std::abs(lp_norm(e, 1) - 2.0) <= 1e-4);
  CHECK(std::abs(lp_norm(gauss(g), 2) - std::pow(std::numbers::pi / 2, 0.25)) <= 1e-5);
  CHECK(lp_norm(gauss(g), kInf) == 1.0);
  CHECK(lp_norm(SampledFunction::zero(g, Side::space), 3) == 0.0);
  CHECK_THROWS_AS(lp_norm(e, 0.5), Error);
}

TEST_CASE("Plancherel and the convolution theorem") {
  const auto g = make_grid(20, 4096);
  const auto f = gauss(g);
  const auto fh = forward_ft(f);
  const double l = std::pow(lp_norm(fh, 2), 2), r = 2 * std::numbers::pi * std::pow(lp_norm(f, 2), 2);
  CHECK(std::abs(l - r) <= 1e-8 * r);

  const auto h = gauss(g, 2.0);
  const auto c = forward_ft(convolve(f, h));
  const auto p = forward_ft(f).multiplied(forward_ft(h).values());
  const double peak = p.max_abs();
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (std::abs(p[k]) > 1e-6 * peak) REQUIRE(std::abs(c[k] - p[k]) <= 1e-8 * std::abs(p[k]));
  }
}

TEST_CASE("convolution") {
  const auto g = make_grid(20, 4096);
  ConvolutionDiagnostics diag;
  const auto c = convolve(gauss(g), gauss(g), &diag);
  CHECK_FALSE(diag.wraparound_risk);
  CHECK(max_rel_on(c, 5.0, [](double x) { return cplx(std::sqrt(std::numbers::pi / 2) * std::exp(-x * x / 2)); }) <= 1e-6);

  const double a = 400.0;
  const auto narrow = gauss(g, a) * cplx(std::sqrt(a / std::numbers::pi));
  const auto f = gauss(g, 0.5);
  CHECK((convolve(f, narrow) - f).max_abs() <= 1e-3);
  CHECK((convolve(f, narrow) - convolve(narrow, f)).max_abs() <= 1e-14);
  CHECK(convolve(SampledFunction::zero(g, Side::space), f).max_abs() == 0.0);

  const auto wide = SampledFunction::sample(g, Side::space, [](double x) { return cplx(std::exp(-std::abs(x) / 5)); });
  convolve(wide, f, &diag);
  CHECK(diag.wraparound_risk);
  CHECK_THROWS_AS(convolve(f, gauss(make_grid(10, 4096))), Error);
}

TEST_CASE("Young's inequality on testkit pairs") {
  const auto g = make_grid(40, 16384);
  const auto suite = materialize_all(default_suite(SuitePurpose::for_means()), g);
  const double exps[][2] = {{1, 1}, {2, 1}, {1, 2}, {2, 4.0 / 3}, {1.5, 1.5}};
  int count = 0;
  for (std::size_t i = 0; i + 1 < suite.size(); ++i) {
    for (const auto& e : exps) {
      const double p = e[0], s = e[1];
      const double inv_q = 1 / p + 1 / s - 1;
      const double q = inv_q == 0 ? kInf : 1 / inv_q;
      const auto& f = suite[i].f;
      const auto& h = suite[i + 1].f;
      CHECK(lp_norm(convolve(f, h), q) <= (1 + 1e-6) * lp_norm(h, s) * lp_norm(f, p));
      ++count;
    }
  }
  CHECK(count >= 20);
}
