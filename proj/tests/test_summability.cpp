#include <cmath>
#include <numbers>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/summability.hpp"
#include "subord/testkit.hpp"

using namespace subord;

namespace {

const GridSpec kGrid(40, 16384);
// the Cauchy kernel loses 2/(pi L) of its mass outside the window
const GridSpec kWide(1024, std::size_t{1} << 18);

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_parameter;
}

double mass(const SampledFunction& k) {
  cplx s = 0.0;
  for (const auto& v : k.values()) s += v;
  return s.real() * k.grid().spacing();
}

SampledFunction gauss(const GridSpec& g) {
  return SampledFunction::sample(g, Side::space, [](double x) { return cplx(std::exp(-x * x)); });
}

}  // namespace

TEST_CASE("kernel closed forms") {
  const auto k2 = gw_kernel(2, kGrid);
  for (std::size_t j = 0; j < kGrid.size(); ++j) {
    const double x = kGrid.node(j);
    const double g = std::exp(-x * x / 4) / (2 * std::sqrt(std::numbers::pi));
    if (g > 1e-290) REQUIRE(std::abs(k2[j] - g) <= 1e-6 * g);
  }
  const auto k1 = gw_kernel(1, kWide);
  for (std::size_t j = 0; j < kWide.size(); ++j) {
    const double x = kWide.node(j);
    if (std::abs(x) > 10) continue;
    const double c = 1 / (std::numbers::pi * (1 + x * x));
    REQUIRE(std::abs(k1[j] - c) <= 1e-5 * c);
  }
  CHECK(code_of([] { gw_kernel(1, kGrid); }) == ErrorCode::non_convergent);
  // the dilation is eps^{-1} K(x/eps)
  const auto k2e = gw_kernel(2, kGrid, 0.5);
  const std::size_t mid = kGrid.size() / 2;
  CHECK(k2e[mid].real() == doctest::Approx(2 * k2[mid].real()));
}

TEST_CASE("kernels carry unit mass") {
  // heavy tails for small alpha: |x|^{-1-alpha} needs a long window
  for (double a : {0.5, 1.0, 2.0, 3.0, 4.0}) {
    CAPTURE(a);
    CHECK(std::abs(mass(gw_kernel(a, kWide)) - 1.0) <= 1e-3);
  }
  for (double a : {2.0, 3.0, 4.0}) CHECK(std::abs(mass(gw_kernel(a, kGrid)) - 1.0) <= 1e-3);
}

TEST_CASE("general alpha kernels are even and reproduce alpha 2") {
  const auto k3 = gw_kernel(3, kGrid);
  for (std::size_t j = 1; j < kGrid.size() / 2; j += 37) {
    REQUIRE(std::abs(k3[j] - k3[kGrid.size() - j]) <= 1e-14);
  }
  // alpha 4 has a kernel that changes sign
  double lo = 0.0;
  for (const auto& v : gw_kernel(4, kGrid).values()) lo = std::min(lo, v.real());
  CHECK(lo < -1e-4);
}

TEST_CASE("Gauss-Weierstrass mean of a Gaussian") {
  const auto f = gauss(kGrid);
  for (double eps : {1.0, 0.5, 0.1}) {
    CAPTURE(eps);
    const auto m = gw_mean(f, 2, eps);
    const double s = 1 + 4 * eps * eps;
    for (std::size_t j = 0; j < kGrid.size(); ++j) {
      const double x = kGrid.node(j);
      REQUIRE(std::abs(m[j] - std::exp(-x * x / s) / std::sqrt(s)) <= 1e-5);
    }
  }
}

TEST_CASE("constants are reproduced") {
  const auto one = SampledFunction::sample(kGrid, Side::space, [](double) { return cplx(1.0); });
  for (double a : {0.5, 1.0, 2.0, 3.0}) {
    const auto m = gw_mean(one, a, 0.1);
    for (std::size_t j = kGrid.size() / 4; j < 3 * kGrid.size() / 4; ++j) REQUIRE(std::abs(m[j] - 1.0) <= 1e-3);
  }
}

TEST_CASE("approximation errors") {
  const auto f = gauss(kGrid);
  for (double a : {1.0, 2.0}) {
    double prev = kInf;
    for (double eps : {1.0, 0.5, 0.1}) {
      const auto r = gw_error(f, a, eps, 2);
      CHECK(r.error < prev);
      CHECK(r.error >= 0.0);
      CHECK(r.alpha == a);
      prev = r.error;
    }
  }
  const GridSpec fine(40, std::size_t{1} << 16);
  const auto ff = gauss(fine);
  for (double p : {1.0, 2.0, kInf}) CHECK(gw_error(ff, 2, 1e-2, p).error <= 1e-2 * lp_norm(ff, p));
  CHECK(gw_error(SampledFunction::zero(kGrid, Side::space), 1, 0.5, 2).error == 0.0);
  CHECK(code_of([&] { gw_mean(f, 2, 1e-2); }) == ErrorCode::kernel_unresolvable);
}

TEST_CASE("frequency-side and space-side means agree") {
  for (double a : {1.0, 2.0, 3.0}) {
    // the periodic images of the Cauchy tail differ from the truncated kernel by O(1/L^2)
    const GridSpec g = a == 1.0 ? GridSpec(2048, std::size_t{1} << 19) : kGrid;
    const auto f = materialize(TestFunctionSpec::bump(2), g);
    for (double eps : {1.0, 0.5}) {
      CAPTURE(a);
      CAPTURE(eps);
      const auto m = gw_mean(f, a, eps);
      const auto c = gw_mean_by_convolution(f, a, eps);
      CHECK((m - c).max_abs() <= 1e-6 * m.max_abs());
    }
  }
}

TEST_CASE("psi") {
  const auto psi = gw_psi(1, 2);
  CHECK(psi(0.0) == cplx(0.0));
  CHECK(std::abs(psi(1.0) - 1.0) <= 1e-15);
  CHECK(std::abs(psi(1e-8) - 1e-8) <= 1e-15);
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {1, 3}, {2, 4}, {0.5, 1}}) {
    const auto p = gw_psi(a, b);
    const auto v = p.sample(kGrid);
    for (std::size_t k = 0; k < v.size(); ++k) {
      const double y = kGrid.dual_node(k);
      REQUIRE(v[k].real() >= 0.0);
      REQUIRE(v[k].real() <= 1 / (1 - std::exp(-1.0)) + 1e-9);
      if (std::abs(y) <= 1) REQUIRE(v[k].real() <= 1.0);
    }
    CHECK(std::abs(v.front() - 1.0) <= 1e-6);
    CHECK(std::abs(v.back() - 1.0) <= 1e-6);
  }
  CHECK(code_of([] { gw_psi(2, 1); }) == ErrorCode::invalid_parameter);
  CHECK(code_of([] { gw_psi(1, 1); }) == ErrorCode::invalid_parameter);
}

TEST_CASE("subordination constants converge on the default grid") {
  for (const auto& [a, b] : std::vector<std::pair<double, double>>{{1, 2}, {1, 3}, {2, 4}, {0.5, 1}}) {
    CAPTURE(a);
    CAPTURE(b);
    const auto c = gw_constant(a, b, kGrid);
    CHECK(c.converged);
    CHECK(c.total >= 1.0);
    CHECK(c.total < 3.0);
  }
  CHECK(code_of([] { gw_constant(2, 1, kGrid); }) == ErrorCode::invalid_parameter);
}

TEST_CASE("subordination of the means") {
  const auto tests = materialize_all(
      {TestFunctionSpec::gaussian(1), TestFunctionSpec::bump(2), TestFunctionSpec::bspline(4)}, kGrid);
  const std::vector<double> eps = {1, 0.5, 0.1}, ps = {1, 2, kInf};
  const auto rep = gw_verify(1, 2, tests, eps, ps, kGrid);
  CHECK(rep.passed);
  CHECK(rep.worst_ratio <= rep.constant * (1 + 1e-2));
  REQUIRE(rep.cases.size() == 27);
  CHECK(rep.cases[0].test_function == "gaussian(1)");
  CHECK(rep.cases[0].epsilon == 1.0);
  CHECK(rep.cases[1].exponents == "2");
  CHECK(rep.cases[3].epsilon == 0.5);

  std::vector<TestInput> zeros = {{"zero", SampledFunction::zero(kGrid, Side::space)}};
  CHECK(code_of([&] { gw_verify(1, 2, zeros, eps, ps, kGrid); }) == ErrorCode::all_cases_skipped);
  CHECK(code_of([&] { gw_verify(2, 1, tests, eps, ps, kGrid); }) == ErrorCode::invalid_parameter);
}
