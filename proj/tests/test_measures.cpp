#include <cmath>
#include <numbers>

#include "doctest.h"
#include "subord/errors.hpp"
#include "subord/measures.hpp"
#include "subord/summability.hpp"

using namespace subord;

namespace {

const GridSpec kGrid(40, 16384);

SampledFunction gauss(const GridSpec& g, double a = 1.0) {
  return SampledFunction::sample(g, Side::space, [a](double x) { return cplx(std::exp(-a * x * x)); });
}

ErrorCode code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::invalid_parameter;
}

}  // namespace

TEST_CASE("total variation") {
  CHECK(total_variation(FiniteMeasure::unit_atom()) == 1.0);
  CHECK(total_variation(FiniteMeasure({{0, 1.0}, {1, -1.0}})) == 2.0);
  const auto cauchy = SampledFunction::sample(kGrid, Side::space, [](double x) {
    return cplx(1.0 / (std::numbers::pi * (1 + x * x)));
  });
  // the grid misses 2/(pi L) of the mass; add it back from the known tail
  const double tv = total_variation(FiniteMeasure::with_density(cauchy));
  CHECK(std::abs(tv + 2.0 / (std::numbers::pi * kGrid.half_length()) - 1.0) <= 1e-3);
  CHECK_THROWS_AS(FiniteMeasure({{0, 1.0}, {0, 2.0}}), Error);
}

TEST_CASE("measure transforms") {
  const auto one = measure_ft(FiniteMeasure::unit_atom(), kGrid).sample(kGrid);
  for (const auto& v : one) REQUIRE(v == cplx(1.0));

  const auto shifted = measure_ft(FiniteMeasure({{0.7, 1.0}}), kGrid);
  for (std::size_t k = 0; k < kGrid.size(); k += 97) {
    const double y = kGrid.dual_node(k);
    REQUIRE(std::abs(std::abs(shifted(y)) - 1.0) <= 1e-15);
    REQUIRE(std::abs(shifted(y) - std::exp(cplx(0, -0.7 * y))) <= 1e-12);
  }

  const auto e = SampledFunction::sample(kGrid, Side::space, [](double x) { return cplx(std::exp(-std::abs(x))); });
  const FiniteMeasure mu({{0.0, cplx(0.5, 0.5)}}, e);
  const auto m = measure_ft(mu, kGrid).sample(kGrid);
  const double tv = total_variation(mu);
  for (std::size_t k = 0; k < m.size(); ++k) {
    const double y = kGrid.dual_node(k);
    REQUIRE(std::abs(m[k]) <= tv + 1e-8);
    if (std::abs(y) < 10) REQUIRE(std::abs(m[k] - cplx(0.5, 0.5) - 2.0 / (1 + y * y)) <= 2e-5);
  }
  CHECK(code_of([&] { measure_ft(mu, make_grid(20, 16384)); }) == ErrorCode::grid_mismatch);
}

TEST_CASE("convolution with measures") {
  const auto f = gauss(kGrid);
  CHECK((convolve_with_measure(f, FiniteMeasure::unit_atom()) - f).max_abs() == 0.0);

  const double c = 64 * kGrid.spacing();
  const auto moved = convolve_with_measure(f, FiniteMeasure({{c, 1.0}}), ShiftMode::exact);
  const auto expect = SampledFunction::sample(kGrid, Side::space, [c](double x) { return cplx(std::exp(-(x - c) * (x - c))); });
  CHECK((moved - expect).max_abs() <= 1e-12);

  MeasureConvolutionDiagnostics diag;
  convolve_with_measure(f, FiniteMeasure({{0.3 * kGrid.spacing(), 1.0}}), ShiftMode::snap, &diag);
  CHECK(diag.max_snap_error == doctest::Approx(0.3 * kGrid.spacing()));
  CHECK(code_of([&] {
          convolve_with_measure(f, FiniteMeasure({{0.3 * kGrid.spacing(), 1.0}}), ShiftMode::exact);
        }) == ErrorCode::atom_off_grid);

  const auto k = gauss(kGrid, 3.0);
  CHECK((convolve_with_measure(f, FiniteMeasure::with_density(k)) - convolve(f, k)).max_abs() <= 1e-15);

  // |f * mu|_p <= |mu| |f|_p
  const FiniteMeasure mu({{0.0, 1.0}, {64 * kGrid.spacing(), cplx(0, -2)}}, k);
  const auto out = convolve_with_measure(f, mu);
  for (double p : {1.0, 2.0, kInf}) CHECK(lp_norm(out, p) <= total_variation(mu) * lp_norm(f, p) * (1 + 1e-8));
}

TEST_CASE("transform of a measure convolution is the product") {
  const auto a = gauss(kGrid, 1.0), b = gauss(kGrid, 2.0);
  const auto conv = convolve_with_measure(a, FiniteMeasure::with_density(b));
  const auto lhs = measure_ft(FiniteMeasure::with_density(conv), kGrid).sample(kGrid);
  const auto ra = measure_ft(FiniteMeasure::with_density(a), kGrid).sample(kGrid);
  const auto rb = measure_ft(FiniteMeasure::with_density(b), kGrid).sample(kGrid);
  double peak = 0.0;
  for (std::size_t k = 0; k < lhs.size(); ++k) peak = std::max(peak, std::abs(ra[k] * rb[k]));
  for (std::size_t k = 0; k < lhs.size(); ++k) {
    const cplx p = ra[k] * rb[k];
    if (std::abs(p) > 1e-6 * peak) REQUIRE(std::abs(lhs[k] - p) <= 1e-6 * std::abs(p));
  }
}

TEST_CASE("Wiener norm calibration") {
  const auto e = wiener_norm_estimate(registry::exp_decay(1), kGrid);
  CHECK(e.converged);
  CHECK(std::abs(e.c_infinity) <= 1e-12);
  CHECK(std::abs(e.total - 1.0) <= 1e-3);
  CHECK(e.total == doctest::Approx(std::abs(e.c_infinity) + e.density_l1 + e.tail_bound));

  const auto plain = wiener_norm_estimate(registry::exp_decay(1).without_expansion(), kGrid);
  CHECK(plain.converged);
  CHECK(std::abs(plain.total - 1.0) <= 1e-3);

  const auto one = wiener_norm_estimate(registry::constant(1.0), kGrid);
  CHECK(one.c_infinity == cplx(1.0));
  CHECK(one.density_l1 == 0.0);
  CHECK(one.total == 1.0);

  const auto gs = wiener_norm_estimate(registry::gaussian(1), kGrid);
  CHECK(std::abs(gs.total - std::sqrt(std::numbers::pi)) <= 1e-4);
}

TEST_CASE("closed-form densities have the expected mass") {
  // lorentzian(a) is the transform of e^{-a|x|}: mass 2/a
  CHECK(std::abs(wiener_norm_estimate(registry::lorentzian(2), kGrid).density_l1 - 1.0) <= 1e-3);
  CHECK(std::abs(wiener_norm_estimate(registry::gaussian(0.5), kGrid).density_l1 - std::sqrt(2 * std::numbers::pi)) <= 1e-3);
  // e^{-a|y|} is the transform of the Poisson kernel, mass 1 for every a
  CHECK(std::abs(wiener_norm_estimate(registry::exp_decay(0.5), kGrid).total - 1.0) <= 1e-3);
}

TEST_CASE("Wiener norm is subadditive on the registry") {
  const std::vector<Multiplier> ms = {registry::exp_decay(1), registry::gaussian(1), registry::lorentzian(1),
                                      registry::constant(0.5), registry::exp_decay(2)};
  WienerOptions once;
  once.refine = false;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    for (std::size_t j = i + 1; j < ms.size(); ++j) {
      const double sum = wiener_norm_estimate(ms[i] + ms[j], kGrid, once).total;
      const double a = wiener_norm_estimate(ms[i], kGrid, once).total;
      const double b = wiener_norm_estimate(ms[j], kGrid, once).total;
      CHECK(sum <= a + b + 1e-3);
    }
  }
}

TEST_CASE("inconsistent limits are rejected") {
  const auto step = Multiplier::registry("tanh", {}, [](double y) { return cplx(std::tanh(y)); });
  CHECK(code_of([&] { wiener_norm_estimate(step, kGrid); }) == ErrorCode::inconsistent_limit);
}

TEST_CASE("refinement failure is reported, not hidden") {
  // the indicator of [-1, 1] has a sinc density whose L1 norm grows like log L
  const auto box = Multiplier::registry("box", {}, [](double y) { return cplx(std::abs(y) < 1 ? 1.0 : 0.0); });
  const auto e = wiener_norm_estimate(box, kGrid);
  CHECK_FALSE(e.converged);
  CHECK(e.refined_total > e.total);
  CHECK(code_of([&] { require_converged(e, "box"); }) == ErrorCode::non_convergent);
}

TEST_CASE("sampled multipliers") {
  const auto gv = SampledFunction::sample(kGrid, Side::frequency, [](double y) {
    return cplx(std::sqrt(std::numbers::pi) * std::exp(-y * y / 4));
  });
  const auto g = Multiplier::sampled("gaussian", gv);
  CHECK_FALSE(g.resamplable());
  const auto eg = wiener_norm_estimate(g, kGrid);
  CHECK(eg.converged);
  CHECK(std::abs(eg.total - std::sqrt(std::numbers::pi)) <= 1e-6);
  CHECK(code_of([&] { g.sample(kGrid.refined()); }) == ErrorCode::grid_mismatch);

  // a 1/x^2 density tail cannot be oversampled away: the estimate stays an
  // upper bound within O(1/L) but fails the half-window cross-check
  const auto ev = SampledFunction::sample(kGrid, Side::frequency, [](double y) { return cplx(std::exp(-std::abs(y))); });
  const auto e = wiener_norm_estimate(Multiplier::sampled("exp", ev), kGrid);
  CHECK(e.total >= 1.0);
  CHECK(e.total <= 1.0 + 2.0 / kGrid.half_length());
}

TEST_CASE("Carlson-type bound") {
  for (const auto& m : {registry::exp_decay(1), registry::gaussian(1)}) {
    const auto e = wiener_norm_estimate(m, kGrid);
    const auto b = carlson_sufficient_bound(m, kGrid);
    REQUIRE(b.has_value());
    CHECK(e.density_l1 + e.tail_bound <= *b * (1 + 1e-2));
  }
  CHECK(*carlson_sufficient_bound(registry::exp_decay(1), kGrid) == doctest::Approx(2 * std::numbers::pi).epsilon(1e-3));
  CHECK(*carlson_sufficient_bound(registry::gaussian(1), kGrid) >= std::sqrt(std::numbers::pi));
  CHECK(*carlson_sufficient_bound(registry::constant(3.0), kGrid) == 0.0);
  // |y|^{-1/4} near the origin is not in L2 + H1: the energy never settles
  const auto rough = Multiplier::registry("rough", {}, [](double y) {
    return cplx(std::abs(y) < 1e-300 ? 0.0 : std::exp(-std::abs(y)) * std::pow(std::abs(y), -0.45));
  });
  CHECK_FALSE(carlson_sufficient_bound(rough, kGrid).has_value());
}

TEST_CASE("density Lp norms") {
  WienerOptions opt;
  opt.known_limit = cplx(0.0);
  // density of sqrt(pi) e^{-y^2/4} is e^{-x^2}
  const auto g = registry::gaussian(1);
  CHECK(std::abs(density_lp_norm(g, kGrid, 1, opt) - std::sqrt(std::numbers::pi)) <= 1e-6);
  CHECK(std::abs(density_lp_norm(g, kGrid, 2, opt) - std::pow(std::numbers::pi / 2, 0.25)) <= 1e-6);
  CHECK(std::abs(density_lp_norm(g, kGrid, kInf, opt) - 1.0) <= 1e-9);
  // Plancherel: ||g||_2 = ||psi||_2 / sqrt(2 pi)
  const auto e = registry::exp_decay(1);
  CHECK(std::abs(density_lp_norm(e, kGrid, 2, opt) - 1.0 / std::sqrt(2 * std::numbers::pi)) <= 1e-4);
}
