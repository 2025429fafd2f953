#include "subord/comparison.hpp"

#include <algorithm>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {
namespace {

double sup_abs(const std::vector<cplx>& v) {
  double m = 0.0;
  for (const auto& x : v) m = std::max(m, std::abs(x));
  return m;
}

std::vector<cplx> ratio_on(const ComparisonSetup& s, const GridSpec& grid) {
  const auto v1 = s.m1.sample(grid);
  const auto v2 = s.m2.sample(grid);
  const double t1 = s.zero_tolerance * sup_abs(v1);
  const double t2 = s.zero_tolerance * sup_abs(v2);
  const std::size_t n = v1.size();

  std::vector<cplx> r(n);
  std::vector<bool> zero(n, false);
  for (std::size_t k = 0; k < n; ++k) {
    if (std::abs(v2[k]) <= t2) {
      if (std::abs(v1[k]) > t1) {
        throw Error(ErrorCode::nested_zeros_violated,
                    "m2 vanishes at y=" + std::to_string(grid.dual_node(k)) + " but m1 does not");
      }
      zero[k] = true;
    } else {
      r[k] = v1[k] / v2[k];
    }
  }

  if (s.fill == FillPolicy::explicit_values) {
    const double half = 0.5 * grid.dual_spacing();
    for (std::size_t k = 0; k < n; ++k) {
      if (!zero[k]) continue;
      const double y = grid.dual_node(k);
      auto it = std::find_if(s.fill_values.begin(), s.fill_values.end(),
                             [&](const auto& fv) { return std::abs(fv.first - y) <= half; });
      if (it == s.fill_values.end()) {
        throw Error(ErrorCode::fill_undefined,
                    "no fill value supplied for the zero at y=" + std::to_string(y));
      }
      r[k] = it->second;
    }
    return r;
  }

  for (std::size_t k = 0; k < n;) {
    if (!zero[k]) {
      ++k;
      continue;
    }
    std::size_t end = k;
    while (end < n && zero[end]) ++end;
    if (k == 0 || end == n) {
      throw Error(ErrorCode::fill_undefined, "zero set of m2 reaches the edge of the dual grid");
    }
    const cplx fill = 0.5 * (r[k - 1] + r[end]);
    for (std::size_t i = k; i < end; ++i) r[i] = fill;
    k = end;
  }
  return r;
}

PowerSeries ratio_expansion(const Multiplier& m1, const Multiplier& m2) {
  if (m1.origin_expansion().empty() || m2.origin_expansion().empty()) return {};
  try {
    return m1.origin_expansion().quotient(m2.origin_expansion());
  } catch (const Error&) {
    return {};
  }
}

}  // namespace

Multiplier ratio_multiplier(const ComparisonSetup& setup, const GridSpec& grid) {
  (void)ratio_on(setup, grid);
  const bool resamplable = setup.m1.resamplable() && setup.m2.resamplable();
  return Multiplier::composite(
      "(" + setup.m1.name() + ")/(" + setup.m2.name() + ")",
      [setup](const GridSpec& g) { return ratio_on(setup, g); }, resamplable,
      ratio_expansion(setup.m1, setup.m2));
}

WienerEstimate comparison_constant(const ComparisonSetup& setup, const GridSpec& grid,
                                   const WienerOptions& options) {
  return wiener_norm_estimate(ratio_multiplier(setup, grid), grid, options);
}

SubordinationReport verify_subordination(const ComparisonSetup& setup,
                                         const std::vector<TestInput>& tests,
                                         const std::vector<double>& ps, const GridSpec& grid,
                                         double tolerance) {
  SubordinationReport report;
  report.tolerance = tolerance;
  report.constant = require_converged(comparison_constant(setup, grid), "comparison constant").total;
  const auto v1 = setup.m1.sample(grid);
  const auto v2 = setup.m2.sample(grid);
  for (const auto& t : tests) {
    if (!(t.f.grid() == grid)) throw Error(ErrorCode::grid_mismatch, "test '" + t.id + "'");
    const auto lhs = apply_multiplier(t.f, v1);
    const auto rhs = apply_multiplier(t.f, v2);
    for (double p : ps) {
      const std::string pe = format_exponent(p);
      report.cases.push_back(
          make_case(t.id + "/p=" + pe, t.id, pe, std::nullopt, lp_norm(lhs, p), lp_norm(rhs, p)));
    }
  }
  report.finalize();
  return report;
}

}  // namespace subord
