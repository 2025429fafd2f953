#include "subord/summability.hpp"

#include <cmath>
#include <numbers>

#include "subord/errors.hpp"

namespace subord {
namespace {

constexpr double kMassTolerance = 1e-3;

void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) {
    throw Error(ErrorCode::invalid_parameter, "alpha must be a positive finite number");
  }
}

void require_admissible(double alpha, double beta) {
  require_alpha(alpha);
  require_alpha(beta);
  if (!(beta > alpha)) throw Error(ErrorCode::invalid_parameter, "need beta > alpha");
}

double phi(double alpha, double y) { return std::exp(-std::pow(std::abs(y), alpha)); }

}  // namespace

Multiplier gw_symbol(double alpha) {
  require_alpha(alpha);
  return Multiplier::registry("gw_symbol", {alpha}, [alpha](double y) { return cplx(phi(alpha, y)); });
}

SampledFunction gw_kernel(double alpha, const GridSpec& grid, double epsilon) {
  require_alpha(alpha);
  if (!(epsilon > 0.0)) throw Error(ErrorCode::invalid_parameter, "epsilon must be positive");
  SampledFunction k = SampledFunction::zero(grid, Side::space);
  if (alpha == 2.0) {
    k = SampledFunction::sample(grid, Side::space, [epsilon](double x) {
      const double u = x / epsilon;
      return cplx(std::exp(-0.25 * u * u) / (2.0 * std::sqrt(std::numbers::pi) * epsilon));
    });
  } else if (alpha == 1.0) {
    k = SampledFunction::sample(grid, Side::space, [epsilon](double x) {
      const double u = x / epsilon;
      return cplx(1.0 / (std::numbers::pi * epsilon * (1.0 + u * u)));
    });
  } else {
    const auto spectrum = SampledFunction::sample(
        grid, Side::frequency, [&](double y) { return cplx(phi(alpha, epsilon * y)); });
    const auto raw = inverse_ft(spectrum);
    std::vector<cplx> re(raw.size());
    for (std::size_t j = 0; j < re.size(); ++j) re[j] = raw[j].real();
    k = SampledFunction(grid, std::move(re), Side::space);
  }
  double mass = 0.0;
  for (const auto& v : k.values()) mass += v.real();
  mass *= grid.spacing();
  if (std::abs(mass - 1.0) > kMassTolerance) {
    throw Error(ErrorCode::non_convergent,
                "kernel mass " + std::to_string(mass) + " on the grid; enlarge L for alpha=" +
                    format_exponent(alpha));
  }
  return k;
}

namespace {

void require_resolvable(const GridSpec& grid, double epsilon) {
  if (!(epsilon > 0.0)) throw Error(ErrorCode::invalid_parameter, "epsilon must be positive");
  if (epsilon < 4.0 * grid.spacing()) {
    throw Error(ErrorCode::kernel_unresolvable,
                "epsilon " + format_exponent(epsilon) + " is below 4 grid spacings");
  }
}

}  // namespace

SampledFunction gw_mean(const SampledFunction& f, double alpha, double epsilon) {
  require_alpha(alpha);
  require_resolvable(f.grid(), epsilon);
  std::vector<cplx> m(f.size());
  for (std::size_t k = 0; k < m.size(); ++k) m[k] = phi(alpha, epsilon * f.grid().dual_node(k));
  return apply_multiplier(f, m);
}

SampledFunction gw_mean_by_convolution(const SampledFunction& f, double alpha, double epsilon) {
  require_resolvable(f.grid(), epsilon);
  return convolve(f, gw_kernel(alpha, f.grid(), epsilon));
}

MeanResult gw_error(const SampledFunction& f, double alpha, double epsilon, double p) {
  const auto mean = gw_mean(f, alpha, epsilon);
  return {alpha, epsilon, p, lp_norm(f - mean, p)};
}

Multiplier gw_psi(double alpha, double beta) {
  require_admissible(alpha, beta);
  const double order = registry::kExpansionOrder + alpha;
  const auto num = registry::one_minus_gw(beta, order);
  const auto den = registry::one_minus_gw(alpha, order);
  return Multiplier::registry(
      "gw_psi", {alpha, beta},
      [alpha, beta](double y) {
        const double t = std::abs(y);
        if (t == 0.0) return cplx(0.0);
        return cplx(std::expm1(-std::pow(t, beta)) / std::expm1(-std::pow(t, alpha)));
      },
      num.origin_expansion().quotient(den.origin_expansion()));
}

WienerEstimate gw_constant(double alpha, double beta, const GridSpec& grid,
                           const WienerOptions& options) {
  WienerOptions opt = options;
  if (!opt.known_limit) opt.known_limit = cplx(1.0);
  return wiener_norm_estimate(gw_psi(alpha, beta), grid, opt);
}

SubordinationReport gw_verify(double alpha, double beta, const std::vector<TestInput>& tests,
                              const std::vector<double>& eps_list, const std::vector<double>& ps,
                              const GridSpec& grid, double tolerance) {
  require_admissible(alpha, beta);
  for (double eps : eps_list) require_resolvable(grid, eps);
  SubordinationReport report;
  report.tolerance = tolerance;
  report.constant = require_converged(gw_constant(alpha, beta, grid), "c(alpha,beta)").total;
  for (const auto& t : tests) {
    if (!(t.f.grid() == grid)) throw Error(ErrorCode::grid_mismatch, "test '" + t.id + "'");
    for (double eps : eps_list) {
      const auto diff_b = t.f - gw_mean(t.f, beta, eps);
      const auto diff_a = t.f - gw_mean(t.f, alpha, eps);
      for (double p : ps) {
        const std::string pe = format_exponent(p);
        report.cases.push_back(make_case(t.id + "/eps=" + format_exponent(eps) + "/p=" + pe, t.id,
                                         pe, eps, lp_norm(diff_b, p), lp_norm(diff_a, p)));
      }
    }
  }
  report.finalize();
  return report;
}

}  // namespace subord
