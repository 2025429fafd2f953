#include <algorithm>
#include <cmath>
#include <numbers>

#include "subord/errors.hpp"
#include "subord/measures.hpp"

namespace subord {
namespace {

constexpr double kLimitTolerance = 1e-3;
constexpr double kTailReach = 1e16;
constexpr int kTailSteps = 4000;

std::size_t floor_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p * 2 <= n) p *= 2;
  return p;
}

// Inverse transform of e^{-|y|} |y|^r:  Gamma(r+1)/pi * Re (1 - ix)^{-r-1}.
cplx cusp_density(const PowerSeries& b, double x) {
  cplx s = 0.0;
  for (const auto& t : b.terms()) {
    const double k = std::tgamma(t.exponent + 1.0) / std::numbers::pi *
                     std::pow(cplx(1.0, -x), -t.exponent - 1.0).real();
    s += t.coefficient * k;
  }
  return s;
}

struct DensityModel {
  cplx c_infinity;
  double window = 0.0;     // g is resolved on [-window, window)
  double spacing = 0.0;
  std::vector<cplx> g;     // full density on the window nodes
  double c_left = 0.0;     // remainder decays like c/x^2 beyond the window
  double c_right = 0.0;
  PowerSeries cusp;        // closed-form part, density cusp_density(cusp, x)
};

cplx one_sided_mean(const std::vector<cplx>& v, bool left) {
  const std::size_t k = std::max<std::size_t>(1, v.size() / 20);
  cplx s = 0.0;
  for (std::size_t i = 0; i < k; ++i) s += left ? v[i] : v[v.size() - 1 - i];
  return s / static_cast<double>(k);
}

DensityModel build_density(const Multiplier& psi, const GridSpec& grid, const WienerOptions& opt,
                           double window) {
  std::size_t m = 1;
  if (psi.resamplable()) {
    const std::size_t cap = std::max<std::size_t>(1, opt.max_transform_size / grid.size());
    m = floor_pow2(std::max<std::size_t>(1, std::min(opt.oversampling, cap)));
  }
  const GridSpec eg = grid.extended(m);
  std::vector<cplx> v = psi.sample(eg);

  DensityModel model;
  if (opt.known_limit) {
    model.c_infinity = *opt.known_limit;
  } else {
    const cplx left = one_sided_mean(v, true);
    const cplx right = one_sided_mean(v, false);
    model.c_infinity = 0.5 * (left + right);
    if (std::abs(left - right) > kLimitTolerance * (1.0 + std::abs(model.c_infinity))) {
      throw Error(ErrorCode::inconsistent_limit,
                  "multiplier '" + psi.name() + "' has different limits at +inf and -inf");
    }
  }

  const auto& a = psi.origin_expansion();
  if (!a.empty()) {
    const double order = a.order();
    model.cusp = ((a - PowerSeries::constant(model.c_infinity, order)) *
                  PowerSeries::exp_abs(1.0, order))
                     .truncated(order);
  }
  for (std::size_t k = 0; k < v.size(); ++k) {
    const double y = eg.dual_node(k);
    v[k] -= model.c_infinity;
    if (!model.cusp.empty()) v[k] -= std::exp(-std::abs(y)) * model.cusp.evaluate(std::abs(y));
  }
  const SampledFunction rem = inverse_ft(SampledFunction(eg, std::move(v), Side::frequency));

  model.window = window;
  model.spacing = grid.spacing();
  const double edge = 0.9 * window;
  for (std::size_t j = 0; j < eg.size(); ++j) {
    const double x = eg.node(j);
    if (x < -window || x >= window) continue;
    model.g.push_back(rem[j] + (model.cusp.empty() ? cplx(0.0) : cusp_density(model.cusp, x)));
    if (std::abs(x) >= edge) {
      const double c = std::abs(rem[j]) * x * x;
      double& side = x < 0 ? model.c_left : model.c_right;
      side = std::max(side, c);
    }
  }
  return model;
}

// Integral over [window, inf) of (|cusp density| + c/x^2)^s on a logarithmic grid.
double tail_integral(const DensityModel& model, double c, double s) {
  if (model.cusp.empty()) {
    if (c == 0.0) return 0.0;
    return std::pow(c, s) * std::pow(model.window, 1.0 - 2.0 * s) / (2.0 * s - 1.0);
  }
  const double span = std::log(kTailReach);
  const double h = span / kTailSteps;
  double acc = 0.0;
  for (int i = 0; i <= kTailSteps; ++i) {
    const double x = model.window * std::exp(i * h);
    const double v = std::pow(std::abs(cusp_density(model.cusp, x)) + c / (x * x), s) * x;
    acc += (i == 0 || i == kTailSteps) ? 0.5 * v : v;
  }
  return acc * h;
}

WienerEstimate estimate_once(const Multiplier& psi, const GridSpec& grid, const WienerOptions& opt,
                             double window) {
  const DensityModel model = build_density(psi, grid, opt, window);
  WienerEstimate e;
  e.c_infinity = model.c_infinity;
  double l1 = 0.0;
  for (const auto& v : model.g) l1 += std::abs(v);
  e.density_l1 = l1 * model.spacing;
  e.tail_bound = tail_integral(model, model.c_left, 1.0) + tail_integral(model, model.c_right, 1.0);
  e.total = std::abs(e.c_infinity) + e.density_l1 + e.tail_bound;
  e.refined_total = e.total;
  return e;
}

}  // namespace

WienerEstimate wiener_norm_estimate(const Multiplier& psi, const GridSpec& grid,
                                    const WienerOptions& options) {
  WienerEstimate e = estimate_once(psi, grid, options, grid.half_length());
  if (!options.refine) {
    e.converged = true;
    return e;
  }
  // Multipliers bound to their grid cannot be resampled; they are checked
  // against the estimate from half the window instead.
  const WienerEstimate r = psi.resamplable()
                               ? estimate_once(psi, grid.refined(), options, 2.0 * grid.half_length())
                               : estimate_once(psi, grid, options, 0.5 * grid.half_length());
  e.refined_total = r.total;
  e.converged = std::abs(e.total - r.total) <= std::max(1e-3, 1e-2 * e.total);
  return e;
}

const WienerEstimate& require_converged(const WienerEstimate& estimate, const std::string& what) {
  if (!estimate.converged) {
    throw Error(ErrorCode::non_convergent,
                what + ": Wiener norm estimate unstable under refinement (" +
                    std::to_string(estimate.total) + " vs " +
                    std::to_string(estimate.refined_total) + ")");
  }
  return estimate;
}

double density_lp_norm(const Multiplier& psi, const GridSpec& grid, double s,
                       const WienerOptions& options) {
  if (!(s >= 1.0)) throw Error(ErrorCode::invalid_parameter, "density norm needs s >= 1");
  const DensityModel model = build_density(psi, grid, options, grid.half_length());
  if (std::isinf(s)) {
    double m = 0.0;
    for (const auto& v : model.g) m = std::max(m, std::abs(v));
    return m;
  }
  double acc = 0.0;
  for (const auto& v : model.g) acc += std::pow(std::abs(v), s);
  acc = acc * model.spacing + tail_integral(model, model.c_left, s) +
        tail_integral(model, model.c_right, s);
  return std::pow(acc, 1.0 / s);
}

namespace {

double sobolev_energy(const Multiplier& psi, const GridSpec& grid, cplx c_inf) {
  auto v = psi.sample(grid);
  const double eta = grid.dual_spacing();
  const std::size_t n = v.size();
  double e0 = 0.0;
  double e1 = 0.0;
  for (std::size_t k = 0; k < n; ++k) {
    e0 += std::norm(v[k] - c_inf);
    // differences live on the midpoints, so a kink costs only O(eta^2)
    if (k + 1 < n) e1 += std::norm((v[k + 1] - v[k]) / eta);
  }
  return (e0 + e1) * eta;
}

}  // namespace

std::optional<double> carlson_sufficient_bound(const Multiplier& psi, const GridSpec& grid,
                                               const WienerOptions& options) {
  cplx c_inf;
  if (options.known_limit) {
    c_inf = *options.known_limit;
  } else {
    const auto v = psi.sample(grid);
    c_inf = 0.5 * (one_sided_mean(v, true) + one_sided_mean(v, false));
  }
  const double e = sobolev_energy(psi, grid, c_inf);
  if (!std::isfinite(e)) return std::nullopt;
  if (psi.resamplable()) {
    const double er = sobolev_energy(psi, grid.refined(), c_inf);
    if (!std::isfinite(er) || std::abs(er - e) > 1e-2 * std::max(e, 1e-300)) {
      if (e > 0.0 || er > 0.0) return std::nullopt;
    }
  }
  return std::numbers::pi * std::numbers::sqrt2 * std::sqrt(e);
}

}  // namespace subord
