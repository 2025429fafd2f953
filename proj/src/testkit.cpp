#include "subord/testkit.hpp"

#include <cmath>
#include <numbers>

#include "subord/errors.hpp"

namespace subord {
namespace {

std::string fmt_params(const std::string& name, std::initializer_list<double> ps) {
  std::string s = name + "(";
  bool first = true;
  for (double p : ps) {
    if (!first) s += ",";
    s += format_exponent(p);
    first = false;
  }
  return s + ")";
}

double binomial(int n, int k) {
  double c = 1.0;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

}  // namespace

TestFunctionSpec::TestFunctionSpec(std::string id, Family family, double a, double b,
                                   int smoothness)
    : id_(std::move(id)), family_(family), a_(a), b_(b), smoothness_(smoothness) {}

TestFunctionSpec TestFunctionSpec::gaussian(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_parameter, "gaussian needs a > 0");
  return {fmt_params("gaussian", {a}), Family::gaussian, a, 0.0, kSmooth};
}

TestFunctionSpec TestFunctionSpec::exp_abs(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_parameter, "exp_abs needs a > 0");
  return {fmt_params("exp_abs", {a}), Family::exp_abs, a, 0.0, 0};
}

TestFunctionSpec TestFunctionSpec::bump(double radius) {
  if (!(radius > 0.0)) throw Error(ErrorCode::invalid_parameter, "bump needs a positive radius");
  return {fmt_params("bump", {radius}), Family::bump, radius, 0.0, kSmooth};
}

TestFunctionSpec TestFunctionSpec::bspline(int order) {
  if (order < 1) throw Error(ErrorCode::invalid_parameter, "bspline order must be >= 1");
  return {fmt_params("bspline", {static_cast<double>(order)}), Family::bspline,
          static_cast<double>(order), 0.0, std::max(0, order - 2)};
}

TestFunctionSpec TestFunctionSpec::modulated_gaussian(double a, double omega) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_parameter, "modulated_gaussian needs a > 0");
  return {fmt_params("modulated_gaussian", {a, omega}), Family::modulated_gaussian, a, omega,
          kSmooth};
}

cplx TestFunctionSpec::value(double x) const {
  switch (family_) {
    case Family::gaussian:
      return std::exp(-a_ * x * x);
    case Family::exp_abs:
      return std::exp(-a_ * std::abs(x));
    case Family::bump: {
      const double u = x / a_;
      if (std::abs(u) >= 1.0) return 0.0;
      return std::exp(1.0 - 1.0 / (1.0 - u * u));
    }
    case Family::bspline: {
      const int m = static_cast<int>(a_);
      const double half = 0.5 * m;
      if (std::abs(x) >= half) return 0.0;
      double s = 0.0;
      for (int k = 0; k <= m; ++k) {
        const double t = x + half - k;
        if (t <= 0.0) break;
        s += ((k & 1) ? -1.0 : 1.0) * binomial(m, k) * std::pow(t, m - 1);
      }
      return s / std::tgamma(m);
    }
    case Family::modulated_gaussian:
      return std::exp(cplx(-a_ * x * x, b_ * x));
  }
  return 0.0;
}

cplx TestFunctionSpec::known_ft(double y) const {
  switch (family_) {
    case Family::gaussian:
      return std::sqrt(std::numbers::pi / a_) * std::exp(-y * y / (4.0 * a_));
    case Family::exp_abs:
      return 2.0 * a_ / (a_ * a_ + y * y);
    case Family::bspline: {
      const double h = 0.5 * y;
      const double sinc = h == 0.0 ? 1.0 : std::sin(h) / h;
      return std::pow(sinc, static_cast<int>(a_));
    }
    case Family::modulated_gaussian:
      return std::sqrt(std::numbers::pi / a_) * std::exp(-(y - b_) * (y - b_) / (4.0 * a_));
    case Family::bump:
      break;
  }
  throw Error(ErrorCode::invalid_parameter, id_ + " has no closed-form transform");
}

SampledFunction materialize(const TestFunctionSpec& spec, const GridSpec& grid) {
  auto f = SampledFunction::sample(grid, Side::space, [&](double x) { return spec.value(x); });
  const double peak = std::max(f.max_abs(), std::abs(spec.value(0.0)));
  const double edge = std::max(std::abs(f[0]), std::abs(f[grid.size() - 1]));
  if (edge > 1e-10 * peak) {
    throw Error(ErrorCode::grid_too_small,
                spec.id() + " does not decay to 1e-10 of its peak on [-L, L)");
  }
  return f;
}

TestInput materialize_input(const TestFunctionSpec& spec, const GridSpec& grid) {
  return {spec.id(), materialize(spec, grid)};
}

std::vector<TestInput> materialize_all(const std::vector<TestFunctionSpec>& specs,
                                       const GridSpec& grid) {
  std::vector<TestInput> out;
  out.reserve(specs.size());
  for (const auto& s : specs) out.push_back(materialize_input(s, grid));
  return out;
}

std::vector<TestFunctionSpec> default_suite(SuitePurpose purpose) {
  std::vector<TestFunctionSpec> all = {
      TestFunctionSpec::gaussian(1.0),  TestFunctionSpec::gaussian(4.0),
      TestFunctionSpec::exp_abs(1.0),   TestFunctionSpec::bump(2.0),
      TestFunctionSpec::bspline(4),     TestFunctionSpec::modulated_gaussian(1.0, 3.0),
  };
  if (purpose.kind == SuitePurpose::means) return all;
  std::erase_if(all, [&](const TestFunctionSpec& s) { return s.smoothness_order() < purpose.order; });
  return all;
}

double known_ft_error(const TestFunctionSpec& spec, const GridSpec& grid, double ymax) {
  const auto fh = forward_ft(materialize(spec, grid));
  double err = 0.0;
  double peak = 0.0;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const double y = grid.dual_node(k);
    if (std::abs(y) > ymax) continue;
    const cplx exact = spec.known_ft(y);
    err = std::max(err, std::abs(fh[k] - exact));
    peak = std::max(peak, std::abs(exact));
  }
  return err / peak;
}

}  // namespace subord
