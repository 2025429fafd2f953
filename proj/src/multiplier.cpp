#include "subord/multiplier.hpp"

#include <cmath>
#include <numbers>

#include "subord/errors.hpp"

namespace subord {

Multiplier Multiplier::registry(std::string name, std::vector<double> params, PointFn fn,
                                PowerSeries expansion) {
  Multiplier m;
  m.kind_ = Kind::registry;
  m.name_ = std::move(name);
  m.params_ = std::move(params);
  m.point_ = std::move(fn);
  m.expansion_ = std::move(expansion);
  return m;
}

Multiplier Multiplier::sampled(std::string name, SampledFunction values) {
  if (values.side() != Side::frequency) {
    throw Error(ErrorCode::invalid_parameter, "sampled multiplier needs frequency-side values");
  }
  Multiplier m;
  m.kind_ = Kind::sampled;
  m.name_ = std::move(name);
  m.resamplable_ = false;
  auto shared = std::make_shared<const SampledFunction>(std::move(values));
  m.sampler_ = [shared](const GridSpec& grid) {
    if (!(grid == shared->grid())) {
      throw Error(ErrorCode::grid_mismatch, "sampled multiplier requested on a foreign grid");
    }
    return std::vector<cplx>(shared->values().begin(), shared->values().end());
  };
  return m;
}

Multiplier Multiplier::piecewise(std::string name, std::vector<Piece> pieces, PointFn outside) {
  Multiplier m;
  m.kind_ = Kind::piecewise;
  m.name_ = std::move(name);
  m.point_ = [pieces = std::move(pieces), outside = std::move(outside)](double y) {
    for (const auto& p : pieces) {
      if (y >= p.lo && y < p.hi) return p.fn(y);
    }
    return outside(y);
  };
  return m;
}

Multiplier Multiplier::composite(std::string name, GridFn sampler, bool resamplable,
                                 PowerSeries expansion) {
  Multiplier m;
  m.kind_ = Kind::composite;
  m.name_ = std::move(name);
  m.sampler_ = std::move(sampler);
  m.resamplable_ = resamplable;
  m.expansion_ = std::move(expansion);
  return m;
}

cplx Multiplier::operator()(double y) const {
  if (!point_) {
    throw Error(ErrorCode::invalid_parameter, "multiplier '" + name_ + "' is not pointwise");
  }
  return point_(y);
}

std::vector<cplx> Multiplier::sample(const GridSpec& grid) const {
  if (sampler_) return sampler_(grid);
  std::vector<cplx> v(grid.size());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] = point_(grid.dual_node(k));
  return v;
}

Multiplier Multiplier::scaled(cplx c) const {
  Multiplier m = *this;
  m.name_ = name_ + "*c";
  if (point_) {
    m.point_ = [f = point_, c](double y) { return c * f(y); };
  }
  if (sampler_) {
    m.sampler_ = [s = sampler_, c](const GridSpec& g) {
      auto v = s(g);
      for (auto& x : v) x *= c;
      return v;
    };
  }
  if (!expansion_.empty()) m.expansion_ = expansion_ * c;
  return m;
}

Multiplier Multiplier::without_expansion() const {
  Multiplier m = *this;
  m.expansion_ = PowerSeries();
  return m;
}

namespace {

enum class Op { add, mul };

Multiplier combine(const Multiplier& a, const Multiplier& b, Op op) {
  const std::string name = "(" + a.name() + (op == Op::add ? "+" : "*") + b.name() + ")";
  auto apply = [op](cplx x, cplx y) { return op == Op::add ? x + y : x * y; };
  PowerSeries expansion;
  if (!a.origin_expansion().empty() && !b.origin_expansion().empty()) {
    expansion = op == Op::add ? a.origin_expansion() + b.origin_expansion()
                              : a.origin_expansion() * b.origin_expansion();
  }
  if (a.pointwise() && b.pointwise()) {
    return Multiplier::registry(name, {}, [a, b, apply](double y) { return apply(a(y), b(y)); },
                                std::move(expansion));
  }
  return Multiplier::composite(
      name,
      [a, b, apply](const GridSpec& g) {
        auto va = a.sample(g);
        const auto vb = b.sample(g);
        for (std::size_t i = 0; i < va.size(); ++i) va[i] = apply(va[i], vb[i]);
        return va;
      },
      a.resamplable() && b.resamplable(), std::move(expansion));
}

}  // namespace

Multiplier operator*(const Multiplier& a, const Multiplier& b) { return combine(a, b, Op::mul); }
Multiplier operator+(const Multiplier& a, const Multiplier& b) { return combine(a, b, Op::add); }

namespace registry {

Multiplier constant(cplx c) {
  return Multiplier::registry("constant", {c.real(), c.imag()}, [c](double) { return c; },
                              PowerSeries::constant(c, kExpansionOrder));
}

Multiplier exp_decay(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_parameter, "exp_decay needs a > 0");
  return Multiplier::registry(
      "exp_decay", {a}, [a](double y) { return cplx(std::exp(-a * std::abs(y))); },
      PowerSeries::exp_abs(-a, kExpansionOrder));
}

Multiplier gaussian(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_parameter, "gaussian needs a > 0");
  const double amp = std::sqrt(std::numbers::pi / a);
  return Multiplier::registry("gaussian", {a}, [a, amp](double y) {
    return cplx(amp * std::exp(-y * y / (4.0 * a)));
  });
}

Multiplier lorentzian(double a) {
  if (!(a > 0.0)) throw Error(ErrorCode::invalid_parameter, "lorentzian needs a > 0");
  return Multiplier::registry("lorentzian", {a},
                              [a](double y) { return cplx(2.0 * a / (a * a + y * y)); });
}

Multiplier bessel_potential(double s) {
  if (!(s > 0.0)) throw Error(ErrorCode::invalid_parameter, "bessel_potential needs s > 0");
  return Multiplier::registry("bessel_potential", {s},
                              [s](double y) { return cplx(std::pow(1.0 + y * y, -0.5 * s)); });
}

Multiplier translation(double a) {
  return Multiplier::registry("translation", {a},
                              [a](double y) { return std::exp(cplx(0.0, -a * y)); });
}

Multiplier one_minus_gw(double alpha, double expansion_order) {
  if (!(alpha > 0.0)) throw Error(ErrorCode::invalid_parameter, "one_minus_gw needs alpha > 0");
  // 1 - e^{-t} = sum_{k>=1} (-1)^{k+1} t^k / k!,  t = |y|^alpha
  std::vector<PowerTerm> terms;
  double c = 1.0;
  for (int k = 1; k * alpha <= expansion_order + 1e-12; ++k) {
    c /= k;
    terms.push_back({k * alpha, (k % 2 == 1 ? 1.0 : -1.0) * c});
  }
  return Multiplier::registry(
      "one_minus_gw", {alpha},
      [alpha](double y) { return cplx(-std::expm1(-std::pow(std::abs(y), alpha))); },
      PowerSeries(std::move(terms), expansion_order));
}

}  // namespace registry
}  // namespace subord
