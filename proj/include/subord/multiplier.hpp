#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "subord/fourier.hpp"
#include "subord/power_series.hpp"

namespace subord {

/// A function of the frequency variable acting on f by f^ -> m f^.
///
/// Closed-form (registry) and piecewise multipliers evaluate anywhere and can be
/// resampled on any grid. Sampled multipliers exist only on their own dual
/// grid. Composite multipliers (ratios, products with sampled factors) are
/// defined by a per-grid sampler.
class Multiplier {
 public:
  enum class Kind { registry, sampled, piecewise, composite };

  using PointFn = std::function<cplx(double)>;
  using GridFn = std::function<std::vector<cplx>(const GridSpec&)>;

  struct Piece {
    double lo;  // inclusive
    double hi;  // exclusive
    PointFn fn;
  };

  /// `expansion`, when non-empty, is the series of m(y) in |y| at y = 0 for an
  /// even multiplier. Norm estimation uses it to split off the origin cusp.
  static Multiplier registry(std::string name, std::vector<double> params, PointFn fn,
                             PowerSeries expansion = {});
  static Multiplier sampled(std::string name, SampledFunction values);
  /// Pieces are tried in order; `outside` covers every point no piece claims.
  static Multiplier piecewise(std::string name, std::vector<Piece> pieces, PointFn outside);
  /// `resamplable` is false when the sampler only serves its own grid.
  static Multiplier composite(std::string name, GridFn sampler, bool resamplable = true,
                              PowerSeries expansion = {});

  Kind kind() const noexcept { return kind_; }
  const std::string& name() const noexcept { return name_; }
  const std::vector<double>& params() const noexcept { return params_; }
  const PowerSeries& origin_expansion() const noexcept { return expansion_; }

  bool pointwise() const noexcept { return static_cast<bool>(point_); }
  bool resamplable() const noexcept { return resamplable_; }

  /// Value at an arbitrary frequency; throws invalid-parameter unless pointwise().
  cplx operator()(double y) const;
  /// Values on the dual nodes of `grid`; sampled multipliers require their own grid.
  std::vector<cplx> sample(const GridSpec& grid) const;

  Multiplier scaled(cplx c) const;
  Multiplier without_expansion() const;

  friend Multiplier operator*(const Multiplier& a, const Multiplier& b);
  friend Multiplier operator+(const Multiplier& a, const Multiplier& b);

 private:
  Multiplier() = default;

  Kind kind_ = Kind::registry;
  std::string name_;
  std::vector<double> params_;
  PointFn point_;
  GridFn sampler_;
  PowerSeries expansion_;
  bool resamplable_ = true;
};

/// Closed-form multipliers used across the drivers and tests.
namespace registry {

/// Order through which origin expansions are carried.
inline constexpr double kExpansionOrder = 3.0;

Multiplier constant(cplx c);
/// e^{-a|y|}: transform of the Poisson kernel (a/pi)/(a^2 + x^2).
Multiplier exp_decay(double a);
/// sqrt(pi/a) e^{-y^2/(4a)}: transform of e^{-a x^2}.
Multiplier gaussian(double a);
/// 2a/(a^2 + y^2): transform of e^{-a|x|}.
Multiplier lorentzian(double a);
/// (1 + y^2)^{-s/2}.
Multiplier bessel_potential(double s);
/// e^{-i a y}: transform of the unit atom at a.
Multiplier translation(double a);
/// 1 - e^{-|y|^alpha}.
Multiplier one_minus_gw(double alpha, double expansion_order = kExpansionOrder);

}  // namespace registry

}  // namespace subord
