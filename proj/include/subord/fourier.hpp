#pragma once

// Uniform grids on the real line and the discrete model of the continuous
// Fourier pair
//
//   f^(y) = \int f(x) e^{-ixy} dx,     f(x) = (2 pi)^{-1} \int f^(y) e^{ixy} dy.
//
// Space nodes are x_j = -L + j*dx on [-L, L); frequency nodes are
// y_k = (k - N/2) * dy on [-pi/dx, pi/dx) with dy = 2 pi / (N dx).

#include <complex>
#include <cstddef>
#include <functional>
#include <limits>
#include <span>
#include <vector>

namespace subord {

using cplx = std::complex<double>;

inline constexpr double kInf = std::numeric_limits<double>::infinity();

class GridSpec {
 public:
  /// Throws invalid-parameter unless L > 0 and N is a power of two >= 16.
  GridSpec(double half_length, std::size_t size);

  double half_length() const noexcept { return half_length_; }
  std::size_t size() const noexcept { return size_; }
  double spacing() const noexcept { return spacing_; }
  double dual_spacing() const noexcept;

  double node(std::size_t j) const noexcept;
  double dual_node(std::size_t k) const noexcept;

  /// Same spacing, `factor` times the extent.
  GridSpec extended(std::size_t factor) const;
  /// (2L, 2N): the refinement used by convergence checks.
  GridSpec refined() const;

  bool operator==(const GridSpec&) const = default;

 private:
  double half_length_;
  std::size_t size_;
  double spacing_;
};

GridSpec make_grid(double half_length, std::size_t size);

enum class Side { space, frequency };

class SampledFunction {
 public:
  /// Throws invalid-parameter on length mismatch or non-finite values.
  SampledFunction(GridSpec grid, std::vector<cplx> values, Side side);

  static SampledFunction zero(const GridSpec& grid, Side side);
  /// Samples `fn` at the space or frequency nodes of `grid`.
  static SampledFunction sample(const GridSpec& grid, Side side,
                                const std::function<cplx(double)>& fn);

  const GridSpec& grid() const noexcept { return grid_; }
  Side side() const noexcept { return side_; }
  std::size_t size() const noexcept { return values_.size(); }
  std::span<const cplx> values() const noexcept { return values_; }
  cplx operator[](std::size_t i) const { return values_[i]; }
  /// Node coordinate of sample i on this function's side.
  double abscissa(std::size_t i) const noexcept;

  double max_abs() const noexcept;

  SampledFunction operator+(const SampledFunction& other) const;
  SampledFunction operator-(const SampledFunction& other) const;
  SampledFunction operator*(cplx scale) const;
  /// Pointwise product with same-length weights.
  SampledFunction multiplied(std::span<const cplx> weights) const;

 private:
  GridSpec grid_;
  std::vector<cplx> values_;
  Side side_;
};

SampledFunction forward_ft(const SampledFunction& f);
SampledFunction inverse_ft(const SampledFunction& spectrum);

/// inverse_ft(m * forward_ft(f)); `m` holds multiplier values on the dual nodes.
SampledFunction apply_multiplier(const SampledFunction& f, std::span<const cplx> m);

/// Rectangle-rule L_p norm; p = kInf gives the grid maximum.
double lp_norm(const SampledFunction& f, double p);

/// True when |f| <= rel * max|f| on the outer 10% of nodes on both ends.
bool decays_at_edges(const SampledFunction& f, double rel = 1e-8);

struct ConvolutionDiagnostics {
  bool wraparound_risk = false;
};

/// dx-scaled circular convolution through the transform domain.
SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         ConvolutionDiagnostics* diagnostics = nullptr);

}  // namespace subord
