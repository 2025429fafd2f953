#include "subord/fourier.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fft.hpp"
#include "subord/errors.hpp"

namespace subord {
namespace {

bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

void require_same_grid(const SampledFunction& a, const SampledFunction& b) {
  if (!(a.grid() == b.grid()) || a.side() != b.side()) {
    throw Error(ErrorCode::grid_mismatch, "operands live on different grids or sides");
  }
}

// (-1)^k: with N/2 even, the grid offset -L and the centred dual grid reduce
// all phase factors to alternating signs.
double alternating(std::size_t k) { return (k & 1U) ? -1.0 : 1.0; }

}  // namespace

GridSpec::GridSpec(double half_length, std::size_t size)
    : half_length_(half_length), size_(size), spacing_(0.0) {
  if (!(half_length > 0.0) || !std::isfinite(half_length)) {
    throw Error(ErrorCode::invalid_parameter, "grid half-length must be positive and finite");
  }
  if (size < 16 || !is_power_of_two(size)) {
    throw Error(ErrorCode::invalid_parameter,
                "grid size must be a power of two >= 16, got " + std::to_string(size));
  }
  spacing_ = 2.0 * half_length / static_cast<double>(size);
}

double GridSpec::dual_spacing() const noexcept { return std::numbers::pi / half_length_; }

double GridSpec::node(std::size_t j) const noexcept {
  return -half_length_ + static_cast<double>(j) * spacing_;
}

double GridSpec::dual_node(std::size_t k) const noexcept {
  return (static_cast<double>(k) - static_cast<double>(size_ / 2)) * dual_spacing();
}

GridSpec GridSpec::extended(std::size_t factor) const {
  return GridSpec(half_length_ * static_cast<double>(factor), size_ * factor);
}

GridSpec GridSpec::refined() const { return extended(2); }

GridSpec make_grid(double half_length, std::size_t size) { return GridSpec(half_length, size); }

SampledFunction::SampledFunction(GridSpec grid, std::vector<cplx> values, Side side)
    : grid_(grid), values_(std::move(values)), side_(side) {
  if (values_.size() != grid_.size()) {
    throw Error(ErrorCode::invalid_parameter, "sample count does not match grid size");
  }
  for (const auto& v : values_) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw Error(ErrorCode::invalid_parameter, "non-finite sample value");
    }
  }
}

SampledFunction SampledFunction::zero(const GridSpec& grid, Side side) {
  return SampledFunction(grid, std::vector<cplx>(grid.size()), side);
}

SampledFunction SampledFunction::sample(const GridSpec& grid, Side side,
                                        const std::function<cplx(double)>& fn) {
  std::vector<cplx> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = fn(side == Side::space ? grid.node(i) : grid.dual_node(i));
  }
  return SampledFunction(grid, std::move(v), side);
}

double SampledFunction::abscissa(std::size_t i) const noexcept {
  return side_ == Side::space ? grid_.node(i) : grid_.dual_node(i);
}

double SampledFunction::max_abs() const noexcept {
  double m = 0.0;
  for (const auto& v : values_) m = std::max(m, std::abs(v));
  return m;
}

SampledFunction SampledFunction::operator+(const SampledFunction& other) const {
  require_same_grid(*this, other);
  std::vector<cplx> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] += other.values_[i];
  return SampledFunction(grid_, std::move(v), side_);
}

SampledFunction SampledFunction::operator-(const SampledFunction& other) const {
  require_same_grid(*this, other);
  std::vector<cplx> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] -= other.values_[i];
  return SampledFunction(grid_, std::move(v), side_);
}

SampledFunction SampledFunction::operator*(cplx scale) const {
  std::vector<cplx> v(values_);
  for (auto& x : v) x *= scale;
  return SampledFunction(grid_, std::move(v), side_);
}

SampledFunction SampledFunction::multiplied(std::span<const cplx> weights) const {
  if (weights.size() != values_.size()) {
    throw Error(ErrorCode::grid_mismatch, "weight count does not match grid size");
  }
  std::vector<cplx> v(values_);
  for (std::size_t i = 0; i < v.size(); ++i) v[i] *= weights[i];
  return SampledFunction(grid_, std::move(v), side_);
}

SampledFunction forward_ft(const SampledFunction& f) {
  if (f.side() != Side::space) {
    throw Error(ErrorCode::invalid_parameter, "forward_ft expects a space-side function");
  }
  const auto n = f.size();
  std::vector<cplx> buf(n);
  for (std::size_t j = 0; j < n; ++j) buf[j] = alternating(j) * f[j];
  detail::dft(buf, detail::FftDirection::forward);
  const double dx = f.grid().spacing();
  for (std::size_t k = 0; k < n; ++k) buf[k] *= dx * alternating(k);
  return SampledFunction(f.grid(), std::move(buf), Side::frequency);
}

SampledFunction inverse_ft(const SampledFunction& spectrum) {
  if (spectrum.side() != Side::frequency) {
    throw Error(ErrorCode::invalid_parameter, "inverse_ft expects a frequency-side function");
  }
  const auto n = spectrum.size();
  std::vector<cplx> buf(n);
  for (std::size_t k = 0; k < n; ++k) buf[k] = alternating(k) * spectrum[k];
  detail::dft(buf, detail::FftDirection::backward);
  const double scale = 1.0 / (static_cast<double>(n) * spectrum.grid().spacing());
  for (std::size_t j = 0; j < n; ++j) buf[j] *= scale * alternating(j);
  return SampledFunction(spectrum.grid(), std::move(buf), Side::space);
}

SampledFunction apply_multiplier(const SampledFunction& f, std::span<const cplx> m) {
  return inverse_ft(forward_ft(f).multiplied(m));
}

double lp_norm(const SampledFunction& f, double p) {
  if (!(p >= 1.0)) throw Error(ErrorCode::invalid_parameter, "norm index must be >= 1");
  const auto values = f.values();
  if (std::isinf(p)) {
    double m = 0.0;
    for (const auto& v : values) m = std::max(m, std::abs(v));
    return m;
  }
  const double h = f.side() == Side::space ? f.grid().spacing() : f.grid().dual_spacing();
  double sum = 0.0;
  if (p == 1.0) {
    for (const auto& v : values) sum += std::abs(v);
    return h * sum;
  }
  if (p == 2.0) {
    for (const auto& v : values) sum += std::norm(v);
    return std::sqrt(h * sum);
  }
  // Scale by the maximum so large p cannot overflow.
  double m = 0.0;
  for (const auto& v : values) m = std::max(m, std::abs(v));
  if (m == 0.0) return 0.0;
  for (const auto& v : values) sum += std::pow(std::abs(v) / m, p);
  return m * std::pow(h * sum, 1.0 / p);
}

bool decays_at_edges(const SampledFunction& f, double rel) {
  const double peak = f.max_abs();
  if (peak == 0.0) return true;
  const auto n = f.size();
  const auto band = std::max<std::size_t>(1, n / 10);
  for (std::size_t i = 0; i < band; ++i) {
    if (std::abs(f[i]) > rel * peak || std::abs(f[n - 1 - i]) > rel * peak) return false;
  }
  return true;
}

SampledFunction convolve(const SampledFunction& f, const SampledFunction& g,
                         ConvolutionDiagnostics* diagnostics) {
  if (f.side() != Side::space || g.side() != Side::space) {
    throw Error(ErrorCode::invalid_parameter, "convolve expects space-side functions");
  }
  require_same_grid(f, g);
  if (diagnostics) diagnostics->wraparound_risk = !(decays_at_edges(f) && decays_at_edges(g));
  const auto fg = forward_ft(g);
  return inverse_ft(forward_ft(f).multiplied(fg.values()));
}

}  // namespace subord
