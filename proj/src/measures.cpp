#include "subord/measures.hpp"

#include <algorithm>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {

FiniteMeasure::FiniteMeasure(std::vector<Atom> atoms, std::optional<SampledFunction> density)
    : atoms_(std::move(atoms)), density_(std::move(density)) {
  for (std::size_t i = 0; i < atoms_.size(); ++i) {
    if (!std::isfinite(atoms_[i].location)) {
      throw Error(ErrorCode::invalid_parameter, "atom location must be finite");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (atoms_[i].location == atoms_[j].location) {
        throw Error(ErrorCode::invalid_parameter, "atom locations must be distinct");
      }
    }
  }
  if (density_ && density_->side() != Side::space) {
    throw Error(ErrorCode::invalid_parameter, "measure density must be a space-side function");
  }
}

FiniteMeasure FiniteMeasure::unit_atom(double location) {
  return FiniteMeasure({{location, 1.0}});
}

FiniteMeasure FiniteMeasure::with_density(SampledFunction density) {
  return FiniteMeasure({}, std::move(density));
}

double total_variation(const FiniteMeasure& mu) {
  double tv = 0.0;
  for (const auto& a : mu.atoms()) tv += std::abs(a.weight);
  if (mu.density()) tv += lp_norm(*mu.density(), 1.0);
  return tv;
}

Multiplier measure_ft(const FiniteMeasure& mu, const GridSpec& grid) {
  const auto atoms = mu.atoms();
  auto atomic = [atoms](double y) {
    cplx s = 0.0;
    for (const auto& a : atoms) s += a.weight * std::exp(cplx(0.0, -a.location * y));
    return s;
  };
  if (!mu.density()) return Multiplier::registry("measure_ft", {}, atomic);
  if (!(mu.density()->grid() == grid)) {
    throw Error(ErrorCode::grid_mismatch, "measure density is on a different grid");
  }
  auto values = forward_ft(*mu.density());
  std::vector<cplx> v(values.values().begin(), values.values().end());
  for (std::size_t k = 0; k < v.size(); ++k) v[k] += atomic(grid.dual_node(k));
  return Multiplier::sampled("measure_ft", SampledFunction(grid, std::move(v), Side::frequency));
}

SampledFunction convolve_with_measure(const SampledFunction& f, const FiniteMeasure& mu,
                                      ShiftMode mode, MeasureConvolutionDiagnostics* diagnostics) {
  if (f.side() != Side::space) {
    throw Error(ErrorCode::invalid_parameter, "convolve_with_measure expects a space-side function");
  }
  const auto& grid = f.grid();
  const auto n = static_cast<long long>(grid.size());
  const double dx = grid.spacing();
  std::vector<cplx> out(grid.size());
  double max_snap = 0.0;
  for (const auto& a : mu.atoms()) {
    const double steps = a.location / dx;
    const long long shift = std::llround(steps);
    const double snap = std::abs(steps - static_cast<double>(shift)) * dx;
    if (mode == ShiftMode::exact && snap > 1e-12 * dx) {
      throw Error(ErrorCode::atom_off_grid, "atom at " + std::to_string(a.location) +
                                                " is not on a grid node");
    }
    max_snap = std::max(max_snap, snap);
    // (f * delta_a)(x) = f(x - a)
    for (long long j = 0; j < n; ++j) {
      const long long src = ((j - shift) % n + n) % n;
      out[static_cast<std::size_t>(j)] += a.weight * f[static_cast<std::size_t>(src)];
    }
  }
  SampledFunction result(grid, std::move(out), Side::space);
  bool wrap = false;
  if (mu.density()) {
    if (!(mu.density()->grid() == grid)) {
      throw Error(ErrorCode::grid_mismatch, "measure density is on a different grid");
    }
    ConvolutionDiagnostics cd;
    result = result + convolve(f, *mu.density(), &cd);
    wrap = cd.wraparound_risk;
  }
  if (diagnostics) {
    diagnostics->max_snap_error = max_snap;
    diagnostics->wraparound_risk = wrap;
  }
  return result;
}

}  // namespace subord
