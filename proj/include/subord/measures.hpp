#pragma once

#include <optional>
#include <vector>

#include "subord/fourier.hpp"
#include "subord/multiplier.hpp"

namespace subord {

struct Atom {
  double location;
  cplx weight;
};

/// Finite complex Borel measure on the line: atoms plus an absolutely
/// continuous part with density sampled on a space grid.
class FiniteMeasure {
 public:
  /// Throws invalid-parameter on repeated atom locations or a frequency-side density.
  explicit FiniteMeasure(std::vector<Atom> atoms, std::optional<SampledFunction> density = {});

  static FiniteMeasure unit_atom(double location = 0.0);
  static FiniteMeasure with_density(SampledFunction density);

  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  const std::optional<SampledFunction>& density() const noexcept { return density_; }

 private:
  std::vector<Atom> atoms_;
  std::optional<SampledFunction> density_;
};

double total_variation(const FiniteMeasure& mu);

/// Transform of mu on the dual grid. Purely atomic measures give a
/// closed-form multiplier; a density makes the result grid-bound.
Multiplier measure_ft(const FiniteMeasure& mu, const GridSpec& grid);

enum class ShiftMode {
  snap,   // move each atom to its nearest node
  exact,  // refuse atoms that are not on a node
};

struct MeasureConvolutionDiagnostics {
  double max_snap_error = 0.0;
  bool wraparound_risk = false;
};

/// f * d(mu): atoms act as circular translations, the density by convolve().
SampledFunction convolve_with_measure(const SampledFunction& f, const FiniteMeasure& mu,
                                      ShiftMode mode = ShiftMode::snap,
                                      MeasureConvolutionDiagnostics* diagnostics = nullptr);

/// Estimate of the Wiener norm |mu|(R) of a multiplier psi = c_inf + g^.
struct WienerEstimate {
  cplx c_infinity;
  double density_l1 = 0.0;
  double tail_bound = 0.0;
  double total = 0.0;
  bool converged = false;
  /// Total recomputed on the (2L, 2N) grid; equals total when refinement is off.
  double refined_total = 0.0;
};

struct WienerOptions {
  /// Use this value for c_inf instead of averaging the outer dual nodes.
  std::optional<cplx> known_limit;
  /// Extra extent on the dual side, same spacing; suppresses periodization of g.
  std::size_t oversampling = 16;
  /// Upper bound on the oversampled transform length.
  std::size_t max_transform_size = std::size_t{1} << 22;
  bool refine = true;
};

/// Splits psi into c_inf + (transform of an L1 density), integrates |g| over
/// [-L, L) and bounds the rest with a C/x^2 tail per side. Multipliers with an
/// origin expansion have their origin cusp transformed in closed form first.
/// Throws inconsistent-limit when the two one-sided limits disagree; a failed
/// refinement check is reported through `converged`.
WienerEstimate wiener_norm_estimate(const Multiplier& psi, const GridSpec& grid,
                                    const WienerOptions& options = {});

/// Throws non-convergent unless `estimate.converged`.
const WienerEstimate& require_converged(const WienerEstimate& estimate, const std::string& what);

/// ||g||_s for the density g of psi - c_inf (s in [1, inf]), including the
/// modelled tail beyond [-L, L).
double density_lp_norm(const Multiplier& psi, const GridSpec& grid, double s,
                       const WienerOptions& options = {});

/// Cauchy-Schwarz bound pi*sqrt(2)*sqrt(||psi - c_inf||_2^2 + ||psi'||_2^2) on the
/// W0 part. Empty when the L2 norms do not stabilize under refinement.
std::optional<double> carlson_sufficient_bound(const Multiplier& psi, const GridSpec& grid,
                                               const WienerOptions& options = {});

}  // namespace subord
