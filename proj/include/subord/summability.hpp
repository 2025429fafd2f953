#pragma once

#include <vector>

#include "subord/measures.hpp"
#include "subord/multiplier.hpp"
#include "subord/report.hpp"

namespace subord {

/// phi_alpha(y) = e^{-|y|^alpha}.
Multiplier gw_symbol(double alpha);

/// eps^{-1} K_alpha(x/eps) with K_alpha = (2 pi)^{-1} phi_alpha^. Closed forms
/// for alpha = 1, 2; otherwise the inverse transform of phi_alpha(eps y).
/// Throws non-convergent when the grid mass differs from 1 by more than 1e-3.
SampledFunction gw_kernel(double alpha, const GridSpec& grid, double epsilon = 1.0);

/// M_{alpha,eps} f computed on the frequency side. Throws kernel-unresolvable
/// when eps < 4 dx.
SampledFunction gw_mean(const SampledFunction& f, double alpha, double epsilon);

/// The same mean as a space-side convolution with the dilated kernel.
SampledFunction gw_mean_by_convolution(const SampledFunction& f, double alpha, double epsilon);

struct MeanResult {
  double alpha;
  double epsilon;
  double p;
  double error;
};

MeanResult gw_error(const SampledFunction& f, double alpha, double epsilon, double p);

/// (1 - phi_beta)/(1 - phi_alpha), equal to 0 at the origin. Requires beta > alpha > 0.
Multiplier gw_psi(double alpha, double beta);

WienerEstimate gw_constant(double alpha, double beta, const GridSpec& grid,
                           const WienerOptions& options = {});

/// Ratios ||f - M_beta f||_p / ||f - M_alpha f||_p against one constant for all cases.
SubordinationReport gw_verify(double alpha, double beta, const std::vector<TestInput>& tests,
                              const std::vector<double>& eps_list, const std::vector<double>& ps,
                              const GridSpec& grid, double tolerance = 1e-2);

}  // namespace subord
