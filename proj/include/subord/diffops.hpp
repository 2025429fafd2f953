#pragma once

#include <string>
#include <vector>

#include "subord/measures.hpp"
#include "subord/multiplier.hpp"
#include "subord/polynomial.hpp"
#include "subord/report.hpp"

namespace subord {

struct HypothesisCheck {
  bool admissible = true;
  std::vector<std::string> violations;
};

/// deg Q <= deg P1, deg P2 <= deg P1, and Q vanishes at every common real zero of P1, P2.
HypothesisCheck lemma2_hypotheses(const Polynomial& q, const Polynomial& p1, const Polynomial& p2,
                                  double cluster_tolerance = 1e-7);

struct Neighborhood {
  double center;
  double delta;
  int p1_multiplicity;
  int p2_multiplicity;  // 0 when P2 does not vanish at the center
};

struct Lemma2Diagnostics {
  double identity_residual = 0.0;
  double q_sup = 0.0;
  double h2_sup = 0.0;
  double lip_h1 = 0.0;
  double lip_h2 = 0.0;
  cplx h1_infinity;
};

struct Lemma2Decomposition {
  Polynomial q;
  Polynomial p1;
  Polynomial p2;
  Multiplier h1;
  Multiplier h2;
  std::vector<Neighborhood> neighborhoods;
  Lemma2Diagnostics diagnostics;
};

/// Q = h1 P1 + h2 P2 with h1 = Q/P1 and h2 = 0 away from the real zeros of P1,
/// h1 linear and h2 = (Q - h1 P1)/P2 near them. Diagnostics are measured on
/// the dual nodes of `grid` plus a 16x finer local grid in each neighborhood.
/// Throws hypotheses-violated, neighborhood-degenerate or multiplicity-obstruction.
Lemma2Decomposition lemma2_construct(const Polynomial& q, const Polynomial& p1,
                                     const Polynomial& p2, const GridSpec& grid,
                                     double cluster_tolerance = 1e-7);

/// Diagnostics of an existing decomposition on another grid.
Lemma2Diagnostics lemma2_diagnostics(const Lemma2Decomposition& dec, const GridSpec& grid,
                                     std::size_t local_refinement = 16);

/// P(-i d/dx) f, i.e. inverse_ft(P(y) f^(y)). Throws bandwidth-exceeded unless
/// |P f^| at both dual-grid edges is below 1e-8 of its peak.
SampledFunction apply_diffop(const Polynomial& p, const SampledFunction& f);

struct ExponentRange {
  double lo;
  double hi;
  bool contains(double p) const noexcept { return p >= lo && p <= hi; }
};

struct YoungExponents {
  ExponentRange p1;
  ExponentRange p2;
};

YoungExponents young_exponents(double q, int deg_q, int deg_p1, int deg_p2);
/// s with 1/s = 1 + 1/q - 1/p.
double young_partner(double q, double p);

struct IdentityResidual {
  double residual;  // sup |lhs - rhs| / (1 + sup |lhs|)
  double lhs_sup;
};

IdentityResidual verify_identity(const Lemma2Decomposition& dec, const SampledFunction& f);

struct DiffopConstant {
  double k1;
  double k2;
  double constant;  // max(k1, k2)
};

/// Young-adjusted factors: the W norm of h_i when p_i = q, otherwise the
/// L_s norm of the density of h_i with 1/s = 1 + 1/q - 1/p_i.
/// Throws inadmissible-exponents or non-convergent.
DiffopConstant diffop_constant(const Lemma2Decomposition& dec, double q, double p1, double p2,
                               const GridSpec& grid);

/// ||Q f||_q against ||P1 f||_p1 + ||P2 f||_p2. Tests that exceed the grid
/// bandwidth are recorded as skipped.
SubordinationReport diffop_subordination(const Lemma2Decomposition& dec, double q, double p1,
                                         double p2, const std::vector<TestInput>& tests,
                                         const GridSpec& grid, double tolerance = 1e-2);

}  // namespace subord
