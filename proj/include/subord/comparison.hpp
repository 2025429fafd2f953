#pragma once

#include <utility>
#include <vector>

#include "subord/measures.hpp"
#include "subord/multiplier.hpp"
#include "subord/report.hpp"

namespace subord {

enum class FillPolicy { limit_fill, explicit_values };

struct ComparisonSetup {
  Multiplier m1;
  Multiplier m2;
  /// A node is a zero of m when |m(y)| <= zero_tolerance * sup|m|.
  double zero_tolerance = 1e-9;
  FillPolicy fill = FillPolicy::limit_fill;
  /// (location, value) pairs used by FillPolicy::explicit_values; a pair
  /// covers the dual nodes within half a spacing of its location.
  std::vector<std::pair<double, cplx>> fill_values;

  static ComparisonSetup of(Multiplier m1, Multiplier m2) {
    return {std::move(m1), std::move(m2), 1e-9, FillPolicy::limit_fill, {}};
  }
};

/// m1/m2 off the zero set of m2, filled on it. Throws nested-zeros-violated
/// or fill-undefined (checked on `grid`, and again on every grid it is sampled on).
Multiplier ratio_multiplier(const ComparisonSetup& setup, const GridSpec& grid);

/// Wiener norm of the ratio: an upper bound for the best constant.
WienerEstimate comparison_constant(const ComparisonSetup& setup, const GridSpec& grid,
                                   const WienerOptions& options = {});

/// Compares ||m1(D) f||_p with ||m2(D) f||_p for every test and p.
/// Throws non-convergent when the constant is not converged.
SubordinationReport verify_subordination(const ComparisonSetup& setup,
                                         const std::vector<TestInput>& tests,
                                         const std::vector<double>& ps, const GridSpec& grid,
                                         double tolerance = 1e-3);

}  // namespace subord
