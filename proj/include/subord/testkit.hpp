#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subord/fourier.hpp"
#include "subord/report.hpp"

namespace subord {

enum class Family { gaussian, exp_abs, bump, bspline, modulated_gaussian };

/// Stand-in smoothness for families that are C^infinity with integrable derivatives.
inline constexpr int kSmooth = 1000;

class TestFunctionSpec {
 public:
  static TestFunctionSpec gaussian(double a);                   // e^{-a x^2}
  static TestFunctionSpec exp_abs(double a);                    // e^{-a|x|}
  static TestFunctionSpec bump(double radius);                  // e exp(-1/(1-(x/R)^2)), peak 1
  static TestFunctionSpec bspline(int order);                   // centered cardinal B-spline
  static TestFunctionSpec modulated_gaussian(double a, double omega);  // e^{-a x^2 + i omega x}

  const std::string& id() const noexcept { return id_; }
  Family family() const noexcept { return family_; }
  /// Largest r with f, f^(r) in L1.
  int smoothness_order() const noexcept { return smoothness_; }
  bool has_known_ft() const noexcept { return family_ != Family::bump; }

  cplx value(double x) const;
  /// Closed-form transform; throws invalid-parameter when the family has none.
  cplx known_ft(double y) const;

 private:
  TestFunctionSpec(std::string id, Family family, double a, double b, int smoothness);

  std::string id_;
  Family family_;
  double a_;
  double b_;
  int smoothness_;
};

/// Samples the spec on the space grid; grid-too-small unless both end nodes
/// are below 1e-10 of the peak.
SampledFunction materialize(const TestFunctionSpec& spec, const GridSpec& grid);
TestInput materialize_input(const TestFunctionSpec& spec, const GridSpec& grid);
std::vector<TestInput> materialize_all(const std::vector<TestFunctionSpec>& specs,
                                       const GridSpec& grid);

struct SuitePurpose {
  enum Kind { means, diffops } kind = means;
  int order = 0;  // r for diffops

  static SuitePurpose for_means() { return {means, 0}; }
  static SuitePurpose for_diffops(int r) { return {diffops, r}; }
};

std::vector<TestFunctionSpec> default_suite(SuitePurpose purpose);

/// max |forward_ft(f) - known_ft| / max |known_ft| over |y| <= ymax.
double known_ft_error(const TestFunctionSpec& spec, const GridSpec& grid, double ymax = 10.0);

}  // namespace subord
