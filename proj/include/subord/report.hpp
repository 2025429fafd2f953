#pragma once

#include <optional>
#include <string>
#include <vector>

#include "subord/fourier.hpp"

namespace subord {

/// A test function together with the identifier reports refer to it by.
struct TestInput {
  std::string id;
  SampledFunction f;
};

struct CaseResult {
  std::string case_id;
  std::string test_function;
  std::string exponents;  // "2", "inf", or "q=2;p1=2;p2=1"
  std::optional<double> epsilon;
  double lhs_norm = 0.0;
  double rhs_norm = 0.0;
  double ratio = 0.0;
  bool skipped = false;
  std::string note;
};

struct SubordinationReport {
  double constant = 0.0;
  std::vector<CaseResult> cases;
  double worst_ratio = 0.0;
  double tolerance = 0.0;
  bool passed = false;

  std::size_t skipped_count() const;
  /// Sets worst_ratio and passed from the non-skipped cases; throws
  /// all-cases-skipped when nothing was measured.
  void finalize();
};

/// Shortest round-trip decimal text; infinities print as "inf"/"-inf".
std::string format_number(double x);
/// format_number for norm indices.
std::string format_exponent(double p);

/// Ratio recorded for one case, marking it skipped when rhs is negligible.
CaseResult make_case(std::string case_id, std::string test_function, std::string exponents,
                     std::optional<double> epsilon, double lhs, double rhs);

}  // namespace subord
