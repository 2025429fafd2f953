#include "subord/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "subord/errors.hpp"

namespace subord {

namespace {
constexpr double kNegligibleRhs = 1e-12;
}

std::size_t SubordinationReport::skipped_count() const {
  return static_cast<std::size_t>(
      std::count_if(cases.begin(), cases.end(), [](const CaseResult& c) { return c.skipped; }));
}

void SubordinationReport::finalize() {
  bool any = false;
  worst_ratio = 0.0;
  for (const auto& c : cases) {
    if (c.skipped) continue;
    any = true;
    worst_ratio = std::max(worst_ratio, c.ratio);
  }
  if (!any) throw Error(ErrorCode::all_cases_skipped, "every test case was skipped");
  passed = worst_ratio <= constant * (1.0 + tolerance);
}

std::string format_number(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  if (std::isnan(x)) return "nan";
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

std::string format_exponent(double p) { return format_number(p); }

CaseResult make_case(std::string case_id, std::string test_function, std::string exponents,
                     std::optional<double> epsilon, double lhs, double rhs) {
  CaseResult c;
  c.case_id = std::move(case_id);
  c.test_function = std::move(test_function);
  c.exponents = std::move(exponents);
  c.epsilon = epsilon;
  c.lhs_norm = lhs;
  c.rhs_norm = rhs;
  if (rhs < kNegligibleRhs) {
    c.skipped = true;
    c.note = "rhs norm below 1e-12";
  } else {
    c.ratio = lhs / rhs;
  }
  return c;
}

}  // namespace subord
