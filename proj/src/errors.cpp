#include "subord/errors.hpp"

namespace subord {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_parameter: return "invalid-parameter";
    case ErrorCode::grid_mismatch: return "grid-mismatch";
    case ErrorCode::grid_too_small: return "grid-too-small";
    case ErrorCode::atom_off_grid: return "atom-off-grid";
    case ErrorCode::inconsistent_limit: return "inconsistent-limit";
    case ErrorCode::non_convergent: return "non-convergent";
    case ErrorCode::not_applicable: return "not-applicable";
    case ErrorCode::nested_zeros_violated: return "nested-zeros-violated";
    case ErrorCode::fill_undefined: return "fill-undefined";
    case ErrorCode::all_cases_skipped: return "all-cases-skipped";
    case ErrorCode::kernel_unresolvable: return "kernel-unresolvable";
    case ErrorCode::verification_failure: return "verification-failure";
    case ErrorCode::hypotheses_violated: return "hypotheses-violated";
    case ErrorCode::multiplicity_obstruction: return "multiplicity-obstruction";
    case ErrorCode::neighborhood_degenerate: return "neighborhood-degenerate";
    case ErrorCode::bandwidth_exceeded: return "bandwidth-exceeded";
    case ErrorCode::inadmissible_exponents: return "inadmissible-exponents";
  }
  return "unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace subord
