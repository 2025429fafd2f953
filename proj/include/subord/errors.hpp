#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace subord {

enum class ErrorCode {
  invalid_parameter,
  grid_mismatch,
  grid_too_small,
  atom_off_grid,
  inconsistent_limit,
  non_convergent,
  not_applicable,
  nested_zeros_violated,
  fill_undefined,
  all_cases_skipped,
  kernel_unresolvable,
  verification_failure,
  hypotheses_violated,
  multiplicity_obstruction,
  neighborhood_degenerate,
  bandwidth_exceeded,
  inadmissible_exponents,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace subord
