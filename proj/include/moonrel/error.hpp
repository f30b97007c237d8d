#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace moonrel {

enum class ErrorKind {
  division_by_zero,
  zero_input,
  zero_denominator,
  constant_inner_function,
  degree_mismatch,
  not_normal_form,
  different_target,
  precision_exhausted,
  leading_mismatch,
  no_rational_solution,
  underdetermined_system,
  insufficient_precision,
  nonpositive_area,
  parse_error,
  non_monic_principal_part,
  duplicate_name,
  unknown_node,
  verification_failure,
  identical_k,
  invalid_argument,
};

std::string_view to_string(ErrorKind kind);

// Every library failure carries a machine-readable category.
class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

}  // namespace moonrel
