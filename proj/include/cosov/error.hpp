#pragma once

#include <stdexcept>
#include <string>

namespace cosov {

enum class errc {
    division_by_zero,
    field_mismatch,
    dimension_mismatch,
    singular,
    inconsistent,
    genset_mismatch,
    missing_image,
    degree_exceeded,
    missing_inverse,
    missing_value,
    inverse_check_failed,
    intertwiner_check_failed,
    algebra_mismatch,
    not_a_group,
    degenerate,
    beta_missing,
    no_solution,
    no_invertible_solution,
    unknown_label,
    not_sovereign,
    parse_error,
    schema_error,
    invalid_argument,
};

class Error : public std::runtime_error {
  public:
    Error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
    errc code() const { return code_; }

  private:
    errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace cosov
