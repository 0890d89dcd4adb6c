#pragma once

#include <stdexcept>
#include <string>

namespace leib {

/// Failure categories surfaced by the library.  Precondition violations and
/// malformed inputs throw; mathematical verdicts (a map failing to be an
/// automorphism, a probe fit coming back empty, ...) are returned as values.
enum class errc {
  field_mismatch,
  dimension_mismatch,
  division_by_zero,
  factorial_not_invertible,
  invalid_field,
  field_too_small,
  n_too_small,
  n_too_small_for_probes,
  invalid_params,
  budget_exceeded,
  not_nilpotent,
  unsupported_point,
  parse_error,
  internal,
};

const char* errc_name(errc c);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

} // namespace leib
