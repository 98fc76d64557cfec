#ifndef VALENCE_ERRORS_HPP
#define VALENCE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace valence {

/// Machine-checkable error kinds. Every exception thrown by the library
/// carries one of these so callers (and tests) can dispatch without
/// parsing message text.
enum class errc {
  mixed_fields,
  division_by_zero,
  invalid_exponent,
  budget_exceeded,
  arity_mismatch,
  degree_zero,
  zero_polynomial,
  zero_resultant,
  mixed_rings,
  precision_exhausted,
  insufficient_precision,
  not_integral,
  zero_denominator,
  hypotheses_failed,
  not_simple_root,
  not_residue_root,
  degenerate_algebra,
  not_normic,
  hypothesis_failed,
  invalid_input,
  syntax_error,
  unknown_symbol,
  arity_error,
  unbound_variable,
  not_ultra,
  already_member,
  invalid_descriptor,
  wrong_language,
};

const char* errc_name(errc e);

class error : public std::runtime_error {
 public:
  error(errc kind, const std::string& msg)
      : std::runtime_error(std::string(errc_name(kind)) + ": " + msg), kind_(kind) {}
  errc kind() const { return kind_; }

 private:
  errc kind_;
};

/// Violated value-level precondition (wrong field, division by zero, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// An enumeration or term budget was exceeded. Budgets are explicit
/// configuration; exceeding one is an error, never a silent downgrade.
class budget_error : public error {
 public:
  budget_error(const std::string& msg) : error(errc::budget_exceeded, msg) {}
};

/// A result could not be determined at the precision carried by the inputs.
class precision_error : public error {
 public:
  using error::error;
};

/// Text could not be parsed; `position` is a 0-based byte offset.
class parse_error : public error {
 public:
  parse_error(errc kind, const std::string& msg, std::size_t position)
      : error(kind, msg + " (at offset " + std::to_string(position) + ")"),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace valence

#endif
