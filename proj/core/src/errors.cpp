#include "valence/errors.hpp"

namespace valence {

const char* errc_name(errc e) {
  switch (e) {
    case errc::mixed_fields: return "MixedFields";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::invalid_exponent: return "InvalidExponent";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::arity_mismatch: return "ArityMismatch";
    case errc::degree_zero: return "DegreeZero";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::zero_resultant: return "ZeroResultant";
    case errc::mixed_rings: return "MixedRings";
    case errc::precision_exhausted: return "PrecisionExhausted";
    case errc::insufficient_precision: return "InsufficientPrecision";
    case errc::not_integral: return "NotIntegral";
    case errc::zero_denominator: return "ZeroDenominator";
    case errc::hypotheses_failed: return "HypothesesFailed";
    case errc::not_simple_root: return "NotSimpleRoot";
    case errc::not_residue_root: return "NotResidueRoot";
    case errc::degenerate_algebra: return "DegenerateAlgebra";
    case errc::not_normic: return "NotNormic";
    case errc::hypothesis_failed: return "HypothesisFailed";
    case errc::invalid_input: return "InvalidInput";
    case errc::syntax_error: return "SyntaxError";
    case errc::unknown_symbol: return "UnknownSymbol";
    case errc::arity_error: return "ArityError";
    case errc::unbound_variable: return "UnboundVariable";
    case errc::not_ultra: return "NotUltra";
    case errc::already_member: return "AlreadyMember";
    case errc::invalid_descriptor: return "InvalidDescriptor";
    case errc::wrong_language: return "WrongLanguage";
  }
  return "Error";
}

}  // namespace valence
