#ifndef VALENCE_COUNTING_HPP
#define VALENCE_COUNTING_HPP

#include <optional>

#include "valence/fq.hpp"
#include "valence/poly.hpp"

namespace valence {

inline constexpr long long kDefaultEnumBudget = 10'000'000;

/// Exact number of zeros of f in F_q^n by full enumeration. When
/// deg(f) < n the count is divisible by p (Chevalley-Warning); this
/// routine only counts, the divisibility claim lives in the tests.
/// Throws BudgetExceeded when q^n exceeds the budget.
long long count_zeros(const MultiPoly<FqElem>& f, const FqField* field,
                      long long budget = kDefaultEnumBudget);

/// Lexicographically least nonzero point with f = 0, or absent when no
/// nontrivial zero exists. f must be homogeneous of degree >= 1; when
/// nvars > deg the witness always exists (finite fields are C_1).
std::optional<std::vector<FqElem>> find_nontrivial_zero(const MultiPoly<FqElem>& f,
                                                        const FqField* field,
                                                        long long budget = kDefaultEnumBudget);

/// Lexicographically least nontrivial common zero of a family of
/// polynomials, or absent. Throws InvalidInput on an empty family.
std::optional<std::vector<FqElem>> common_zero_brute(const std::vector<MultiPoly<FqElem>>& forms,
                                                     const FqField* field,
                                                     long long budget = kDefaultEnumBudget);

}  // namespace valence

#endif
