#ifndef VALENCE_UPROD_HPP
#define VALENCE_UPROD_HPP

#include <cstdint>
#include <set>

#include "valence/logic.hpp"

namespace valence {
namespace logic {

/// Explicit family of subsets of {0..index_size-1}, each a bitmask.
/// A filter contains the full set, excludes the empty set, and is closed
/// under intersection and superset.
struct SetFamily {
  int index_size = 0;
  std::set<std::uint64_t> members;

  std::uint64_t full_mask() const {
    return index_size >= 64 ? ~0ull : ((1ull << index_size) - 1);
  }
  bool contains(std::uint64_t subset) const { return members.count(subset) > 0; }
};

bool is_filter(const SetFamily& candidate);
bool is_ultrafilter(const SetFamily& candidate);

/// The trivial filter {I}.
SetFamily trivial_filter(int index_size);
/// All subsets containing j.
SetFamily principal_filter(int index_size, int j);

/// Smallest filter containing D and the complement of X; requires
/// X not in D (members are {Y : exists Z in D with Z \ X subset of Y}).
SetFamily extend_excluding(const SetFamily& d, std::uint64_t x);

/// Greedy ultrafilter extension (finite index sets make the chain
/// argument a terminating loop): repeatedly picks the least subset X, in
/// increasing bitmask order, with neither X nor its complement in the
/// filter, and extends to contain the complement. The result is an
/// ultrafilter containing the input, principal on a finite index set.
SetFamily extend_to_ultrafilter(SetFamily d);

/// The unique index j with {j} in a (finite) ultrafilter.
int principal_index(const SetFamily& ultra);

/// Ultraproduct of finite structures over one language with respect to an
/// ultrafilter on the index set: the domain consists of equivalence
/// classes of choice functions under agreement on an ultrafilter set,
/// with interpretations induced pointwise. Classes are canonicalized by
/// their lexicographically least representative (the representative that
/// is zero outside the filter's minimal set).
struct Ultraproduct {
  FiniteStructure structure;
  /// representative choice function of each class, flattened (class i
  /// occupies entries [i*N, (i+1)*N))
  std::vector<int> representatives;
  int index_count = 0;
  /// the bijection class -> element of the factor at the filter's
  /// principal index (the collapse map)
  std::vector<int> collapse;
  int collapse_index = 0;
};

Ultraproduct ultraproduct(const std::vector<FiniteStructure>& structures, const SetFamily& ultra,
                          long long budget = 100'000);

/// The Fundamental Theorem of Ultraproducts checked on one sentence: the
/// product satisfies phi exactly when the set of factor indices
/// satisfying phi lies in the ultrafilter.
struct LosReport {
  bool product_truth = false;
  std::uint64_t index_truth_set = 0;
  bool set_in_ultrafilter = false;
  bool agree = false;
};

LosReport los_check(const std::vector<FiniteStructure>& structures, const SetFamily& ultra,
                    const Formula& sentence, long long budget = 100'000,
                    long long eval_budget = kDefaultEvalBudget);

}  // namespace logic
}  // namespace valence

#endif
