#ifndef VALENCE_LOGIC_HPP
#define VALENCE_LOGIC_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "valence/errors.hpp"
#include "valence/fq.hpp"

namespace valence {
namespace logic {

/// First-order language: constant, function and relation symbols with
/// arities. Names are unique across the three kinds.
struct Language {
  std::vector<std::string> constants;
  std::vector<std::pair<std::string, int>> functions;
  std::vector<std::pair<std::string, int>> relations;

  void validate() const;
  bool has_constant(const std::string& name) const;
  int function_arity(const std::string& name) const;  // -1 when absent
  int relation_arity(const std::string& name) const;  // -1 when absent

  /// {+, *, -, 0, 1}
  static Language field();
  /// {*, 1}
  static Language group();
  /// {+, *, -, 0, 1, v, V, <=}: the one-sorted language of valued fields
  /// with cross section.
  static Language valued_field();
};

struct Term {
  enum class Kind { constant, variable, apply };
  Kind kind = Kind::variable;
  std::string name;        // constant or function symbol
  int var = -1;            // variable index (v1 = 1)
  std::vector<Term> args;

  static Term constant(std::string n);
  static Term variable(int index);
  static Term apply(std::string fn, std::vector<Term> arguments);

  bool operator==(const Term& o) const;
};

class Formula {
 public:
  enum class Kind { eq, rel, lnot, land, lor, implies, iff, exists, forall };

  Kind kind() const { return kind_; }
  const std::vector<Term>& terms() const { return terms_; }
  const std::string& rel() const { return rel_; }
  const std::vector<Formula>& children() const { return children_; }
  int var() const { return var_; }

  bool operator==(const Formula& o) const;

  friend Formula mk_eq(Term a, Term b);
  friend Formula mk_rel(std::string name, std::vector<Term> terms);
  friend Formula mk_not(Formula f);
  friend Formula mk_and(Formula a, Formula b);
  friend Formula mk_or(Formula a, Formula b);
  friend Formula mk_implies(Formula a, Formula b);
  friend Formula mk_iff(Formula a, Formula b);
  friend Formula mk_exists(int var, Formula body);
  friend Formula mk_forall(int var, Formula body);
  friend struct FormulaAccess;

 private:
  Kind kind_ = Kind::eq;
  std::vector<Term> terms_;
  std::string rel_;
  std::vector<Formula> children_;
  int var_ = -1;
};

Formula mk_eq(Term a, Term b);
Formula mk_rel(std::string name, std::vector<Term> terms);
Formula mk_not(Formula f);
Formula mk_and(Formula a, Formula b);
Formula mk_or(Formula a, Formula b);
Formula mk_implies(Formula a, Formula b);
Formula mk_iff(Formula a, Formula b);
Formula mk_exists(int var, Formula body);
Formula mk_forall(int var, Formula body);

/// Conjunction / disjunction of a nonempty list (left-assoc).
Formula mk_and_all(std::vector<Formula> fs);

std::set<int> free_variables(const Formula& f);
bool is_sentence(const Formula& f);

/// Renames bound variables so no variable is both free and bound and no
/// variable is bound twice. Formula constructors apply this themselves;
/// exposed for tests.
Formula normalize_bound(const Formula& f);

/// Explicit finite L-structure: a nonempty domain plus total
/// interpretation tables.
class FiniteStructure {
 public:
  FiniteStructure(Language lang, std::vector<std::string> element_names);

  const Language& language() const { return lang_; }
  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& element_names() const { return names_; }
  int element_index(const std::string& name) const;

  void set_constant(const std::string& name, int element);
  /// Row-major table of size^arity entries, first argument most
  /// significant.
  void set_function(const std::string& name, std::vector<int> table);
  void set_relation(const std::string& name, std::set<std::vector<int>> tuples);

  /// All constants and functions must be defined and in range.
  void validate() const;

  int constant(const std::string& name) const;
  int apply_function(const std::string& name, const std::vector<int>& args) const;
  bool relation_holds(const std::string& name, const std::vector<int>& args) const;

  const std::vector<int>& function_table(const std::string& name) const;
  const std::set<std::vector<int>>& relation_tuples(const std::string& name) const;

 private:
  Language lang_;
  std::vector<std::string> names_;
  std::map<std::string, int> name_index_;
  std::map<std::string, int> constants_;
  std::map<std::string, std::vector<int>> functions_;
  std::map<std::string, std::set<std::vector<int>>> relations_;
};

inline constexpr long long kDefaultEvalBudget = 10'000'000;

/// Assignment of domain elements to variables (index -> element, absent
/// entries unset).
using Assignment = std::map<int, int>;

/// Tarski satisfaction by direct recursion over the formula; quantifiers
/// enumerate the finite domain. The budget counts quantifier
/// instantiations actually visited (the worst case is |domain|^depth, but
/// short-circuiting usually visits far fewer).
bool satisfies(const FiniteStructure& m, const Formula& f, const Assignment& assignment = {},
               long long budget = kDefaultEvalBudget);

using Theory = std::vector<Formula>;

struct TheoryReport {
  bool models = true;
  int failing_index = -1;
};

/// M |= T with the first failing sentence reported on failure.
TheoryReport models_theory(const FiniteStructure& m, const Theory& t,
                           long long budget = kDefaultEvalBudget);

/// The valued-field axiom corpus over L_VF: field axioms, valuation
/// axioms, value-group axioms, linear-order axioms, and cross-section
/// axioms. The default corrects two defects of the verbatim list: the
/// order-compatibility axiom reads v1*v3 <= v2*v3 (the verbatim right
/// side is the tautology v1*v3 <= v1*v3), and the cross-section axiom
/// forall v1 V(v(v1)) is guarded by v1 != 0 (the image of infinity under
/// the cross section is the field zero, which is not a group element).
/// `verbatim` reproduces the uncorrected list.
Theory vf_axioms(bool verbatim = false);

/// 1 + 1 + .. + 1 = 0 (p times).
Formula char_sentence(std::int64_t p);

/// Hensel's lemma for polynomials of degree at most n as a single
/// L_VF-sentence, with the abbreviations (poly-in-O, Monic, ResEq,
/// ResRelPrime, coefficient quantifiers) fully expanded.
Formula hensel_sentence(int n);

/// Number of degree-d monomials in d^2+1 variables.
long long theta(int d);

/// The sentence expressing that every nonzero homogeneous form of degree
/// d in d^2+1 variables has a nontrivial zero.
Formula c2d_sentence(int d);

/// Relativization to the residue field: quantifiers and free variables
/// guarded by 1 <= v(x), equality replaced by congruence modulo the
/// maximal ideal (1 < v(t1 + -(t2))). Input must be over the field
/// language.
Formula relativize_residue(const Formula& f);

/// Relativization to the value group: quantifiers and free variables
/// guarded by V(x). Input must be over the group language.
Formula relativize_valuegroup(const Formula& f);

/// F_q as a structure over the field language.
FiniteStructure field_structure(const FqField* field);

/// The trivial valued field on F_q as an L_VF structure: v(0) = 0,
/// v(x) = 1 otherwise, V = {1}, and <= the order 1 <= 1, 1 <= 0, 0 <= 0
/// (0 plays the role of the infinity point under the cross section).
FiniteStructure trivial_valued_field(const FqField* field);

/// Structure with the domain permuted (an isomorphic copy; perm maps old
/// index -> new index).
FiniteStructure permuted_structure(const FiniteStructure& m, const std::vector<int>& perm);

/// Checks that `map` (indices of m -> indices of n) is an L-isomorphism.
bool is_isomorphism(const FiniteStructure& m, const FiniteStructure& n,
                    const std::vector<int>& map);

/// Parses the concrete grammar: keywords forall/exists (maximal scope,
/// optional '.'), operators = & | ! -> <->, infix + * <=, prefix
/// applications like -(x), v(x), V(x), variables v1 v2 .., constants from
/// the language. Precedence: ! > & > | > -> > <->.
Formula parse_formula(const std::string& text, const Language& lang);
std::string print_formula(const Formula& f);

}  // namespace logic
}  // namespace valence

#endif
