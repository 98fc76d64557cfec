#ifndef VALENCE_FORMS_HPP
#define VALENCE_FORMS_HPP

#include <optional>

#include "valence/counting.hpp"
#include "valence/fq.hpp"
#include "valence/local.hpp"
#include "valence/poly.hpp"

namespace valence {

/// Multiplication data of a finite extension algebra over a prime base
/// field: basis w_1..w_e with w_k * w_l = sum_j c(k,l,j) w_j. Construction
/// verifies commutativity, the unit, associativity, and that the algebra
/// has no zero divisors (every nonzero multiplication operator is
/// invertible), so the data describe a field.
class ExtensionData {
 public:
  /// Power-basis data of F_{p^e} over its prime subfield.
  static ExtensionData from_field(const FqField* ext);
  /// Explicit structure constants over a prime field; w_1 must be the
  /// unit. constants[k][l][j] = c(k+1, l+1, j+1).
  static ExtensionData from_constants(const FqField* base,
                                      std::vector<std::vector<std::vector<FqElem>>> constants);

  const FqField* base() const { return base_; }
  /// Host extension field when built by from_field (used to map points
  /// back into E), otherwise null.
  const FqField* host() const { return host_; }
  int degree() const { return degree_; }
  const FqElem& c(int k, int l, int j) const { return constants_[k][l][j]; }

 private:
  ExtensionData(const FqField* base, const FqField* host, int degree,
                std::vector<std::vector<std::vector<FqElem>>> constants);
  void verify() const;
  const FqField* base_;
  const FqField* host_;
  int degree_;
  std::vector<std::vector<std::vector<FqElem>>> constants_;
};

/// Norm form of the extension: determinant of the e x e matrix with (j,l)
/// entry sum_k x_k c(k,l,j). Homogeneous of degree e in e variables with
/// only the trivial zero over the base field (verified by brute force
/// when q^e is within budget). Requires e > 1.
MultiPoly<FqElem> norm_form(const ExtensionData& ext, long long verify_budget = 10'000);

/// Normic tower: phi composed with fresh copies of itself, m - 1 times;
/// degree and variable count d^m. m = 1 returns phi. Requires
/// degree(phi) = nvars(phi).
MultiPoly<FqElem> normic_tower(const MultiPoly<FqElem>& phi, int m,
                               long long term_budget = 200'000);

/// The iterated composition underlying the common-zero argument for C_i
/// fields, plus the bookkeeping needed to walk a zero of the composed
/// form back to a common zero of the inputs.
class LangNagataReduction {
 public:
  /// forms: homogeneous of one degree d in n variables; phi: normic of
  /// degree l >= r = forms.size(); i: the ambient field's C_i exponent.
  /// Requires n > r * d^i. Levels are composed until the variable count
  /// exceeds degree^i.
  LangNagataReduction(std::vector<MultiPoly<FqElem>> forms, MultiPoly<FqElem> phi, int i,
                      long long term_budget = 200'000);

  const MultiPoly<FqElem>& composed() const { return levels_.back(); }
  int level_count() const { return static_cast<int>(levels_.size()); }
  int groups_at(int level) const { return groups_[level]; }
  /// Variable index of the composed form -> (copy j, original variable k),
  /// both 0-based.
  std::pair<int, int> var_label(int index) const;

  /// Walks a nontrivial zero of the composed form down the levels to a
  /// nontrivial common zero of the input forms.
  std::vector<FqElem> extract(const std::vector<FqElem>& zero) const;

 private:
  std::vector<MultiPoly<FqElem>> forms_;
  MultiPoly<FqElem> phi_;
  int n_ = 0, r_ = 0, d_ = 0;
  std::vector<MultiPoly<FqElem>> levels_;  // composed forms, level 1..M
  std::vector<int> groups_;                // complete groups per level
  std::vector<int> slots_;                 // outer arity per level
};

/// Base-change expansion over an algebraic extension: substituting
/// sum_k x_{j,k} w_k for x_j writes f = sum_k f_k w_k with each f_k
/// homogeneous of the same degree over the base field in e*n variables
/// (variable layout: block j holds x_{j,1}..x_{j,e}). f must have
/// coefficients in ext's host field.
std::vector<MultiPoly<FqElem>> expand_algebraic(const MultiPoly<FqElem>& f,
                                                const ExtensionData& ext);

/// Reassembles a base-field point in e*n variables into E^n.
std::vector<FqElem> algebraic_point(const std::vector<FqElem>& base_point,
                                    const ExtensionData& ext);

/// Least s >= 0 with (n - d^(i+1)) s > (r+1) d^i - n. Requires
/// n > d^(i+1).
int minimal_s(int n, int d, int i, int r);

/// Transcendental expansion: substituting sum_{k<=s} x_{j,k} t^k for x_j
/// in a form over F_q[t] and collecting powers of t yields forms
/// f_0..f_{ds+r} over F_q in n(s+1) variables (variable layout: block j
/// holds x_{j,0}..x_{j,s}; r is the largest t-degree of the coefficients).
std::vector<MultiPoly<FqElem>> expand_transcendental(const MultiPoly<UniPoly<FqElem>>& f, int s);

/// A zero of a form modulo pi^(modulus_exponent+1) with at least one
/// coordinate not divisible by pi. Coordinates are digit vectors of
/// length modulus_exponent + 1 over the residue field.
struct PrimitiveZero {
  std::vector<std::vector<FqElem>> point;
  int modulus_exponent = 0;

  bool is_primitive() const {
    for (const auto& c : point)
      if (!c.empty() && !c[0].is_zero()) return true;
    return false;
  }
  std::vector<TruncatedLocal> as_locals(const LocalRing* ring) const;
  std::string to_string() const;
};

/// Lexicographically least primitive zero of f modulo pi^(m+1), by full
/// enumeration of O_m^n in the canonical order (coordinates ordered by
/// their base-pi integer encoding, first coordinate most significant).
/// Coefficients must be integral and known to precision >= m.
std::optional<PrimitiveZero> primitive_zero_mod(const MultiPoly<TruncatedLocal>& f, int m,
                                                long long budget = kDefaultEnumBudget);

/// Bounded-depth backtracking over the projection tree: extends primitive
/// residue zeros digit by digit to modulus exponent `depth`, exploring
/// branches in lexicographic order, and returns the first full-depth
/// witness. Exhausts the tree before reporting absence, so an absent
/// result is a proof that no primitive zero exists at that depth.
std::optional<PrimitiveZero> lift_zero_search(const MultiPoly<TruncatedLocal>& f, int depth,
                                              long long budget = kDefaultEnumBudget);

/// The series-mode C_2 pipeline for n > d^2: truncates the coefficients
/// to polynomials in t of degree <= m, finds a nontrivial zero of the
/// truncation over F_q(t) through expand_transcendental plus common-zero
/// search (trying expansion levels s = 0,1,.. up to minimal_s and taking
/// the first hit), normalizes by the minimal-valuation coordinate to a
/// primitive zero in F_q[t], and reduces modulo t^(m+1).
PrimitiveZero c2_witness_series(const MultiPoly<TruncatedLocal>& f, int m,
                                long long budget = kDefaultEnumBudget);

/// Evaluates f at local coordinates and checks the result vanishes modulo
/// pi^(m+1) (verification helper used by searches, the CLI and tests).
bool verify_zero_mod(const MultiPoly<TruncatedLocal>& f, const PrimitiveZero& witness);

}  // namespace valence

#endif
