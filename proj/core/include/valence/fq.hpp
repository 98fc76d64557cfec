#ifndef VALENCE_FQ_HPP
#define VALENCE_FQ_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "valence/errors.hpp"

namespace valence {

class FqElem;

/// Descriptor of a finite field F_{p^v}.
///
/// Prime fields are F_p with modulus x (v = 1). Extension fields are
/// F_p[x]/(modulus) for a monic irreducible modulus of degree v. Primality
/// of p and irreducibility of the modulus are checked eagerly at
/// construction; invalid descriptors throw.
///
/// Fields are interned: get(p, v) returns one shared instance per
/// descriptor, so element operations can detect mixed-field arguments by
/// pointer identity. Instances live for the process lifetime.
class FqField {
 public:
  static constexpr int kMaxDegree = 8;

  /// The field with q = p^v elements. For v > 1 the modulus is the
  /// lexicographically least monic irreducible polynomial of degree v,
  /// where candidates are ordered by the base-p integer value of their
  /// non-leading coefficients (constant term least significant).
  static const FqField* get(std::int64_t p, int v = 1);

  /// Field with an explicit monic modulus (coefficients constant-first,
  /// length v + 1, leading coefficient 1).
  static const FqField* with_modulus(std::int64_t p, const std::vector<std::int64_t>& modulus);

  /// Parses "F_p" or "F_p^v" (also accepts "Fp" and "Fp^v").
  static const FqField* parse(const std::string& text);

  std::int64_t p() const { return p_; }
  int v() const { return v_; }
  std::int64_t q() const { return q_; }
  const std::vector<std::int64_t>& modulus() const { return modulus_; }
  std::string descriptor() const;

  FqElem zero() const;
  FqElem one() const;
  /// Element from an integer residue (reduced mod p, embedded in the prime
  /// subfield).
  FqElem from_int(std::int64_t a) const;
  /// Element from explicit coefficients (constant-first; length <= v).
  FqElem from_coeffs(const std::vector<std::int64_t>& coeffs) const;
  /// The canonical enumeration maps [0, q) to elements by base-p digits of
  /// the index, constant coefficient least significant. This order is used
  /// everywhere a lexicographically least witness is promised.
  FqElem element_at(std::int64_t index) const;
  std::int64_t index_of(const FqElem& a) const;

  // Index-space operation tables (built at construction; q is desk scale).
  std::int64_t add_idx(std::int64_t a, std::int64_t b) const { return add_[a * q_ + b]; }
  std::int64_t mul_idx(std::int64_t a, std::int64_t b) const { return mul_[a * q_ + b]; }
  std::int64_t neg_idx(std::int64_t a) const { return neg_[a]; }
  std::int64_t sub_idx(std::int64_t a, std::int64_t b) const { return add_[a * q_ + neg_[b]]; }
  /// Index of the multiplicative inverse; throws division_by_zero for 0.
  std::int64_t inv_idx(std::int64_t a) const;

  FqField(const FqField&) = delete;
  FqField& operator=(const FqField&) = delete;

 private:
  FqField(std::int64_t p, int v, std::vector<std::int64_t> modulus);
  void build_tables();

  std::int64_t p_;
  int v_;
  std::int64_t q_;
  std::vector<std::int64_t> modulus_;
  std::vector<std::int32_t> add_;
  std::vector<std::int32_t> mul_;
  std::vector<std::int32_t> neg_;
  std::vector<std::int32_t> inv_;
};

/// Element of a finite field. Plain value type; the field descriptor is
/// borrowed (interned fields outlive all elements).
class FqElem {
 public:
  FqElem() : field_(nullptr), idx_(0) {}
  FqElem(const FqField* field, std::int64_t index) : field_(field), idx_(index) {}

  const FqField* field() const { return field_; }
  std::int64_t index() const { return idx_; }
  bool is_zero() const { return idx_ == 0; }
  bool is_one() const { return idx_ == 1; }

  /// Coefficients over F_p, constant-first, length v.
  std::vector<std::int64_t> coeffs() const;
  /// For prime-field elements, the residue in [0, p).
  std::int64_t residue_int() const;

  FqElem operator+(const FqElem& o) const { return FqElem(same(o), field_->add_idx(idx_, o.idx_)); }
  FqElem operator-(const FqElem& o) const { return FqElem(same(o), field_->sub_idx(idx_, o.idx_)); }
  FqElem operator*(const FqElem& o) const { return FqElem(same(o), field_->mul_idx(idx_, o.idx_)); }
  FqElem operator-() const { return FqElem(field_, field_->neg_idx(idx_)); }
  FqElem inv() const { return FqElem(field_, field_->inv_idx(idx_)); }
  FqElem operator/(const FqElem& o) const { return *this * o.inv(); }
  FqElem pow(std::int64_t e) const;

  bool operator==(const FqElem& o) const { return field_ == o.field_ && idx_ == o.idx_; }
  bool operator!=(const FqElem& o) const { return !(*this == o); }
  /// Canonical order (enumeration index). Elements of distinct fields are
  /// ordered by descriptor to keep the order total.
  bool operator<(const FqElem& o) const;

  /// Multiplicative order; throws division_by_zero for 0.
  std::int64_t mult_order() const;

  std::string to_string() const;

 private:
  const FqField* same(const FqElem& o) const {
    if (field_ != o.field_)
      throw domain_error(errc::mixed_fields, "elements of different fields");
    return field_;
  }
  const FqField* field_;
  std::int64_t idx_;
};

inline FqElem zero_like(const FqElem& a) { return a.field()->zero(); }
inline FqElem one_like(const FqElem& a) { return a.field()->one(); }
inline bool is_zero(const FqElem& a) { return a.is_zero(); }
/// Exact division (field division).
inline FqElem divexact(const FqElem& a, const FqElem& b) { return a / b; }

/// Generator of the cyclic group F_q^*: the least element (canonical order)
/// of multiplicative order exactly q - 1.
FqElem multiplicative_generator(const FqField& field);

/// Sum over all a in F_q of a^m, computed by direct summation. For m >= 1
/// this equals -1 when (q-1) | m and 0 otherwise; the closed form is left
/// to callers and tests. m = 0 is rejected.
FqElem power_sum(const FqField& field, std::int64_t m);

}  // namespace valence

#endif
