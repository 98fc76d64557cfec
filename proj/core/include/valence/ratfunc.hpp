#ifndef VALENCE_RATFUNC_HPP
#define VALENCE_RATFUNC_HPP

#include "valence/fq.hpp"
#include "valence/poly.hpp"

namespace valence {

/// Rational function over F_q: a reduced fraction of dense polynomials
/// with a monic denominator. Serves as a coefficient domain (it is a
/// field, so exact division is plain division).
class RatFunc {
 public:
  /// 0 (denominator 1 over the given field)
  static RatFunc zero(const FqField* field) {
    return RatFunc(UniPoly<FqElem>(), UniPoly<FqElem>::constant(field->one()));
  }
  static RatFunc from_poly(UniPoly<FqElem> num, const FqField* field) {
    return RatFunc(std::move(num), UniPoly<FqElem>::constant(field->one()));
  }
  static RatFunc constant(const FqElem& a) {
    return from_poly(UniPoly<FqElem>::constant(a), a.field());
  }
  /// t^k
  static RatFunc variable(const FqField* field, int k = 1) {
    return from_poly(UniPoly<FqElem>::monomial(field->one(), k), field);
  }
  RatFunc(UniPoly<FqElem> num, UniPoly<FqElem> den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero_poly()) throw domain_error(errc::zero_denominator, "zero denominator");
    reduce();
  }

  const UniPoly<FqElem>& num() const { return num_; }
  const UniPoly<FqElem>& den() const { return den_; }
  bool is_zero_value() const { return num_.is_zero_poly(); }
  const FqField* field() const { return den_.leading().field(); }

  RatFunc operator+(const RatFunc& o) const {
    return RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
  }
  RatFunc operator-() const { return RatFunc(-num_, den_); }
  RatFunc operator-(const RatFunc& o) const { return *this + (-o); }
  RatFunc operator*(const RatFunc& o) const { return RatFunc(num_ * o.num_, den_ * o.den_); }
  RatFunc inv() const {
    if (num_.is_zero_poly()) throw domain_error(errc::division_by_zero, "inverse of zero");
    return RatFunc(den_, num_);
  }
  RatFunc operator/(const RatFunc& o) const { return *this * o.inv(); }

  bool operator==(const RatFunc& o) const { return num_ == o.num_ && den_ == o.den_; }
  bool operator!=(const RatFunc& o) const { return !(*this == o); }

  std::string to_string() const {
    if (den_ == UniPoly<FqElem>::constant(one_like(den_.leading()))) return num_.to_string("t");
    return "(" + num_.to_string("t") + ")/(" + den_.to_string("t") + ")";
  }

 private:
  void reduce() {
    if (num_.is_zero_poly()) {
      den_ = UniPoly<FqElem>::constant(one_like(den_.leading()));
      return;
    }
    auto g = poly_gcd(num_, den_);
    if (g.degree() >= 1) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
    // monic denominator normalization
    FqElem lead = den_.leading();
    if (!lead.is_one()) {
      FqElem inv = lead.inv();
      num_ = num_.scale(inv);
      den_ = den_.scale(inv);
    }
  }

  UniPoly<FqElem> num_;
  UniPoly<FqElem> den_;
};

inline RatFunc zero_like(const RatFunc& a) { return RatFunc::zero(a.field()); }
inline RatFunc one_like(const RatFunc& a) {
  return RatFunc::constant(a.field()->one());
}
inline bool is_zero(const RatFunc& a) { return a.is_zero_value(); }
inline RatFunc divexact(const RatFunc& a, const RatFunc& b) { return a / b; }

}  // namespace valence

#endif
