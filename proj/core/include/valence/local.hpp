#ifndef VALENCE_LOCAL_HPP
#define VALENCE_LOCAL_HPP

#include <climits>
#include <cstdint>
#include <string>
#include <vector>

#include "valence/fq.hpp"
#include "valence/poly.hpp"

namespace valence {

/// Descriptor of a truncated completion: Q_p in digit form (base-p carries)
/// or F_q((t)) (coefficient-wise arithmetic). Fixes the prime element
/// (p or t), the residue field (F_p or F_q) and the canonical coset
/// representatives ({0..p-1}, respectively F_q itself).
class LocalRing {
 public:
  enum class Mode { padic, series };

  static const LocalRing* padic(std::int64_t p);
  static const LocalRing* series(const FqField* coefficient_field);
  /// Accepts "7adic", "Q7", "Q_7", "Z7", "F3[[t]]", "F_3((t))", "F3series",
  /// "F3^2[[t]]".
  static const LocalRing* parse(const std::string& text);

  Mode mode() const { return mode_; }
  bool is_padic() const { return mode_ == Mode::padic; }
  std::int64_t p() const { return residue_->p(); }
  const FqField* residue_field() const { return residue_; }
  std::string pi_symbol() const { return is_padic() ? std::to_string(p()) : "t"; }
  std::string descriptor() const;

  LocalRing(const LocalRing&) = delete;
  LocalRing& operator=(const LocalRing&) = delete;

 private:
  LocalRing(Mode mode, const FqField* residue) : mode_(mode), residue_(residue) {}
  Mode mode_;
  const FqField* residue_;
};

/// Valuation value: an integer or +infinity (exact zero).
struct Valuation {
  bool infinite = false;
  long long value = 0;
  std::string to_string() const { return infinite ? "+inf" : std::to_string(value); }
  bool operator==(const Valuation& o) const {
    return infinite == o.infinite && (infinite || value == o.value);
  }
};

/// Element of O/pi^(precision+1) with explicit valuation bookkeeping, i.e.
/// a truncated element of Q_p or F_q((t)).
///
/// States:
///  - exact zero: distinguished flag; valuation +infinity, infinite
///    precision (kInfPrec sentinel);
///  - known-zero: every digit up to `precision` is zero but exactness is
///    unknown (digit vector empty); valuation queries throw;
///  - regular: digits start at index `lowest` with a nonzero first digit,
///    so the valuation is `lowest`.
///
/// "Precision m" always means "known modulo pi^(m+1)" (absolute
/// precision). Operations compute the exact guaranteed output precision
/// and never fabricate digits.
class TruncatedLocal {
 public:
  static constexpr int kInfPrec = INT_MAX / 4;

  TruncatedLocal() : ring_(nullptr), exact_zero_(true), lowest_(0), precision_(kInfPrec) {}

  static TruncatedLocal exact_zero(const LocalRing* ring);
  static TruncatedLocal known_zero(const LocalRing* ring, int precision);
  /// From a digit window: digits[i] sits at pi^(lowest+i). Digits beyond
  /// `precision` are discarded; leading/trailing zeros are normalized.
  static TruncatedLocal from_digits(const LocalRing* ring, int lowest,
                                    std::vector<FqElem> digits, int precision);
  /// Integer constant, reduced modulo pi^(precision+1).
  static TruncatedLocal from_int(const LocalRing* ring, std::int64_t value, int precision);
  /// Residue-field constant (series mode), known to `precision`.
  static TruncatedLocal from_residue(const LocalRing* ring, const FqElem& value, int precision);
  /// pi^n, known to `precision`.
  static TruncatedLocal power_of_pi(const LocalRing* ring, int n, int precision);
  /// num/den in Q_p: digits solve den*x = num modulo p^(m+1) after the
  /// valuation shift. Requires den != 0.
  static TruncatedLocal from_rational(const LocalRing* ring, std::int64_t num, std::int64_t den,
                                      int precision);
  /// num/den in F_q((t)), num and den polynomials in t over the residue
  /// field: Laurent expansion to `precision` via geometric inversion of
  /// the denominator. Requires den != 0.
  static TruncatedLocal from_ratfunc(const LocalRing* ring, const UniPoly<FqElem>& num,
                                     const UniPoly<FqElem>& den, int precision);

  const LocalRing* ring() const { return ring_; }
  bool is_exact_zero() const { return exact_zero_; }
  /// True when no digit is known to be nonzero (exact zero included).
  bool is_known_zero() const { return digits_.empty(); }
  int precision() const { return precision_; }

  /// Exact zero -> +infinity; regular -> lowest index; known-zero ->
  /// PrecisionExhausted (all known digits are zero but exactness unknown).
  Valuation valuation() const;
  /// Valuation is provably >= k at the known precision.
  bool known_valuation_at_least(int k) const;

  /// Digit at pi^k; zero when k lies inside the known window but off the
  /// stored digits; PrecisionExhausted above the known precision.
  FqElem digit_at(int k) const;
  int lowest() const { return lowest_; }
  const std::vector<FqElem>& digits() const { return digits_; }

  TruncatedLocal operator+(const TruncatedLocal& o) const;
  TruncatedLocal operator-() const;
  TruncatedLocal operator-(const TruncatedLocal& o) const { return *this + (-o); }
  TruncatedLocal operator*(const TruncatedLocal& o) const;
  /// Multiplicative inverse; requires a known valuation. Result precision
  /// is prec - 2*val (same relative precision).
  TruncatedLocal inv() const;
  TruncatedLocal operator/(const TruncatedLocal& o) const { return *this * o.inv(); }

  /// Exact division by pi^k (shifts the digit window down).
  TruncatedLocal shift(int k) const;
  /// Truncates to precision min(precision, m).
  TruncatedLocal truncated(int m) const;

  /// Agreement at the shared known precision. Two elements compare equal
  /// when every digit up to min(precision) matches; this is equality in
  /// O/pi^(min+1), the strongest test truncated data supports.
  bool operator==(const TruncatedLocal& o) const;
  bool operator!=(const TruncatedLocal& o) const { return !(*this == o); }

  /// Residue map O -> F_q: digit at pi^0. NotIntegral below O.
  FqElem residue() const;
  /// Image in O_n = O/pi^(n+1) as the digit vector (alpha_0..alpha_n).
  /// Requires valuation >= 0 and precision >= n.
  std::vector<FqElem> reduce_mod(int n) const;

  std::string to_string() const;

 private:
  const LocalRing* same(const TruncatedLocal& o) const;
  const LocalRing* ring_;
  bool exact_zero_;
  int lowest_;
  int precision_;
  std::vector<FqElem> digits_;
};

inline TruncatedLocal zero_like(const TruncatedLocal& a) {
  return TruncatedLocal::exact_zero(a.ring());
}
inline TruncatedLocal one_like(const TruncatedLocal& a) {
  return TruncatedLocal::from_int(a.ring(), 1, a.precision());
}
/// Exact-zero test (a known-zero of finite precision is not exactly zero).
inline bool is_zero(const TruncatedLocal& a) { return a.is_exact_zero(); }
inline std::string to_coeff_string(const TruncatedLocal& a) { return a.to_string(); }

/// Parses the text forms "3 + 1*7 + O(7^2)" (p-adic) and
/// "2*t^-1 + 1 + t + O(t^2)" (series). Inverse of to_string().
TruncatedLocal parse_local(const LocalRing* ring, const std::string& text);

}  // namespace valence

#endif
