#include "valence/local.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace valence {
namespace {

std::mutex g_ring_mutex;

using I128 = __int128;

std::int64_t egcd_inverse(std::int64_t a, std::int64_t m) {
  // inverse of a mod m, gcd(a, m) = 1
  std::int64_t old_r = a % m, r = m;
  std::int64_t old_s = 1, s = 0;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t t = old_r - q * r;
    old_r = r;
    r = t;
    t = old_s - q * s;
    old_s = s;
    s = t;
  }
  return ((old_s % m) + m) % m;
}

}  // namespace

const LocalRing* LocalRing::padic(std::int64_t p) {
  const FqField* residue = FqField::get(p, 1);
  static std::map<std::int64_t, std::unique_ptr<LocalRing>> registry;
  std::lock_guard lock(g_ring_mutex);
  auto it = registry.find(p);
  if (it != registry.end()) return it->second.get();
  auto ring = std::unique_ptr<LocalRing>(new LocalRing(Mode::padic, residue));
  const LocalRing* ptr = ring.get();
  registry.emplace(p, std::move(ring));
  return ptr;
}

const LocalRing* LocalRing::series(const FqField* coefficient_field) {
  static std::map<const FqField*, std::unique_ptr<LocalRing>> registry;
  std::lock_guard lock(g_ring_mutex);
  auto it = registry.find(coefficient_field);
  if (it != registry.end()) return it->second.get();
  auto ring = std::unique_ptr<LocalRing>(new LocalRing(Mode::series, coefficient_field));
  const LocalRing* ptr = ring.get();
  registry.emplace(coefficient_field, std::move(ring));
  return ptr;
}

const LocalRing* LocalRing::parse(const std::string& text) {
  std::string s = text;
  auto strip_suffix = [&](const std::string& suf) {
    if (s.size() > suf.size() && s.compare(s.size() - suf.size(), suf.size(), suf) == 0) {
      s = s.substr(0, s.size() - suf.size());
      return true;
    }
    return false;
  };
  if (strip_suffix("adic")) return padic(std::stoll(s));
  if (!s.empty() && (s[0] == 'Q' || s[0] == 'Z')) {
    std::string rest = s.substr(1);
    if (!rest.empty() && rest[0] == '_') rest = rest.substr(1);
    return padic(std::stoll(rest));
  }
  if (strip_suffix("[[t]]") || strip_suffix("((t))") || strip_suffix("series"))
    return series(FqField::parse(s));
  throw domain_error(errc::invalid_descriptor, "cannot parse ring descriptor '" + text + "'");
}

std::string LocalRing::descriptor() const {
  if (is_padic()) return "Q_" + std::to_string(p());
  return residue_->descriptor() + "((t))";
}

// ---------------------------------------------------------------------------

TruncatedLocal TruncatedLocal::exact_zero(const LocalRing* ring) {
  TruncatedLocal r;
  r.ring_ = ring;
  return r;
}

TruncatedLocal TruncatedLocal::known_zero(const LocalRing* ring, int precision) {
  TruncatedLocal r;
  r.ring_ = ring;
  r.exact_zero_ = false;
  r.precision_ = precision;
  r.lowest_ = precision + 1;
  return r;
}

TruncatedLocal TruncatedLocal::from_digits(const LocalRing* ring, int lowest,
                                           std::vector<FqElem> digits, int precision) {
  // discard digits beyond the precision window
  if (lowest + static_cast<int>(digits.size()) - 1 > precision)
    digits.resize(std::max(0, precision - lowest + 1));
  std::size_t lead = 0;
  while (lead < digits.size() && digits[lead].is_zero()) ++lead;
  if (lead == digits.size()) return known_zero(ring, precision);
  if (lead > 0) {
    digits.erase(digits.begin(), digits.begin() + lead);
    lowest += static_cast<int>(lead);
  }
  while (!digits.empty() && digits.back().is_zero()) digits.pop_back();
  TruncatedLocal r;
  r.ring_ = ring;
  r.exact_zero_ = false;
  r.lowest_ = lowest;
  r.precision_ = precision;
  r.digits_ = std::move(digits);
  return r;
}

TruncatedLocal TruncatedLocal::from_int(const LocalRing* ring, std::int64_t value, int precision) {
  if (value == 0) return exact_zero(ring);
  if (ring->is_padic()) {
    I128 modulus = 1;
    for (int i = 0; i <= precision && modulus <= (I128(1) << 90); ++i) modulus *= ring->p();
    I128 v = I128(value) % modulus;
    if (v < 0) v += modulus;
    std::vector<FqElem> digits;
    const FqField* rf = ring->residue_field();
    for (int i = 0; i <= precision && v > 0; ++i) {
      digits.push_back(rf->from_int(static_cast<std::int64_t>(v % ring->p())));
      v /= ring->p();
    }
    return from_digits(ring, 0, std::move(digits), precision);
  }
  return from_residue(ring, ring->residue_field()->from_int(value), precision);
}

TruncatedLocal TruncatedLocal::from_residue(const LocalRing* ring, const FqElem& value,
                                            int precision) {
  if (value.field() != ring->residue_field())
    throw domain_error(errc::mixed_rings, "residue constant from a different field");
  if (value.is_zero()) return exact_zero(ring);
  return from_digits(ring, 0, {value}, precision);
}

TruncatedLocal TruncatedLocal::power_of_pi(const LocalRing* ring, int n, int precision) {
  return from_digits(ring, n, {ring->residue_field()->one()}, precision);
}

const LocalRing* TruncatedLocal::same(const TruncatedLocal& o) const {
  const LocalRing* r = ring_ ? ring_ : o.ring_;
  if (o.ring_ && ring_ && o.ring_ != ring_)
    throw domain_error(errc::mixed_rings, "elements of different local rings");
  return r;
}

Valuation TruncatedLocal::valuation() const {
  if (exact_zero_) return Valuation{true, 0};
  if (digits_.empty())
    throw precision_error(errc::precision_exhausted,
                          "all known digits are zero but exactness is unknown");
  return Valuation{false, lowest_};
}

bool TruncatedLocal::known_valuation_at_least(int k) const {
  if (exact_zero_) return true;
  if (digits_.empty()) return precision_ + 1 >= k;
  return lowest_ >= k;
}

FqElem TruncatedLocal::digit_at(int k) const {
  const FqField* rf = ring_->residue_field();
  if (exact_zero_) return rf->zero();
  if (k > precision_)
    throw precision_error(errc::precision_exhausted, "digit beyond known precision");
  int off = k - lowest_;
  if (off < 0 || off >= static_cast<int>(digits_.size())) return rf->zero();
  return digits_[off];
}

TruncatedLocal TruncatedLocal::operator+(const TruncatedLocal& o) const {
  const LocalRing* ring = same(o);
  if (exact_zero_) return o;
  if (o.exact_zero_) return *this;
  int prec = std::min(precision_, o.precision_);
  int lo = std::min(digits_.empty() ? prec + 1 : lowest_, o.digits_.empty() ? prec + 1 : o.lowest_);
  if (lo > prec) return known_zero(ring, prec);
  int len = prec - lo + 1;
  const FqField* rf = ring->residue_field();
  std::vector<FqElem> out(len, rf->zero());
  if (ring->is_padic()) {
    std::int64_t carry = 0;
    for (int i = 0; i < len; ++i) {
      std::int64_t s = digit_at(lo + i).residue_int() + o.digit_at(lo + i).residue_int() + carry;
      out[i] = rf->from_int(s % ring->p());
      carry = s / ring->p();
    }
  } else {
    for (int i = 0; i < len; ++i) out[i] = digit_at(lo + i) + o.digit_at(lo + i);
  }
  return from_digits(ring, lo, std::move(out), prec);
}

TruncatedLocal TruncatedLocal::operator-() const {
  if (exact_zero_ || digits_.empty()) return *this;
  const FqField* rf = ring_->residue_field();
  std::vector<FqElem> out;
  if (ring_->is_padic()) {
    // complement of the unit part over the full window up to the precision
    int len = precision_ - lowest_ + 1;
    out.assign(len, rf->zero());
    out[0] = rf->from_int(ring_->p() - digits_[0].residue_int());
    for (int i = 1; i < len; ++i) {
      std::int64_t d = i < static_cast<int>(digits_.size()) ? digits_[i].residue_int() : 0;
      out[i] = rf->from_int(ring_->p() - 1 - d);
    }
  } else {
    out = digits_;
    for (auto& d : out) d = -d;
  }
  return from_digits(ring_, lowest_, std::move(out), precision_);
}

TruncatedLocal TruncatedLocal::operator*(const TruncatedLocal& o) const {
  const LocalRing* ring = same(o);
  if (exact_zero_ || o.exact_zero_) return exact_zero(ring);
  // the guaranteed precision: min(v(a)+prec(b), v(b)+prec(a)); an unknown
  // valuation contributes prec+1 as its lower bound
  long long va = digits_.empty() ? precision_ + 1 : lowest_;
  long long vb = o.digits_.empty() ? o.precision_ + 1 : o.lowest_;
  long long prec128 = std::min(va + o.precision_, vb + static_cast<long long>(precision_));
  int prec = static_cast<int>(std::min<long long>(prec128, kInfPrec));
  if (digits_.empty() || o.digits_.empty()) return known_zero(ring, prec);

  int lo = lowest_ + o.lowest_;
  int len = prec - lo + 1;
  if (len <= 0) return known_zero(ring, prec);
  const FqField* rf = ring->residue_field();
  std::vector<FqElem> out(len, rf->zero());
  if (ring->is_padic()) {
    std::vector<std::int64_t> acc(len, 0);
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.digits_.size(); ++j) {
        std::size_t k = i + j;
        if (k >= static_cast<std::size_t>(len)) break;
        acc[k] += digits_[i].residue_int() * o.digits_[j].residue_int();
      }
    }
    std::int64_t carry = 0;
    for (int k = 0; k < len; ++k) {
      std::int64_t s = acc[k] + carry;
      out[k] = rf->from_int(s % ring->p());
      carry = s / ring->p();
    }
  } else {
    for (std::size_t i = 0; i < digits_.size(); ++i) {
      if (digits_[i].is_zero()) continue;
      for (std::size_t j = 0; j < o.digits_.size(); ++j) {
        std::size_t k = i + j;
        if (k >= static_cast<std::size_t>(len)) break;
        out[k] = out[k] + digits_[i] * o.digits_[j];
      }
    }
  }
  return from_digits(ring, lo, std::move(out), prec);
}

TruncatedLocal TruncatedLocal::inv() const {
  if (exact_zero_) throw domain_error(errc::division_by_zero, "inverse of zero");
  if (digits_.empty())
    throw precision_error(errc::precision_exhausted, "inverse of possible zero");
  int v = lowest_;
  int rel = precision_ - v;  // unit part known modulo pi^(rel+1)
  const FqField* rf = ring_->residue_field();
  std::vector<FqElem> inv_digits(rel + 1, rf->zero());
  if (ring_->is_padic()) {
    I128 modulus = 1;
    for (int i = 0; i <= rel; ++i) modulus *= ring_->p();
    I128 u = 0;
    for (int i = static_cast<int>(digits_.size()) - 1; i >= 0; --i)
      u = u * ring_->p() + digits_[i].residue_int();
    std::int64_t x = egcd_inverse(static_cast<std::int64_t>(u % modulus),
                                  static_cast<std::int64_t>(modulus));
    for (int i = 0; i <= rel; ++i) {
      inv_digits[i] = rf->from_int(x % ring_->p());
      x /= ring_->p();
    }
  } else {
    // power-series inverse of the unit part, the geometric-series
    // expansion taken coefficient by coefficient
    FqElem c0 = digits_[0].inv();
    inv_digits[0] = c0;
    for (int n = 1; n <= rel; ++n) {
      FqElem s = rf->zero();
      for (int i = 1; i <= n; ++i) {
        FqElem di = i < static_cast<int>(digits_.size()) ? digits_[i] : rf->zero();
        s = s + di * inv_digits[n - i];
      }
      inv_digits[n] = -(c0 * s);
    }
  }
  return from_digits(ring_, -v, std::move(inv_digits), precision_ - 2 * v);
}

TruncatedLocal TruncatedLocal::shift(int k) const {
  if (exact_zero_) return *this;
  if (digits_.empty()) return known_zero(ring_, precision_ - k);
  return from_digits(ring_, lowest_ - k, digits_, precision_ - k);
}

TruncatedLocal TruncatedLocal::truncated(int m) const {
  if (exact_zero_) return *this;
  if (m >= precision_) return *this;
  if (digits_.empty()) return known_zero(ring_, m);
  return from_digits(ring_, lowest_, digits_, m);
}

bool TruncatedLocal::operator==(const TruncatedLocal& o) const {
  const LocalRing* ring = same(o);
  (void)ring;
  if (exact_zero_ && o.exact_zero_) return true;
  long long prec = std::min(precision_, o.precision_);
  if (prec >= kInfPrec) prec = kInfPrec - 1;
  int lo_a = digits_.empty() ? static_cast<int>(prec) + 1 : lowest_;
  int lo_b = o.digits_.empty() ? static_cast<int>(prec) + 1 : o.lowest_;
  int lo = std::min(lo_a, lo_b);
  for (int k = lo; k <= prec; ++k)
    if (digit_at(k) != o.digit_at(k)) return false;
  return true;
}

FqElem TruncatedLocal::residue() const {
  const FqField* rf = ring_->residue_field();
  if (exact_zero_) return rf->zero();
  if (!digits_.empty() && lowest_ < 0)
    throw domain_error(errc::not_integral, "residue of an element below O");
  if (precision_ < 0)
    throw precision_error(errc::precision_exhausted, "no digits known at index 0");
  return digit_at(0);
}

std::vector<FqElem> TruncatedLocal::reduce_mod(int n) const {
  if (n < 0) throw domain_error(errc::invalid_input, "reduce_mod requires n >= 0");
  if (!exact_zero_ && !digits_.empty() && lowest_ < 0)
    throw domain_error(errc::not_integral, "reduce_mod of an element below O");
  if (!exact_zero_ && precision_ < n)
    throw precision_error(errc::insufficient_precision, "precision below requested modulus");
  std::vector<FqElem> out;
  out.reserve(n + 1);
  for (int k = 0; k <= n; ++k) out.push_back(digit_at(k));
  return out;
}

std::string TruncatedLocal::to_string() const {
  if (exact_zero_) return "0";
  std::string sym = ring_->pi_symbol();
  auto pow_str = [&](int k) {
    if (k == 1) return sym;
    return sym + "^" + std::to_string(k);
  };
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < static_cast<int>(digits_.size()); ++i) {
    if (digits_[i].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    int k = lowest_ + i;
    if (k == 0) {
      os << digits_[i].to_string();
    } else if (digits_[i].is_one()) {
      os << pow_str(k);
    } else {
      os << digits_[i].to_string() << "*" << pow_str(k);
    }
  }
  if (!first) os << " + ";
  os << "O(" << pow_str(precision_ + 1) << ")";
  return os.str();
}

TruncatedLocal TruncatedLocal::from_rational(const LocalRing* ring, std::int64_t num,
                                             std::int64_t den, int precision) {
  if (!ring->is_padic())
    throw domain_error(errc::mixed_rings, "from_rational requires a p-adic ring");
  if (den == 0) throw domain_error(errc::zero_denominator, "zero denominator");
  if (num == 0) return exact_zero(ring);
  std::int64_t p = ring->p();
  int vn = 0, vd = 0;
  while (num % p == 0) {
    num /= p;
    ++vn;
  }
  while (den % p == 0) {
    den /= p;
    ++vd;
  }
  int lowest = vn - vd;
  int rel = precision - lowest;  // digits lowest..precision
  if (rel < 0) return known_zero(ring, precision);
  I128 modulus = 1;
  for (int i = 0; i <= rel; ++i) modulus *= p;
  I128 n128 = I128(num) % modulus;
  if (n128 < 0) n128 += modulus;
  I128 d128 = I128(den) % modulus;
  if (d128 < 0) d128 += modulus;
  // solve den * x = num (mod p^(rel+1))
  std::int64_t dinv = egcd_inverse(static_cast<std::int64_t>(d128),
                                   static_cast<std::int64_t>(modulus));
  I128 x = (I128(dinv) * n128) % modulus;
  const FqField* rf = ring->residue_field();
  std::vector<FqElem> digits(rel + 1, rf->zero());
  for (int i = 0; i <= rel; ++i) {
    digits[i] = rf->from_int(static_cast<std::int64_t>(x % p));
    x /= p;
  }
  return from_digits(ring, lowest, std::move(digits), precision);
}

TruncatedLocal TruncatedLocal::from_ratfunc(const LocalRing* ring, const UniPoly<FqElem>& num,
                                            const UniPoly<FqElem>& den, int precision) {
  if (ring->is_padic())
    throw domain_error(errc::mixed_rings, "from_ratfunc requires a series ring");
  if (den.is_zero_poly()) throw domain_error(errc::zero_denominator, "zero denominator");
  if (num.is_zero_poly()) return exact_zero(ring);
  const FqField* rf = ring->residue_field();
  auto low_index = [&](const UniPoly<FqElem>& f) {
    for (int i = 0; i <= f.degree(); ++i)
      if (!f.coeff(i).is_zero()) return i;
    return 0;
  };
  int vn = low_index(num), vd = low_index(den);
  int lowest = vn - vd;
  int rel = precision - lowest;
  if (rel < 0) return known_zero(ring, precision);
  // unit parts num/t^vn, den/t^vd as digit sequences
  auto unit = [&](const UniPoly<FqElem>& f, int v) {
    std::vector<FqElem> u(rel + 1, rf->zero());
    for (int i = 0; i <= rel && v + i <= f.degree(); ++i) u[i] = f.coeff(v + i);
    return u;
  };
  std::vector<FqElem> nu = unit(num, vn), du = unit(den, vd);
  // series inverse of the denominator unit, then multiply
  std::vector<FqElem> dinv(rel + 1, rf->zero());
  FqElem c0 = du[0].inv();
  dinv[0] = c0;
  for (int n = 1; n <= rel; ++n) {
    FqElem s = rf->zero();
    for (int i = 1; i <= n; ++i) s = s + du[i] * dinv[n - i];
    dinv[n] = -(c0 * s);
  }
  std::vector<FqElem> out(rel + 1, rf->zero());
  for (int i = 0; i <= rel; ++i) {
    if (nu[i].is_zero()) continue;
    for (int j = 0; i + j <= rel; ++j) out[i + j] = out[i + j] + nu[i] * dinv[j];
  }
  return from_digits(ring, lowest, std::move(out), precision);
}

}  // namespace valence
