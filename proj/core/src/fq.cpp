#include "valence/fq.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>

namespace valence {
namespace {

constexpr std::int64_t kMaxQ = 1024;  // op tables are q*q; desk scale only

bool is_prime(std::int64_t p) {
  if (p < 2) return false;
  for (std::int64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Dense polynomials over F_p, constant-first, for modulus bookkeeping only.
using PVec = std::vector<std::int64_t>;

void trim(PVec& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

PVec pmul(const PVec& a, const PVec& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  PVec r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  trim(r);
  return r;
}

// Remainder of a by monic b.
PVec pmod(PVec a, const PVec& b, std::int64_t p) {
  trim(a);
  while (a.size() >= b.size()) {
    std::int64_t c = a.back();
    std::size_t shift = a.size() - b.size();
    for (std::size_t i = 0; i < b.size(); ++i) {
      std::int64_t& t = a[shift + i];
      t = ((t - c * b[i]) % p + p) % p;
    }
    trim(a);
  }
  return a;
}

bool divides(const PVec& d, const PVec& a, std::int64_t p) { return pmod(a, d, p).empty(); }

bool is_irreducible(const PVec& m, std::int64_t p) {
  int v = static_cast<int>(m.size()) - 1;
  if (v < 1) return false;
  // Trial factorization: a reducible monic polynomial of degree v has a
  // monic factor of degree 1..v/2.
  for (int k = 1; 2 * k <= v; ++k) {
    std::int64_t count = 1;
    for (int i = 0; i < k; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      PVec cand(k + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < k; ++i) {
        cand[i] = t % p;
        t /= p;
      }
      cand[k] = 1;
      if (divides(cand, m, p)) return false;
    }
  }
  return true;
}

std::mutex g_registry_mutex;

}  // namespace

FqField::FqField(std::int64_t p, int v, std::vector<std::int64_t> modulus)
    : p_(p), v_(v), modulus_(std::move(modulus)) {
  q_ = 1;
  for (int i = 0; i < v_; ++i) q_ *= p_;
  build_tables();
}

void FqField::build_tables() {
  add_.assign(q_ * q_, 0);
  mul_.assign(q_ * q_, 0);
  neg_.assign(q_, 0);
  inv_.assign(q_, -1);

  // Element index <-> coefficient digits (base p, constant first).
  auto digits = [&](std::int64_t idx) {
    PVec c(v_, 0);
    for (int i = 0; i < v_; ++i) {
      c[i] = idx % p_;
      idx /= p_;
    }
    return c;
  };
  auto index = [&](const PVec& c) {
    std::int64_t idx = 0;
    for (int i = v_ - 1; i >= 0; --i) idx = idx * p_ + (i < static_cast<int>(c.size()) ? c[i] : 0);
    return idx;
  };

  for (std::int64_t a = 0; a < q_; ++a) {
    PVec da = digits(a);
    PVec na(v_);
    for (int i = 0; i < v_; ++i) na[i] = (p_ - da[i]) % p_;
    neg_[a] = static_cast<std::int32_t>(index(na));
    for (std::int64_t b = 0; b < q_; ++b) {
      PVec db = digits(b);
      PVec s(v_);
      for (int i = 0; i < v_; ++i) s[i] = (da[i] + db[i]) % p_;
      add_[a * q_ + b] = static_cast<std::int32_t>(index(s));
      PVec m = pmod(pmul(da, db, p_), modulus_, p_);
      mul_[a * q_ + b] = static_cast<std::int32_t>(index(m));
    }
  }
  for (std::int64_t a = 1; a < q_; ++a)
    for (std::int64_t b = 1; b < q_; ++b)
      if (mul_[a * q_ + b] == 1) {
        inv_[a] = static_cast<std::int32_t>(b);
        break;
      }
}

const FqField* FqField::get(std::int64_t p, int v) {
  if (!is_prime(p)) throw domain_error(errc::invalid_descriptor, "p is not prime");
  if (v < 1 || v > kMaxDegree)
    throw domain_error(errc::invalid_descriptor, "extension degree out of range");
  std::int64_t q = 1;
  for (int i = 0; i < v; ++i) {
    q *= p;
    if (q > kMaxQ) throw domain_error(errc::invalid_descriptor, "field too large for desk scale");
  }

  static std::map<std::pair<std::int64_t, int>, std::unique_ptr<FqField>> registry;
  std::lock_guard lock(g_registry_mutex);
  auto key = std::make_pair(p, v);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();

  PVec modulus;
  if (v == 1) {
    modulus = {0, 1};  // x
  } else {
    std::int64_t count = 1;
    for (int i = 0; i < v; ++i) count *= p;
    for (std::int64_t idx = 0; idx < count; ++idx) {
      PVec cand(v + 1, 0);
      std::int64_t t = idx;
      for (int i = 0; i < v; ++i) {
        cand[i] = t % p;
        t /= p;
      }
      cand[v] = 1;
      if (is_irreducible(cand, p)) {
        modulus = cand;
        break;
      }
    }
  }
  auto field = std::unique_ptr<FqField>(new FqField(p, v, modulus));
  const FqField* ptr = field.get();
  registry.emplace(key, std::move(field));
  return ptr;
}

const FqField* FqField::with_modulus(std::int64_t p, const std::vector<std::int64_t>& modulus) {
  if (!is_prime(p)) throw domain_error(errc::invalid_descriptor, "p is not prime");
  int v = static_cast<int>(modulus.size()) - 1;
  if (v < 1 || v > kMaxDegree)
    throw domain_error(errc::invalid_descriptor, "modulus degree out of range");
  PVec m = modulus;
  for (auto& c : m) c = ((c % p) + p) % p;
  if (m.back() != 1) throw domain_error(errc::invalid_descriptor, "modulus must be monic");
  if (v > 1 && !is_irreducible(m, p))
    throw domain_error(errc::invalid_descriptor, "modulus is reducible");
  std::int64_t q = 1;
  for (int i = 0; i < v; ++i) {
    q *= p;
    if (q > kMaxQ) throw domain_error(errc::invalid_descriptor, "field too large for desk scale");
  }
  static std::map<std::pair<std::int64_t, PVec>, std::unique_ptr<FqField>> registry;
  std::lock_guard lock(g_registry_mutex);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it != registry.end()) return it->second.get();
  auto field = std::unique_ptr<FqField>(new FqField(p, v, m));
  const FqField* ptr = field.get();
  registry.emplace(key, std::move(field));
  return ptr;
}

const FqField* FqField::parse(const std::string& text) {
  std::string s = text;
  if (s.size() >= 1 && (s[0] == 'F' || s[0] == 'f')) s = s.substr(1);
  if (!s.empty() && s[0] == '_') s = s.substr(1);
  std::size_t caret = s.find('^');
  try {
    if (caret == std::string::npos) return get(std::stoll(s));
    return get(std::stoll(s.substr(0, caret)), std::stoi(s.substr(caret + 1)));
  } catch (const std::invalid_argument&) {
    throw domain_error(errc::invalid_descriptor, "cannot parse field descriptor '" + text + "'");
  }
}

std::string FqField::descriptor() const {
  std::ostringstream os;
  os << "F_" << p_;
  if (v_ > 1) os << "^" << v_;
  return os.str();
}

FqElem FqField::zero() const { return FqElem(this, 0); }
FqElem FqField::one() const { return FqElem(this, 1); }

FqElem FqField::from_int(std::int64_t a) const { return FqElem(this, ((a % p_) + p_) % p_); }

FqElem FqField::from_coeffs(const std::vector<std::int64_t>& coeffs) const {
  if (static_cast<int>(coeffs.size()) > v_)
    throw domain_error(errc::invalid_descriptor, "too many coefficients");
  std::int64_t idx = 0;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i)
    idx = idx * p_ + ((coeffs[i] % p_) + p_) % p_;
  // positions beyond coeffs.size() are zero, handled by the fold above
  return FqElem(this, idx);
}

FqElem FqField::element_at(std::int64_t index) const {
  if (index < 0 || index >= q_) throw domain_error(errc::invalid_input, "element index out of range");
  return FqElem(this, index);
}

std::int64_t FqField::index_of(const FqElem& a) const {
  if (a.field() != this) throw domain_error(errc::mixed_fields, "element of another field");
  return a.index();
}

std::int64_t FqField::inv_idx(std::int64_t a) const {
  if (a == 0) throw domain_error(errc::division_by_zero, "inverse of zero");
  return inv_[a];
}

std::vector<std::int64_t> FqElem::coeffs() const {
  std::vector<std::int64_t> c(field_->v(), 0);
  std::int64_t t = idx_;
  for (int i = 0; i < field_->v(); ++i) {
    c[i] = t % field_->p();
    t /= field_->p();
  }
  return c;
}

std::int64_t FqElem::residue_int() const {
  if (field_->v() != 1)
    throw domain_error(errc::invalid_input, "residue_int on extension-field element");
  return idx_;
}

FqElem FqElem::pow(std::int64_t e) const {
  if (e < 0) return inv().pow(-e);
  FqElem base = *this;
  FqElem acc = field_->one();
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

bool FqElem::operator<(const FqElem& o) const {
  if (field_ != o.field_) {
    if (field_->p() != o.field_->p()) return field_->p() < o.field_->p();
    return field_->v() < o.field_->v();
  }
  return idx_ < o.idx_;
}

std::int64_t FqElem::mult_order() const {
  if (idx_ == 0) throw domain_error(errc::division_by_zero, "order of zero");
  std::int64_t n = field_->q() - 1;
  std::int64_t order = n;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    for (std::int64_t cand : {d, n / d})
      if (cand < order && pow(cand).is_one()) order = cand;
  }
  return order;
}

std::string FqElem::to_string() const {
  if (field_->v() == 1) return std::to_string(idx_);
  std::ostringstream os;
  os << "(";
  auto c = coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) os << ",";
    os << c[i];
  }
  os << ")";
  return os.str();
}

FqElem multiplicative_generator(const FqField& field) {
  std::int64_t target = field.q() - 1;
  for (std::int64_t idx = 1; idx < field.q(); ++idx) {
    FqElem a = field.element_at(idx);
    if (a.mult_order() == target) return a;
  }
  throw domain_error(errc::invalid_input, "no generator found");  // unreachable
}

FqElem power_sum(const FqField& field, std::int64_t m) {
  if (m < 1) throw domain_error(errc::invalid_exponent, "power sum requires m >= 1");
  FqElem acc = field.zero();
  for (std::int64_t idx = 0; idx < field.q(); ++idx) acc = acc + field.element_at(idx).pow(m);
  return acc;
}

}  // namespace valence
