#ifndef VALENCE_POLY_HPP
#define VALENCE_POLY_HPP

#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "valence/errors.hpp"
#include "valence/matrix.hpp"
#include "valence/rings.hpp"

namespace valence {

// ---------------------------------------------------------------------------
// Dense univariate polynomials
// ---------------------------------------------------------------------------

/// Dense univariate polynomial over a pluggable coefficient domain.
/// Coefficients are stored constant-first; the vector carries no trailing
/// zeros, and the zero polynomial is the empty vector (degree -1).
template <class T>
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }

  static UniPoly zero() { return UniPoly(); }
  static UniPoly constant(const T& a) { return UniPoly(std::vector<T>{a}); }
  /// c * x^k
  static UniPoly monomial(const T& c, int k) {
    if (is_zero(c)) return UniPoly();
    std::vector<T> v(k + 1, zero_like(c));
    v[k] = c;
    return UniPoly(std::move(v));
  }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero_poly() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  /// Coefficient of x^i (zero beyond the stored range; requires a nonzero
  /// polynomial or an explicit `like` element to synthesize zero).
  T coeff(int i) const {
    if (i >= 0 && i < static_cast<int>(c_.size())) return c_[i];
    if (c_.empty()) throw domain_error(errc::invalid_input, "coeff() of zero polynomial");
    return zero_like(c_[0]);
  }
  const T& leading() const {
    if (c_.empty()) throw domain_error(errc::zero_polynomial, "leading coefficient of zero");
    return c_.back();
  }

  UniPoly operator+(const UniPoly& o) const {
    if (c_.empty()) return o;
    if (o.c_.empty()) return *this;
    std::vector<T> r(std::max(c_.size(), o.c_.size()), zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i] = c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] = r[i] + o.c_[i];
    return UniPoly(std::move(r));
  }
  UniPoly operator-() const {
    std::vector<T> r = c_;
    for (auto& x : r) x = -x;
    return UniPoly(std::move(r));
  }
  UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
  UniPoly operator*(const UniPoly& o) const {
    if (c_.empty() || o.c_.empty()) return UniPoly();
    std::vector<T> r(c_.size() + o.c_.size() - 1, zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] = r[i + j] + c_[i] * o.c_[j];
    return UniPoly(std::move(r));
  }
  UniPoly scale(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x = x * s;
    return UniPoly(std::move(r));
  }
  /// *this * x^k
  UniPoly shift(int k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<T> r(c_.size() + k, zero_like(c_[0]));
    for (std::size_t i = 0; i < c_.size(); ++i) r[i + k] = c_[i];
    return UniPoly(std::move(r));
  }

  bool operator==(const UniPoly& o) const {
    if (c_.size() != o.c_.size()) return false;
    for (std::size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return false;
    return true;
  }
  bool operator!=(const UniPoly& o) const { return !(*this == o); }

  T eval(const T& x) const {
    if (c_.empty()) return zero_like(x);
    T acc = c_.back();
    for (int i = static_cast<int>(c_.size()) - 2; i >= 0; --i) acc = acc * x + c_[i];
    return acc;
  }

  UniPoly derivative() const {
    if (c_.size() <= 1) return UniPoly();
    std::vector<T> r;
    r.reserve(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) {
      T m = c_[i];
      T acc = zero_like(m);
      for (std::size_t k = 0; k < i; ++k) acc = acc + m;  // i * c_i without an int embedding
      r.push_back(acc);
    }
    return UniPoly(std::move(r));
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Division with remainder over a field-like domain (divisor leading
/// coefficient must be invertible via divexact).
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> divmod(const UniPoly<T>& a, const UniPoly<T>& b) {
  if (b.is_zero_poly()) throw domain_error(errc::division_by_zero, "polynomial division by zero");
  UniPoly<T> rem = a;
  std::vector<T> q;
  if (a.degree() >= b.degree()) q.assign(a.degree() - b.degree() + 1, zero_like(b.leading()));
  while (!rem.is_zero_poly() && rem.degree() >= b.degree()) {
    T f = divexact(rem.leading(), b.leading());
    int k = rem.degree() - b.degree();
    q[k] = f;
    rem = rem - b.scale(f).shift(k);
  }
  return {UniPoly<T>(std::move(q)), rem};
}

/// Monic Euclidean gcd over a field. gcd(0, 0) = 0.
template <class T>
UniPoly<T> poly_gcd(UniPoly<T> a, UniPoly<T> b) {
  while (!b.is_zero_poly()) {
    auto [q, r] = divmod(a, b);
    a = b;
    b = r;
  }
  if (!a.is_zero_poly()) a = a.scale(divexact(one_like(a.leading()), a.leading()));
  return a;
}

// Polynomials themselves serve as coefficient domains (F_q[t] coefficients
// of multivariate forms). one_like requires a nonzero sample to recover
// the inner context.
template <class T>
UniPoly<T> zero_like(const UniPoly<T>&) {
  return UniPoly<T>();
}
template <class T>
UniPoly<T> one_like(const UniPoly<T>& f) {
  if (f.is_zero_poly())
    throw domain_error(errc::invalid_input, "one_like needs a nonzero polynomial");
  return UniPoly<T>::constant(one_like(f.coeffs()[0]));
}
template <class T>
bool is_zero(const UniPoly<T>& f) {
  return f.is_zero_poly();
}

template <class T>
std::string UniPoly<T>::to_string(const std::string& var) const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    if (is_zero(c_[i])) continue;
    if (!first) os << " + ";
    first = false;
    bool unit = (c_[i] == one_like(c_[i]));
    if (!unit || i == 0) {
      std::string cs = to_coeff_string(c_[i]);
      // compound coefficients (digit expansions, fractions) get parens
      if (i > 0 && cs.find(' ') != std::string::npos) cs = "(" + cs + ")";
      os << cs;
    }
    if (i > 0) {
      if (!unit) os << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Sparse multivariate polynomials
// ---------------------------------------------------------------------------

/// Sparse multivariate polynomial: exponent vector -> nonzero coefficient,
/// with terms ordered lexicographically on the exponent vector.
template <class T>
class MultiPoly {
 public:
  using Exponents = std::vector<int>;
  using TermMap = std::map<Exponents, T>;

  explicit MultiPoly(int nvars) : nvars_(nvars) {
    if (nvars < 1) throw domain_error(errc::invalid_input, "nvars must be >= 1");
  }

  static MultiPoly zero(int nvars) { return MultiPoly(nvars); }
  static MultiPoly constant(int nvars, const T& a) {
    MultiPoly f(nvars);
    f.add_term(Exponents(nvars, 0), a);
    return f;
  }
  static MultiPoly variable(int nvars, int i, const T& one) {
    MultiPoly f(nvars);
    Exponents e(nvars, 0);
    e.at(i) = 1;
    f.add_term(e, one);
    return f;
  }

  int nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  bool is_zero_poly() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const T& c) {
    if (static_cast<int>(e.size()) != nvars_)
      throw domain_error(errc::arity_mismatch, "exponent vector length != nvars");
    if (is_zero(c)) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_.emplace(e, c);
    } else {
      it->second = it->second + c;
      if (is_zero(it->second)) terms_.erase(it);
    }
  }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

  MultiPoly operator+(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r = *this;
    for (const auto& [e, c] : o.terms_) r.add_term(e, c);
    return r;
  }
  MultiPoly operator-() const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
  }
  MultiPoly operator-(const MultiPoly& o) const { return *this + (-o); }
  MultiPoly operator*(const MultiPoly& o) const {
    check_arity(o);
    MultiPoly r(nvars_);
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) {
        Exponents e(nvars_);
        for (int i = 0; i < nvars_; ++i) e[i] = e1[i] + e2[i];
        r.add_term(e, c1 * c2);
      }
    return r;
  }
  MultiPoly scale(const T& s) const {
    MultiPoly r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, c * s);
    return r;
  }

  bool operator==(const MultiPoly& o) const {
    if (nvars_ != o.nvars_ || terms_.size() != o.terms_.size()) return false;
    auto it = o.terms_.begin();
    for (const auto& [e, c] : terms_) {
      if (e != it->first || !(c == it->second)) return false;
      ++it;
    }
    return true;
  }
  bool operator!=(const MultiPoly& o) const { return !(*this == o); }

  /// Exact substitution. The point length must equal nvars.
  T evaluate(const std::vector<T>& point) const {
    if (static_cast<int>(point.size()) != nvars_)
      throw domain_error(errc::arity_mismatch, "point arity != nvars");
    T acc = terms_.empty() ? zero_like(point[0]) : zero_like(terms_.begin()->second);
    for (const auto& [e, c] : terms_) {
      T t = c;
      for (int i = 0; i < nvars_; ++i)
        for (int k = 0; k < e[i]; ++k) t = t * point[i];
      acc = acc + t;
    }
    return acc;
  }

  template <class U, class F>
  MultiPoly<U> map_coeffs(F&& fn) const {
    MultiPoly<U> r(nvars_);
    for (const auto& [e, c] : terms_) r.add_term(e, fn(c));
    return r;
  }

  std::string to_string() const;

 private:
  void check_arity(const MultiPoly& o) const {
    if (nvars_ != o.nvars_)
      throw domain_error(errc::arity_mismatch, "operands have different variable counts");
  }
  int nvars_;
  TermMap terms_;
};

template <class T>
MultiPoly<T> zero_like(const MultiPoly<T>& f) {
  return MultiPoly<T>::zero(f.nvars());
}
template <class T>
MultiPoly<T> one_like(const MultiPoly<T>& f) {
  if (f.is_zero_poly())
    throw domain_error(errc::invalid_input, "one_like needs a nonzero polynomial");
  return MultiPoly<T>::constant(f.nvars(), one_like(f.terms().begin()->second));
}
template <class T>
bool is_zero(const MultiPoly<T>& f) {
  return f.is_zero_poly();
}

/// Degree d if every term has exponent sum d; absent for the zero
/// polynomial (a homogeneous polynomial has degree >= 1 and the zero
/// polynomial carries no degree) and for inhomogeneous input.
template <class T>
std::optional<int> is_homogeneous(const MultiPoly<T>& f) {
  if (f.is_zero_poly()) return std::nullopt;
  std::optional<int> d;
  for (const auto& [e, c] : f.terms()) {
    int s = 0;
    for (int x : e) s += x;
    if (d && *d != s) return std::nullopt;
    d = s;
  }
  return d;
}

template <class T>
MultiPoly<T> mp_pow(const MultiPoly<T>& f, int e, const T& one) {
  MultiPoly<T> acc = MultiPoly<T>::constant(f.nvars(), one);
  for (int i = 0; i < e; ++i) acc = acc * f;
  return acc;
}

/// Exact polynomial substitution: each variable x_i of f is replaced by
/// subs[i]; all substituents must share one variable count.
template <class T>
MultiPoly<T> compose(const MultiPoly<T>& f, const std::vector<MultiPoly<T>>& subs) {
  if (static_cast<int>(subs.size()) != f.nvars())
    throw domain_error(errc::arity_mismatch, "compose: substitution count != nvars");
  if (subs.empty()) throw domain_error(errc::arity_mismatch, "compose: empty substitution");
  int m = subs[0].nvars();
  for (const auto& s : subs)
    if (s.nvars() != m)
      throw domain_error(errc::arity_mismatch, "compose: substituents have mixed variable counts");
  MultiPoly<T> acc(m);
  for (const auto& [e, c] : f.terms()) {
    MultiPoly<T> term = MultiPoly<T>::constant(m, c);
    for (int i = 0; i < f.nvars(); ++i)
      for (int k = 0; k < e[i]; ++k) term = term * subs[i];
    acc = acc + term;
  }
  return acc;
}

/// Homogenization of a univariate polynomial of degree d >= 1 into two
/// variables: sum_i a_i x1^i x2^(d-i). Substituting x2 = 1 recovers f.
template <class T>
MultiPoly<T> homogenize(const UniPoly<T>& f) {
  int d = f.degree();
  if (d < 1) throw domain_error(errc::degree_zero, "homogenize requires degree >= 1");
  MultiPoly<T> r(2);
  for (int i = 0; i <= d; ++i) r.add_term({i, d - i}, f.coeff(i));
  return r;
}

/// Substitutes x2 = 1 in a two-variable polynomial.
template <class T>
UniPoly<T> dehomogenize(const MultiPoly<T>& f) {
  if (f.nvars() != 2) throw domain_error(errc::arity_mismatch, "dehomogenize needs 2 variables");
  if (f.is_zero_poly()) return UniPoly<T>();
  int dmax = 0;
  for (const auto& [e, c] : f.terms()) dmax = std::max(dmax, e[0]);
  std::vector<T> coeffs(dmax + 1, zero_like(f.terms().begin()->second));
  for (const auto& [e, c] : f.terms()) coeffs[e[0]] = coeffs[e[0]] + c;
  return UniPoly<T>(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Resultants and the Bezout identity
// ---------------------------------------------------------------------------

/// Sylvester matrix of f (degree n) and g (degree m): an (m+n) x (m+n)
/// matrix whose first m rows carry the shifted coefficients of f, leading
/// coefficient on the main diagonal, and whose next n rows carry the
/// shifted coefficients of g.
template <class T>
Matrix<T> sylvester_matrix(const UniPoly<T>& f, const UniPoly<T>& g) {
  int n = f.degree(), m = g.degree();
  if (n < 1 || m < 1)
    throw domain_error(errc::zero_polynomial, "sylvester_matrix requires degrees >= 1");
  T zero = zero_like(f.leading());
  Matrix<T> s(m + n, m + n, zero);
  for (int k = 0; k < m; ++k)
    for (int j = 0; j <= n; ++j) s.at(k, k + j) = f.coeff(n - j);
  for (int k = 0; k < n; ++k)
    for (int j = 0; j <= m; ++j) s.at(m + k, k + j) = g.coeff(m - j);
  return s;
}

/// Resultant: determinant of the Sylvester matrix, computed by
/// fraction-free elimination. Zero exactly when f and g share a root in
/// the algebraic closure. Res(f,g) = (-1)^(deg f * deg g) Res(g,f).
template <class T>
T resultant(const UniPoly<T>& f, const UniPoly<T>& g) {
  return bareiss_det(sylvester_matrix(f, g));
}

/// Division-free resultant for coefficient rings with zero divisors
/// (truncated local rings); same Sylvester matrix.
template <class T>
T resultant_division_free(const UniPoly<T>& f, const UniPoly<T>& g) {
  return division_free_det(sylvester_matrix(f, g));
}

/// Solves g*phi + h*psi = Res(g,h) * l with deg(phi) <= deg(h)-1 and
/// deg(psi) <= deg(g)-1, via the adjugate of the transposed Sylvester
/// system; all output coefficients stay in the base ring (no division).
/// Requires Res(g,h) != 0 and deg(l) <= deg(g)+deg(h)-1.
template <class T>
std::pair<UniPoly<T>, UniPoly<T>> bezout_solve(const UniPoly<T>& g, const UniPoly<T>& h,
                                               const UniPoly<T>& l) {
  int m = g.degree(), n = h.degree();
  if (m < 1 || n < 1) throw domain_error(errc::zero_polynomial, "bezout_solve needs degrees >= 1");
  int N = m + n;
  if (l.degree() > N - 1)
    throw domain_error(errc::invalid_input, "bezout_solve: deg(l) > deg(g)+deg(h)-1");
  T zero = zero_like(g.leading());
  T rho = resultant_division_free(g, h);
  if (is_zero(rho)) throw domain_error(errc::zero_resultant, "Res(g,h) = 0");
  if (l.is_zero_poly()) return {UniPoly<T>(), UniPoly<T>()};

  // Row i states the coefficient of x^i in g*phi + h*psi; unknowns are
  // (phi_0..phi_{n-1}, psi_0..psi_{m-1}).
  Matrix<T> M(N, N, zero);
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < N; ++i)
      if (i - k >= 0 && i - k <= m) M.at(i, k) = g.coeff(i - k);
  for (int k = 0; k < m; ++k)
    for (int i = 0; i < N; ++i)
      if (i - k >= 0 && i - k <= n) M.at(i, n + k) = h.coeff(i - k);

  T det = division_free_det(M);
  bool flip;
  if (det == rho) {
    flip = false;
  } else if (det == -rho) {
    flip = true;
  } else {
    throw domain_error(errc::invalid_input, "bezout_solve: determinant/resultant mismatch");
  }

  std::vector<T> lv(N, zero);
  for (int i = 0; i <= l.degree(); ++i) lv[i] = l.coeff(i);

  // x = adj(M) * l, entry i = sum_j (-1)^(i+j) minor(M, j, i) * l_j.
  std::vector<T> x(N, zero);
  for (int i = 0; i < N; ++i) {
    T acc = zero;
    for (int j = 0; j < N; ++j) {
      if (is_zero(lv[j])) continue;
      T mi = minor_det(M, j, i);
      T term = mi * lv[j];
      acc = ((i + j) % 2 == 0) ? acc + term : acc - term;
    }
    x[i] = flip ? -acc : acc;
  }
  std::vector<T> phi(x.begin(), x.begin() + n);
  std::vector<T> psi(x.begin() + n, x.end());
  return {UniPoly<T>(std::move(phi)), UniPoly<T>(std::move(psi))};
}

template <class T>
std::string MultiPoly<T>::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string cs = to_coeff_string(c);
    if (!first) {
      if (!cs.empty() && cs[0] == '-') {
        os << " - ";
        cs = cs.substr(1);
      } else {
        os << " + ";
      }
    } else if (!cs.empty() && cs[0] == '-') {
      os << "-";
      cs = cs.substr(1);
    }
    first = false;
    bool any_var = false;
    for (int i = 0; i < nvars_; ++i) any_var = any_var || e[i] > 0;
    bool unit = (cs == "1");
    std::ostringstream vars;
    bool firstv = true;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!firstv) vars << "*";
      firstv = false;
      vars << "x" << (i + 1);
      if (e[i] > 1) vars << "^" << e[i];
    }
    if (!any_var) {
      os << cs;
    } else if (unit) {
      os << vars.str();
    } else {
      os << cs << "*" << vars.str();
    }
  }
  return os.str();
}

// ---------------------------------------------------------------------------
// Text grammar (variables x1..xN and t, integer literals, + - * ^)
// ---------------------------------------------------------------------------

/// Result of parsing the polynomial grammar over the integers. `t_used`
/// records whether the distinguished symbol t occurred; when it did, t is
/// variable index `nvars - 1` of `poly` (the x-variables come first).
struct ParsedPoly {
  MultiPoly<long long> poly;
  int n_xvars;
  bool t_used;
};

/// Parses "3*x1^2*x2 + 2*t*x3^3". `min_xvars` pads the variable count so
/// callers can fix an ambient arity. A bare "x" is accepted as x1.
ParsedPoly parse_poly(const std::string& text, int min_xvars = 0);

/// Canonical printer for the same grammar (round-trips through
/// parse_poly). `t_used` must match the layout produced by parse_poly.
std::string print_poly(const MultiPoly<long long>& poly, bool t_used);

}  // namespace valence

#endif
