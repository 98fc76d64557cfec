#include <cctype>
#include <map>
#include <utility>

#include "valence/poly.hpp"

namespace valence {
namespace {

// Intermediate sparse form keyed by (x-exponents, t-exponent); assembled
// into a MultiPoly once the ambient variable count is known.
struct SPoly {
  std::map<std::pair<std::map<int, int>, int>, long long> terms;

  void add(std::map<int, int> xe, int te, long long c) {
    if (c == 0) return;
    auto key = std::make_pair(std::move(xe), te);
    auto it = terms.find(key);
    if (it == terms.end()) {
      terms.emplace(std::move(key), c);
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  static SPoly constant(long long c) {
    SPoly r;
    r.add({}, 0, c);
    return r;
  }
  SPoly operator+(const SPoly& o) const {
    SPoly r = *this;
    for (const auto& [k, c] : o.terms) r.add(k.first, k.second, c);
    return r;
  }
  SPoly operator-() const {
    SPoly r;
    for (const auto& [k, c] : terms) r.terms.emplace(k, -c);
    return r;
  }
  SPoly operator*(const SPoly& o) const {
    SPoly r;
    for (const auto& [k1, c1] : terms)
      for (const auto& [k2, c2] : o.terms) {
        std::map<int, int> xe = k1.first;
        for (const auto& [v, e] : k2.first) xe[v] += e;
        r.add(std::move(xe), k1.second + k2.second, c1 * c2);
      }
    return r;
  }
  SPoly pow(int e) const {
    SPoly acc = constant(1);
    for (int i = 0; i < e; ++i) acc = acc * *this;
    return acc;
  }
};

class Parser {
 public:
  explicit Parser(const std::string& s) : s_(s) {}

  SPoly parse() {
    SPoly r = expr();
    skip_ws();
    if (pos_ != s_.size()) throw parse_error(errc::syntax_error, "trailing input", pos_);
    return r;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip_ws();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  SPoly expr() {
    bool neg = eat('-');
    SPoly acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc + (-term());
      } else {
        return acc;
      }
    }
  }

  SPoly term() {
    SPoly acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  SPoly factor() {
    SPoly base = atom();
    if (eat('^')) {
      long long e = integer();
      if (e < 0) throw parse_error(errc::syntax_error, "negative exponent", pos_);
      return base.pow(static_cast<int>(e));
    }
    return base;
  }

  SPoly atom() {
    skip_ws();
    if (pos_ >= s_.size()) throw parse_error(errc::syntax_error, "unexpected end of input", pos_);
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      SPoly r = expr();
      if (!eat(')')) throw parse_error(errc::syntax_error, "expected ')'", pos_);
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return SPoly::constant(integer());
    if (c == 't') {
      ++pos_;
      SPoly r;
      r.add({}, 1, 1);
      return r;
    }
    if (c == 'x') {
      ++pos_;
      int idx = 1;
      if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_])))
        idx = static_cast<int>(integer());
      if (idx < 1) throw parse_error(errc::syntax_error, "variable index must be >= 1", pos_);
      SPoly r;
      r.add({{idx, 1}}, 0, 1);
      return r;
    }
    throw parse_error(errc::syntax_error, std::string("unexpected character '") + c + "'", pos_);
  }

  long long integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) throw parse_error(errc::syntax_error, "expected integer", pos_);
    return std::stoll(s_.substr(start, pos_ - start));
  }

  const std::string& s_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedPoly parse_poly(const std::string& text, int min_xvars) {
  SPoly sp = Parser(text).parse();
  int n_x = min_xvars;
  bool t_used = false;
  for (const auto& [k, c] : sp.terms) {
    for (const auto& [v, e] : k.first)
      if (e > 0) n_x = std::max(n_x, v);
    if (k.second > 0) t_used = true;
  }
  int nvars = std::max(1, n_x + (t_used ? 1 : 0));
  MultiPoly<long long> poly(nvars);
  for (const auto& [k, c] : sp.terms) {
    std::vector<int> e(nvars, 0);
    for (const auto& [v, ex] : k.first) e[v - 1] = ex;
    if (t_used) e[nvars - 1] = k.second;
    poly.add_term(e, c);
  }
  return ParsedPoly{std::move(poly), n_x, t_used};
}

std::string print_poly(const MultiPoly<long long>& poly, bool t_used) {
  if (poly.is_zero_poly()) return "0";
  int nv = poly.nvars();
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : poly.terms()) {
    long long coef = c;
    if (!first) {
      os << (coef < 0 ? " - " : " + ");
      if (coef < 0) coef = -coef;
    } else {
      first = false;
      if (coef < 0) {
        os << "-";
        coef = -coef;
      }
    }
    std::ostringstream vars;
    bool firstv = true;
    for (int i = 0; i < nv; ++i) {
      if (e[i] == 0) continue;
      if (!firstv) vars << "*";
      firstv = false;
      if (t_used && i == nv - 1)
        vars << "t";
      else
        vars << "x" << (i + 1);
      if (e[i] > 1) vars << "^" << e[i];
    }
    std::string vs = vars.str();
    if (vs.empty()) {
      os << coef;
    } else if (coef == 1) {
      os << vs;
    } else {
      os << coef << "*" << vs;
    }
  }
  return os.str();
}

}  // namespace valence
