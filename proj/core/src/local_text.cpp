#include <cctype>

#include "valence/local.hpp"

namespace valence {
namespace {

struct Cursor {
  const std::string& s;
  std::size_t pos = 0;

  void ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  bool done() {
    ws();
    return pos >= s.size();
  }
  long long integer() {
    ws();
    bool neg = eat('-');
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    if (pos == start) throw parse_error(errc::syntax_error, "expected integer", pos);
    long long v = std::stoll(s.substr(start, pos - start));
    return neg ? -v : v;
  }
};

FqElem parse_digit(Cursor& c, const FqField* rf) {
  c.ws();
  if (c.pos < c.s.size() && c.s[c.pos] == '(') {
    ++c.pos;
    std::vector<std::int64_t> coords;
    coords.push_back(c.integer());
    while (c.eat(',')) coords.push_back(c.integer());
    if (!c.eat(')')) throw parse_error(errc::syntax_error, "expected ')'", c.pos);
    return rf->from_coeffs(coords);
  }
  long long v = c.integer();
  if (v < 0 || v >= rf->q())
    throw parse_error(errc::syntax_error, "digit out of range", c.pos);
  return rf->element_at(v);
}

}  // namespace

TruncatedLocal parse_local(const LocalRing* ring, const std::string& text) {
  Cursor c{text};
  c.ws();
  if (text.substr(c.pos) == "0") return TruncatedLocal::exact_zero(ring);

  const FqField* rf = ring->residue_field();
  bool padic = ring->is_padic();
  std::int64_t p = ring->p();

  std::vector<std::pair<int, FqElem>> digits;  // (index, digit)
  bool saw_o = false;
  int precision = 0;

  auto parse_pi_power = [&]() -> int {
    // for p-adic rings the caller has already consumed the base integer
    if (c.eat('^')) return static_cast<int>(c.integer());
    return 1;
  };

  for (;;) {
    c.ws();
    if (c.pos < c.s.size() && c.s[c.pos] == 'O') {
      ++c.pos;
      if (!c.eat('(')) throw parse_error(errc::syntax_error, "expected '(' after O", c.pos);
      int k;
      if (padic) {
        long long base = c.integer();
        if (base != p) throw parse_error(errc::syntax_error, "O-term base must be p", c.pos);
        k = parse_pi_power();
      } else {
        if (!c.eat('t')) throw parse_error(errc::syntax_error, "expected t", c.pos);
        k = parse_pi_power();
      }
      if (!c.eat(')')) throw parse_error(errc::syntax_error, "expected ')'", c.pos);
      saw_o = true;
      precision = k - 1;
      break;
    }
    // digit term
    if (!padic && c.pos < c.s.size() && c.s[c.pos] == 't') {
      ++c.pos;
      digits.emplace_back(parse_pi_power(), rf->one());
    } else if (!padic) {
      FqElem d = parse_digit(c, rf);
      if (c.eat('*')) {
        if (!c.eat('t')) throw parse_error(errc::syntax_error, "expected t", c.pos);
        digits.emplace_back(parse_pi_power(), d);
      } else {
        digits.emplace_back(0, d);
      }
    } else {
      long long first = c.integer();
      if (c.eat('*')) {
        long long base = c.integer();
        if (base != p) throw parse_error(errc::syntax_error, "power base must be p", c.pos);
        if (first < 0 || first >= p)
          throw parse_error(errc::syntax_error, "digit out of range", c.pos);
        digits.emplace_back(parse_pi_power(), rf->from_int(first));
      } else if (c.pos < c.s.size() && c.s[c.pos] == '^') {
        if (first != p) throw parse_error(errc::syntax_error, "power base must be p", c.pos);
        digits.emplace_back(parse_pi_power(), rf->one());
      } else if (first == p) {
        digits.emplace_back(1, rf->one());
      } else if (first >= 0 && first < p) {
        digits.emplace_back(0, rf->from_int(first));
      } else {
        throw parse_error(errc::syntax_error, "digit out of range", c.pos);
      }
    }
    if (!c.eat('+')) throw parse_error(errc::syntax_error, "expected '+' or O-term", c.pos);
  }
  if (!saw_o) throw parse_error(errc::syntax_error, "missing precision marker O(..)", c.pos);
  if (!c.done()) throw parse_error(errc::syntax_error, "trailing input", c.pos);

  if (digits.empty()) return TruncatedLocal::known_zero(ring, precision);
  int lo = digits[0].first;
  int hi = digits[0].first;
  for (const auto& [k, d] : digits) {
    lo = std::min(lo, k);
    hi = std::max(hi, k);
  }
  std::vector<FqElem> window(hi - lo + 1, rf->zero());
  for (const auto& [k, d] : digits) {
    if (!window[k - lo].is_zero())
      throw parse_error(errc::syntax_error, "duplicate digit index", c.pos);
    window[k - lo] = d;
  }
  return TruncatedLocal::from_digits(ring, lo, std::move(window), precision);
}

}  // namespace valence
