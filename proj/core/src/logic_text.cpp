#include <cctype>
#include <sstream>

#include "valence/logic.hpp"

namespace valence {
namespace logic {
namespace {

struct Token {
  enum class Kind { ident, number, punct, end };
  Kind kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> tokenize(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto punct2 = [&](char a, char b) {
    return i + 1 < s.size() && s[i] == a && s[i + 1] == b;
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_'))
        ++i;
      out.push_back({Token::Kind::ident, s.substr(start, i - start), start});
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Token::Kind::number, s.substr(start, i - start), start});
      continue;
    }
    if (punct2('-', '>')) {
      out.push_back({Token::Kind::punct, "->", i});
      i += 2;
      continue;
    }
    if (punct2('<', '-') && i + 2 < s.size() && s[i + 2] == '>') {
      out.push_back({Token::Kind::punct, "<->", i});
      i += 3;
      continue;
    }
    if (punct2('<', '=')) {
      out.push_back({Token::Kind::punct, "<=", i});
      i += 2;
      continue;
    }
    static const std::string singles = "()=!&|+*-.,";
    if (singles.find(c) != std::string::npos) {
      out.push_back({Token::Kind::punct, std::string(1, c), i});
      ++i;
      continue;
    }
    throw parse_error(errc::syntax_error, std::string("unexpected character '") + c + "'", i);
  }
  out.push_back({Token::Kind::end, "", s.size()});
  return out;
}

class FormulaParser {
 public:
  FormulaParser(std::vector<Token> tokens, const Language& lang)
      : toks_(std::move(tokens)), lang_(lang) {}

  Formula parse() {
    Formula f = formula();
    expect_end();
    return f;
  }

 private:
  std::vector<Token> toks_;
  const Language& lang_;
  std::size_t i_ = 0;

  const Token& peek() const { return toks_[i_]; }
  const Token& get() { return toks_[i_++]; }
  bool at_punct(const std::string& p) const {
    return peek().kind == Token::Kind::punct && peek().text == p;
  }
  bool eat_punct(const std::string& p) {
    if (at_punct(p)) {
      ++i_;
      return true;
    }
    return false;
  }
  void expect_punct(const std::string& p) {
    if (!eat_punct(p))
      throw parse_error(errc::syntax_error, "expected '" + p + "'", peek().pos);
  }
  void expect_end() {
    if (peek().kind != Token::Kind::end)
      throw parse_error(errc::syntax_error, "trailing input", peek().pos);
  }

  // formula := iff
  Formula formula() { return iff(); }

  Formula iff() {
    Formula lhs = implies();
    while (eat_punct("<->")) lhs = mk_iff(std::move(lhs), implies());
    return lhs;
  }

  // right-associative
  Formula implies() {
    Formula lhs = disjunction();
    if (eat_punct("->")) return mk_implies(std::move(lhs), implies());
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (eat_punct("|")) lhs = mk_or(std::move(lhs), conjunction());
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (eat_punct("&")) lhs = mk_and(std::move(lhs), unary());
    return lhs;
  }

  Formula unary() {
    if (eat_punct("!")) return mk_not(unary());
    if (peek().kind == Token::Kind::ident &&
        (peek().text == "forall" || peek().text == "exists")) {
      bool universal = get().text == "forall";
      int var = variable_token();
      eat_punct(".");
      Formula body = formula();  // maximal scope
      return universal ? mk_forall(var, std::move(body)) : mk_exists(var, std::move(body));
    }
    return atom();
  }

  int variable_token() {
    const Token& t = get();
    if (t.kind != Token::Kind::ident || t.text.size() < 2 || t.text[0] != 'v')
      throw parse_error(errc::syntax_error, "expected a variable", t.pos);
    for (std::size_t k = 1; k < t.text.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t.text[k])))
        throw parse_error(errc::syntax_error, "expected a variable", t.pos);
    return std::stoi(t.text.substr(1));
  }

  Formula atom() {
    // relation application R(t1, ..)
    if (peek().kind == Token::Kind::ident && lang_.relation_arity(peek().text) >= 0 &&
        toks_[i_ + 1].kind == Token::Kind::punct && toks_[i_ + 1].text == "(") {
      std::string name = get().text;
      expect_punct("(");
      std::vector<Term> args;
      if (!at_punct(")")) {
        args.push_back(term());
        while (eat_punct(",")) args.push_back(term());
      }
      expect_punct(")");
      if (static_cast<int>(args.size()) != lang_.relation_arity(name))
        throw parse_error(errc::arity_error, "wrong arity for relation " + name, peek().pos);
      return mk_rel(name, std::move(args));
    }
    // parenthesized formula (backtrack to a term comparison on failure)
    if (at_punct("(")) {
      std::size_t save = i_;
      try {
        expect_punct("(");
        Formula f = formula();
        expect_punct(")");
        return f;
      } catch (const parse_error&) {
        i_ = save;
      }
    }
    // term comparison: t1 = t2 or t1 <= t2
    Term lhs = term();
    if (eat_punct("=")) return mk_eq(std::move(lhs), term());
    if (eat_punct("<=")) {
      if (lang_.relation_arity("<=") != 2)
        throw parse_error(errc::unknown_symbol, "'<=' is not in the language", peek().pos);
      Term rhs = term();
      return mk_rel("<=", {std::move(lhs), std::move(rhs)});
    }
    throw parse_error(errc::syntax_error, "expected '=' or '<=' after term", peek().pos);
  }

  // term := product ('+' product)*
  Term term() {
    Term lhs = product();
    while (at_punct("+")) {
      if (lang_.function_arity("+") != 2)
        throw parse_error(errc::unknown_symbol, "'+' is not in the language", peek().pos);
      ++i_;
      lhs = Term::apply("+", {std::move(lhs), product()});
    }
    return lhs;
  }

  Term product() {
    Term lhs = factor();
    while (at_punct("*")) {
      if (lang_.function_arity("*") != 2)
        throw parse_error(errc::unknown_symbol, "'*' is not in the language", peek().pos);
      ++i_;
      lhs = Term::apply("*", {std::move(lhs), factor()});
    }
    return lhs;
  }

  Term factor() {
    const Token& t = peek();
    if (t.kind == Token::Kind::punct && t.text == "(") {
      ++i_;
      Term inner = term();
      expect_punct(")");
      return inner;
    }
    // prefix application of any function symbol: -(t), v(t), +(a,b)
    if ((t.kind == Token::Kind::ident || t.kind == Token::Kind::punct) &&
        lang_.function_arity(t.text) >= 0 && toks_[i_ + 1].kind == Token::Kind::punct &&
        toks_[i_ + 1].text == "(") {
      std::string name = get().text;
      expect_punct("(");
      std::vector<Term> args;
      if (!at_punct(")")) {
        args.push_back(term());
        while (eat_punct(",")) args.push_back(term());
      }
      expect_punct(")");
      if (static_cast<int>(args.size()) != lang_.function_arity(name))
        throw parse_error(errc::arity_error, "wrong arity for function " + name, peek().pos);
      return Term::apply(name, std::move(args));
    }
    if (t.kind == Token::Kind::ident) {
      // variable v<digits>
      if (t.text.size() >= 2 && t.text[0] == 'v') {
        bool digits = true;
        for (std::size_t k = 1; k < t.text.size(); ++k)
          digits = digits && std::isdigit(static_cast<unsigned char>(t.text[k]));
        if (digits) {
          ++i_;
          return Term::variable(std::stoi(t.text.substr(1)));
        }
      }
      if (lang_.has_constant(t.text)) {
        ++i_;
        return Term::constant(t.text);
      }
      throw parse_error(errc::unknown_symbol, "unknown symbol '" + t.text + "'", t.pos);
    }
    if (t.kind == Token::Kind::number) {
      if (lang_.has_constant(t.text)) {
        ++i_;
        return Term::constant(t.text);
      }
      throw parse_error(errc::unknown_symbol, "no constant named '" + t.text + "'", t.pos);
    }
    throw parse_error(errc::syntax_error, "expected a term", t.pos);
  }
};

// precedence levels for printing: iff 1, implies 2, or 3, and 4, not 5
int prec_of(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::iff: return 1;
    case Formula::Kind::implies: return 2;
    case Formula::Kind::lor: return 3;
    case Formula::Kind::land: return 4;
    case Formula::Kind::lnot: return 5;
    default: return 6;
  }
}

void print_term(std::ostream& os, const Term& t, int parent_prec) {
  switch (t.kind) {
    case Term::Kind::constant:
      os << t.name;
      return;
    case Term::Kind::variable:
      os << "v" << t.var;
      return;
    case Term::Kind::apply: {
      if (t.name == "+" && t.args.size() == 2) {
        bool parens = parent_prec > 1;
        if (parens) os << "(";
        print_term(os, t.args[0], 1);
        os << " + ";
        print_term(os, t.args[1], 2);
        if (parens) os << ")";
        return;
      }
      if (t.name == "*" && t.args.size() == 2) {
        bool parens = parent_prec > 2;
        if (parens) os << "(";
        print_term(os, t.args[0], 2);
        os << " * ";
        print_term(os, t.args[1], 3);
        if (parens) os << ")";
        return;
      }
      os << t.name << "(";
      for (std::size_t i = 0; i < t.args.size(); ++i) {
        if (i) os << ", ";
        print_term(os, t.args[i], 0);
      }
      os << ")";
      return;
    }
  }
}

void print_formula_rec(std::ostream& os, const Formula& f, int parent_prec, bool tail) {
  switch (f.kind()) {
    case Formula::Kind::eq:
      print_term(os, f.terms()[0], 0);
      os << " = ";
      print_term(os, f.terms()[1], 0);
      return;
    case Formula::Kind::rel:
      if (f.rel() == "<=" && f.terms().size() == 2) {
        print_term(os, f.terms()[0], 0);
        os << " <= ";
        print_term(os, f.terms()[1], 0);
        return;
      }
      os << f.rel() << "(";
      for (std::size_t i = 0; i < f.terms().size(); ++i) {
        if (i) os << ", ";
        print_term(os, f.terms()[i], 0);
      }
      os << ")";
      return;
    case Formula::Kind::lnot:
      os << "!(";
      print_formula_rec(os, f.children()[0], 0, true);
      os << ")";
      return;
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      // quantifier scope is maximal; parenthesize unless nothing follows
      bool parens = !tail;
      if (parens) os << "(";
      os << (f.kind() == Formula::Kind::forall ? "forall v" : "exists v") << f.var() << ". ";
      print_formula_rec(os, f.children()[0], 0, true);
      if (parens) os << ")";
      return;
    }
    default: {
      int prec = prec_of(f.kind());
      const char* op = f.kind() == Formula::Kind::land   ? " & "
                       : f.kind() == Formula::Kind::lor  ? " | "
                       : f.kind() == Formula::Kind::implies ? " -> "
                                                            : " <-> ";
      bool parens = parent_prec > prec || (parent_prec == prec && f.kind() == Formula::Kind::implies);
      if (parens) os << "(";
      // left child binds tighter for left-assoc ops; implies is right-assoc
      bool right_assoc = f.kind() == Formula::Kind::implies;
      print_formula_rec(os, f.children()[0], right_assoc ? prec + 1 : prec,
                        false);
      os << op;
      print_formula_rec(os, f.children()[1], right_assoc ? prec : prec + 1,
                        parens ? true : tail);
      if (parens) os << ")";
      return;
    }
  }
}

}  // namespace

Formula parse_formula(const std::string& text, const Language& lang) {
  return FormulaParser(tokenize(text), lang).parse();
}

std::string print_formula(const Formula& f) {
  std::ostringstream os;
  print_formula_rec(os, f, 0, true);
  return os.str();
}

}  // namespace logic
}  // namespace valence
