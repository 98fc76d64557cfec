#include "valence/logic.hpp"

#include <algorithm>

namespace valence {
namespace logic {

// ---------------------------------------------------------------------------
// Language
// ---------------------------------------------------------------------------

void Language::validate() const {
  std::set<std::string> seen;
  auto add = [&](const std::string& n) {
    if (!seen.insert(n).second)
      throw domain_error(errc::invalid_input, "duplicate symbol '" + n + "'");
  };
  for (const auto& c : constants) add(c);
  for (const auto& [f, a] : functions) {
    add(f);
    if (a < 1) throw domain_error(errc::invalid_input, "function arity must be >= 1");
  }
  for (const auto& [r, a] : relations) {
    add(r);
    if (a < 1) throw domain_error(errc::invalid_input, "relation arity must be >= 1");
  }
}

bool Language::has_constant(const std::string& name) const {
  return std::find(constants.begin(), constants.end(), name) != constants.end();
}
int Language::function_arity(const std::string& name) const {
  for (const auto& [f, a] : functions)
    if (f == name) return a;
  return -1;
}
int Language::relation_arity(const std::string& name) const {
  for (const auto& [r, a] : relations)
    if (r == name) return a;
  return -1;
}

Language Language::field() {
  Language l;
  l.constants = {"0", "1"};
  l.functions = {{"+", 2}, {"*", 2}, {"-", 1}};
  return l;
}
Language Language::group() {
  Language l;
  l.constants = {"1"};
  l.functions = {{"*", 2}};
  return l;
}
Language Language::valued_field() {
  Language l;
  l.constants = {"0", "1"};
  l.functions = {{"+", 2}, {"*", 2}, {"-", 1}, {"v", 1}};
  l.relations = {{"V", 1}, {"<=", 2}};
  return l;
}

// ---------------------------------------------------------------------------
// Terms and formulas
// ---------------------------------------------------------------------------

Term Term::constant(std::string n) {
  Term t;
  t.kind = Kind::constant;
  t.name = std::move(n);
  return t;
}
Term Term::variable(int index) {
  if (index < 1) throw domain_error(errc::invalid_input, "variable indices start at 1");
  Term t;
  t.kind = Kind::variable;
  t.var = index;
  return t;
}
Term Term::apply(std::string fn, std::vector<Term> arguments) {
  Term t;
  t.kind = Kind::apply;
  t.name = std::move(fn);
  t.args = std::move(arguments);
  return t;
}

bool Term::operator==(const Term& o) const {
  if (kind != o.kind) return false;
  switch (kind) {
    case Kind::constant: return name == o.name;
    case Kind::variable: return var == o.var;
    case Kind::apply: return name == o.name && args == o.args;
  }
  return false;
}

bool Formula::operator==(const Formula& o) const {
  return kind_ == o.kind_ && terms_ == o.terms_ && rel_ == o.rel_ && var_ == o.var_ &&
         children_ == o.children_;
}

namespace {

void term_vars(const Term& t, std::set<int>& out) {
  if (t.kind == Term::Kind::variable) out.insert(t.var);
  for (const auto& a : t.args) term_vars(a, out);
}

void collect_free(const Formula& f, std::set<int> bound, std::set<int>& out) {
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel: {
      std::set<int> vs;
      for (const auto& t : f.terms()) term_vars(t, vs);
      for (int v : vs)
        if (!bound.count(v)) out.insert(v);
      return;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      bound.insert(f.var());
      collect_free(f.children()[0], bound, out);
      return;
    }
    default:
      for (const auto& c : f.children()) collect_free(c, bound, out);
  }
}

int max_var_index(const Formula& f) {
  int m = 0;
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel: {
      std::set<int> vs;
      for (const auto& t : f.terms()) term_vars(t, vs);
      for (int v : vs) m = std::max(m, v);
      return m;
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall:
      return std::max(f.var(), max_var_index(f.children()[0]));
    default:
      for (const auto& c : f.children()) m = std::max(m, max_var_index(c));
      return m;
  }
}

Term rename_term(const Term& t, const std::map<int, int>& env) {
  switch (t.kind) {
    case Term::Kind::constant: return t;
    case Term::Kind::variable: {
      auto it = env.find(t.var);
      return it == env.end() ? t : Term::variable(it->second);
    }
    case Term::Kind::apply: {
      std::vector<Term> args;
      args.reserve(t.args.size());
      for (const auto& a : t.args) args.push_back(rename_term(a, env));
      return Term::apply(t.name, std::move(args));
    }
  }
  return t;
}

}  // namespace

// Construction backdoor for this translation unit and the parser /
// sentence generators; befriended by Formula.
struct FormulaAccess {
  static Formula make(Formula::Kind kind, std::vector<Term> terms, std::string rel,
                      std::vector<Formula> children, int var) {
    Formula f;
    f.kind_ = kind;
    f.terms_ = std::move(terms);
    f.rel_ = std::move(rel);
    f.children_ = std::move(children);
    f.var_ = var;
    return f;
  }
};

namespace {

Formula rename_formula(const Formula& f, std::map<int, int> env, int& next) {
  switch (f.kind()) {
    case Formula::Kind::eq:
      return FormulaAccess::make(f.kind(), {rename_term(f.terms()[0], env),
                                            rename_term(f.terms()[1], env)},
                                 "", {}, -1);
    case Formula::Kind::rel: {
      std::vector<Term> ts;
      for (const auto& t : f.terms()) ts.push_back(rename_term(t, env));
      return FormulaAccess::make(f.kind(), std::move(ts), f.rel(), {}, -1);
    }
    case Formula::Kind::exists:
    case Formula::Kind::forall: {
      int fresh = next++;
      env[f.var()] = fresh;
      Formula body = rename_formula(f.children()[0], env, next);
      return FormulaAccess::make(f.kind(), {}, "", {std::move(body)}, fresh);
    }
    default: {
      std::vector<Formula> cs;
      for (const auto& c : f.children()) cs.push_back(rename_formula(c, env, next));
      return FormulaAccess::make(f.kind(), {}, "", std::move(cs), -1);
    }
  }
}

}  // namespace

Formula normalize_bound(const Formula& f) {
  std::set<int> free;
  collect_free(f, {}, free);
  int next = free.empty() ? 1 : (*free.rbegin() + 1);
  int n = next;
  return rename_formula(f, {}, n);
}

Formula mk_eq(Term a, Term b) {
  return FormulaAccess::make(Formula::Kind::eq, {std::move(a), std::move(b)}, "", {}, -1);
}
Formula mk_rel(std::string name, std::vector<Term> terms) {
  return FormulaAccess::make(Formula::Kind::rel, std::move(terms), std::move(name), {}, -1);
}
Formula mk_not(Formula f) {
  return normalize_bound(FormulaAccess::make(Formula::Kind::lnot, {}, "", {std::move(f)}, -1));
}
Formula mk_and(Formula a, Formula b) {
  return normalize_bound(
      FormulaAccess::make(Formula::Kind::land, {}, "", {std::move(a), std::move(b)}, -1));
}
Formula mk_or(Formula a, Formula b) {
  return normalize_bound(
      FormulaAccess::make(Formula::Kind::lor, {}, "", {std::move(a), std::move(b)}, -1));
}
Formula mk_implies(Formula a, Formula b) {
  return normalize_bound(
      FormulaAccess::make(Formula::Kind::implies, {}, "", {std::move(a), std::move(b)}, -1));
}
Formula mk_iff(Formula a, Formula b) {
  return normalize_bound(
      FormulaAccess::make(Formula::Kind::iff, {}, "", {std::move(a), std::move(b)}, -1));
}
Formula mk_exists(int var, Formula body) {
  return normalize_bound(
      FormulaAccess::make(Formula::Kind::exists, {}, "", {std::move(body)}, var));
}
Formula mk_forall(int var, Formula body) {
  return normalize_bound(
      FormulaAccess::make(Formula::Kind::forall, {}, "", {std::move(body)}, var));
}

Formula mk_and_all(std::vector<Formula> fs) {
  if (fs.empty()) throw domain_error(errc::invalid_input, "empty conjunction");
  Formula acc = fs[0];
  for (std::size_t i = 1; i < fs.size(); ++i) acc = mk_and(std::move(acc), std::move(fs[i]));
  return acc;
}

std::set<int> free_variables(const Formula& f) {
  std::set<int> out;
  collect_free(f, {}, out);
  return out;
}

bool is_sentence(const Formula& f) { return free_variables(f).empty(); }

// ---------------------------------------------------------------------------
// Finite structures
// ---------------------------------------------------------------------------

FiniteStructure::FiniteStructure(Language lang, std::vector<std::string> element_names)
    : lang_(std::move(lang)), names_(std::move(element_names)) {
  lang_.validate();
  if (names_.empty()) throw domain_error(errc::invalid_input, "domain must be nonempty");
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (!name_index_.emplace(names_[i], static_cast<int>(i)).second)
      throw domain_error(errc::invalid_input, "duplicate element name '" + names_[i] + "'");
  }
}

int FiniteStructure::element_index(const std::string& name) const {
  auto it = name_index_.find(name);
  if (it == name_index_.end())
    throw domain_error(errc::invalid_input, "unknown element '" + name + "'");
  return it->second;
}

void FiniteStructure::set_constant(const std::string& name, int element) {
  if (!lang_.has_constant(name))
    throw domain_error(errc::unknown_symbol, "not a constant symbol: " + name);
  if (element < 0 || element >= size())
    throw domain_error(errc::invalid_input, "element out of range");
  constants_[name] = element;
}

void FiniteStructure::set_function(const std::string& name, std::vector<int> table) {
  int arity = lang_.function_arity(name);
  if (arity < 0) throw domain_error(errc::unknown_symbol, "not a function symbol: " + name);
  std::size_t expect = 1;
  for (int i = 0; i < arity; ++i) expect *= size();
  if (table.size() != expect)
    throw domain_error(errc::invalid_input, "function table has wrong size");
  for (int v : table)
    if (v < 0 || v >= size()) throw domain_error(errc::invalid_input, "table entry out of range");
  functions_[name] = std::move(table);
}

void FiniteStructure::set_relation(const std::string& name, std::set<std::vector<int>> tuples) {
  int arity = lang_.relation_arity(name);
  if (arity < 0) throw domain_error(errc::unknown_symbol, "not a relation symbol: " + name);
  for (const auto& t : tuples) {
    if (static_cast<int>(t.size()) != arity)
      throw domain_error(errc::invalid_input, "tuple arity mismatch");
    for (int v : t)
      if (v < 0 || v >= size()) throw domain_error(errc::invalid_input, "tuple entry out of range");
  }
  relations_[name] = std::move(tuples);
}

void FiniteStructure::validate() const {
  for (const auto& c : lang_.constants)
    if (!constants_.count(c))
      throw domain_error(errc::invalid_input, "constant '" + c + "' uninterpreted");
  for (const auto& [f, a] : lang_.functions)
    if (!functions_.count(f))
      throw domain_error(errc::invalid_input, "function '" + f + "' uninterpreted");
}

int FiniteStructure::constant(const std::string& name) const {
  auto it = constants_.find(name);
  if (it == constants_.end())
    throw domain_error(errc::unknown_symbol, "uninterpreted constant '" + name + "'");
  return it->second;
}

int FiniteStructure::apply_function(const std::string& name, const std::vector<int>& args) const {
  auto it = functions_.find(name);
  if (it == functions_.end())
    throw domain_error(errc::unknown_symbol, "uninterpreted function '" + name + "'");
  std::size_t idx = 0;
  for (int a : args) idx = idx * size() + a;
  return it->second[idx];
}

bool FiniteStructure::relation_holds(const std::string& name,
                                     const std::vector<int>& args) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) {
    if (lang_.relation_arity(name) < 0)
      throw domain_error(errc::unknown_symbol, "uninterpreted relation '" + name + "'");
    return false;  // declared but empty
  }
  return it->second.count(args) > 0;
}

const std::vector<int>& FiniteStructure::function_table(const std::string& name) const {
  auto it = functions_.find(name);
  if (it == functions_.end())
    throw domain_error(errc::unknown_symbol, "uninterpreted function '" + name + "'");
  return it->second;
}

const std::set<std::vector<int>>& FiniteStructure::relation_tuples(
    const std::string& name) const {
  static const std::set<std::vector<int>> empty;
  auto it = relations_.find(name);
  return it == relations_.end() ? empty : it->second;
}

// ---------------------------------------------------------------------------
// Satisfaction
// ---------------------------------------------------------------------------

namespace {

struct Evaluator {
  const FiniteStructure& m;
  long long budget;
  long long used = 0;

  int term(const Term& t, std::vector<int>& env) {
    switch (t.kind) {
      case Term::Kind::constant: {
        if (m.language().has_constant(t.name)) return m.constant(t.name);
        throw domain_error(errc::unknown_symbol, "unknown constant '" + t.name + "'");
      }
      case Term::Kind::variable: {
        if (t.var >= static_cast<int>(env.size()) || env[t.var] < 0)
          throw domain_error(errc::unbound_variable,
                             "variable v" + std::to_string(t.var) + " is unassigned");
        return env[t.var];
      }
      case Term::Kind::apply: {
        int arity = m.language().function_arity(t.name);
        if (arity < 0)
          throw domain_error(errc::unknown_symbol, "unknown function '" + t.name + "'");
        if (arity != static_cast<int>(t.args.size()))
          throw domain_error(errc::arity_error, "arity mismatch for '" + t.name + "'");
        std::vector<int> args;
        args.reserve(t.args.size());
        for (const auto& a : t.args) args.push_back(term(a, env));
        return m.apply_function(t.name, args);
      }
    }
    throw domain_error(errc::invalid_input, "corrupt term");
  }

  bool eval(const Formula& f, std::vector<int>& env) {
    switch (f.kind()) {
      case Formula::Kind::eq:
        return term(f.terms()[0], env) == term(f.terms()[1], env);
      case Formula::Kind::rel: {
        int arity = m.language().relation_arity(f.rel());
        if (arity < 0)
          throw domain_error(errc::unknown_symbol, "unknown relation '" + f.rel() + "'");
        if (arity != static_cast<int>(f.terms().size()))
          throw domain_error(errc::arity_error, "arity mismatch for '" + f.rel() + "'");
        std::vector<int> args;
        args.reserve(f.terms().size());
        for (const auto& t : f.terms()) args.push_back(term(t, env));
        return m.relation_holds(f.rel(), args);
      }
      case Formula::Kind::lnot:
        return !eval(f.children()[0], env);
      case Formula::Kind::land:
        return eval(f.children()[0], env) && eval(f.children()[1], env);
      case Formula::Kind::lor:
        return eval(f.children()[0], env) || eval(f.children()[1], env);
      case Formula::Kind::implies:
        return !eval(f.children()[0], env) || eval(f.children()[1], env);
      case Formula::Kind::iff:
        return eval(f.children()[0], env) == eval(f.children()[1], env);
      case Formula::Kind::exists:
      case Formula::Kind::forall: {
        bool forall = f.kind() == Formula::Kind::forall;
        int var = f.var();
        if (var >= static_cast<int>(env.size())) env.resize(var + 1, -1);
        int saved = env[var];
        for (int e = 0; e < m.size(); ++e) {
          if (++used > budget) throw budget_error("satisfaction budget exceeded");
          env[var] = e;
          bool v = eval(f.children()[0], env);
          if (forall && !v) {
            env[var] = saved;
            return false;
          }
          if (!forall && v) {
            env[var] = saved;
            return true;
          }
        }
        env[var] = saved;
        return forall;
      }
    }
    throw domain_error(errc::invalid_input, "corrupt formula");
  }
};

}  // namespace

bool satisfies(const FiniteStructure& m, const Formula& f, const Assignment& assignment,
               long long budget) {
  auto free = free_variables(f);
  int maxv = free.empty() ? 0 : *free.rbegin();
  for (int v : free)
    if (!assignment.count(v))
      throw domain_error(errc::unbound_variable,
                         "free variable v" + std::to_string(v) + " unassigned");
  int maxidx = std::max(maxv, max_var_index(f));
  std::vector<int> env(maxidx + 2, -1);
  for (const auto& [v, e] : assignment) {
    if (v >= static_cast<int>(env.size())) env.resize(v + 1, -1);
    if (e < 0 || e >= m.size()) throw domain_error(errc::invalid_input, "assignment out of range");
    env[v] = e;
  }
  Evaluator ev{m, budget};
  return ev.eval(f, env);
}

TheoryReport models_theory(const FiniteStructure& m, const Theory& t, long long budget) {
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!is_sentence(t[i]))
      throw domain_error(errc::invalid_input, "theory member has free variables");
    if (!satisfies(m, t[i], {}, budget)) return TheoryReport{false, static_cast<int>(i)};
  }
  return TheoryReport{true, -1};
}

// ---------------------------------------------------------------------------
// Canonical structures
// ---------------------------------------------------------------------------

FiniteStructure field_structure(const FqField* field) {
  std::vector<std::string> names;
  names.reserve(field->q());
  for (std::int64_t i = 0; i < field->q(); ++i) names.push_back(field->element_at(i).to_string());
  FiniteStructure m(Language::field(), std::move(names));
  int q = static_cast<int>(field->q());
  std::vector<int> add(q * q), mul(q * q), neg(q);
  for (int a = 0; a < q; ++a) {
    neg[a] = static_cast<int>(field->neg_idx(a));
    for (int b = 0; b < q; ++b) {
      add[a * q + b] = static_cast<int>(field->add_idx(a, b));
      mul[a * q + b] = static_cast<int>(field->mul_idx(a, b));
    }
  }
  m.set_constant("0", 0);
  m.set_constant("1", 1);
  m.set_function("+", std::move(add));
  m.set_function("*", std::move(mul));
  m.set_function("-", std::move(neg));
  m.validate();
  return m;
}

FiniteStructure trivial_valued_field(const FqField* field) {
  std::vector<std::string> names;
  names.reserve(field->q());
  for (std::int64_t i = 0; i < field->q(); ++i) names.push_back(field->element_at(i).to_string());
  FiniteStructure m(Language::valued_field(), std::move(names));
  int q = static_cast<int>(field->q());
  std::vector<int> add(q * q), mul(q * q), neg(q), val(q);
  for (int a = 0; a < q; ++a) {
    neg[a] = static_cast<int>(field->neg_idx(a));
    val[a] = (a == 0) ? 0 : 1;  // v(0) = 0 (the infinity point), v(x) = 1 = pi^0
    for (int b = 0; b < q; ++b) {
      add[a * q + b] = static_cast<int>(field->add_idx(a, b));
      mul[a * q + b] = static_cast<int>(field->mul_idx(a, b));
    }
  }
  m.set_constant("0", 0);
  m.set_constant("1", 1);
  m.set_function("+", std::move(add));
  m.set_function("*", std::move(mul));
  m.set_function("-", std::move(neg));
  m.set_function("v", std::move(val));
  m.set_relation("V", {{1}});
  m.set_relation("<=", {{1, 1}, {1, 0}, {0, 0}});
  m.validate();
  return m;
}

FiniteStructure permuted_structure(const FiniteStructure& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.size())
    throw domain_error(errc::invalid_input, "permutation size mismatch");
  int n = m.size();
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i) names[perm[i]] = m.element_names()[i];
  FiniteStructure out(m.language(), std::move(names));
  for (const auto& c : m.language().constants) out.set_constant(c, perm[m.constant(c)]);
  for (const auto& [fname, arity] : m.language().functions) {
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= n;
    std::vector<int> table(total);
    std::vector<int> args(arity, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t t = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(t % n);
        t /= n;
      }
      // table in the permuted structure: entry at (perm(a_i)) is
      // perm(f(a_i)); build by writing into the permuted index
      std::size_t pidx = 0;
      for (int i = 0; i < arity; ++i) pidx = pidx * n + perm[args[i]];
      table[pidx] = perm[m.apply_function(fname, args)];
    }
    out.set_function(fname, std::move(table));
  }
  for (const auto& [rname, arity] : m.language().relations) {
    std::set<std::vector<int>> tuples;
    for (const auto& t : m.relation_tuples(rname)) {
      std::vector<int> mapped;
      mapped.reserve(t.size());
      for (int e : t) mapped.push_back(perm[e]);
      tuples.insert(std::move(mapped));
    }
    out.set_relation(rname, std::move(tuples));
  }
  out.validate();
  return out;
}

bool is_isomorphism(const FiniteStructure& m, const FiniteStructure& n,
                    const std::vector<int>& map) {
  if (m.size() != n.size() || static_cast<int>(map.size()) != m.size()) return false;
  std::vector<bool> hit(n.size(), false);
  for (int v : map) {
    if (v < 0 || v >= n.size() || hit[v]) return false;
    hit[v] = true;
  }
  for (const auto& c : m.language().constants)
    if (map[m.constant(c)] != n.constant(c)) return false;
  for (const auto& [fname, arity] : m.language().functions) {
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= m.size();
    std::vector<int> args(arity, 0), mapped(arity, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t t = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(t % m.size());
        t /= m.size();
      }
      for (int i = 0; i < arity; ++i) mapped[i] = map[args[i]];
      if (map[m.apply_function(fname, args)] != n.apply_function(fname, mapped)) return false;
    }
  }
  for (const auto& [rname, arity] : m.language().relations) {
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= m.size();
    std::vector<int> args(arity, 0), mapped(arity, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t t = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(t % m.size());
        t /= m.size();
      }
      for (int i = 0; i < arity; ++i) mapped[i] = map[args[i]];
      if (m.relation_holds(rname, args) != n.relation_holds(rname, mapped)) return false;
    }
  }
  return true;
}

}  // namespace logic
}  // namespace valence
