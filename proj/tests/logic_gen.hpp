#ifndef VALENCE_TESTS_LOGIC_GEN_HPP
#define VALENCE_TESTS_LOGIC_GEN_HPP

#include <random>

#include "valence/logic.hpp"

// Random formulas, random structures, and an independent satisfaction
// oracle. The oracle desugars to the {not, and, exists} fragment and
// evaluates by a separate recursion, so it shares no code path with
// valence::logic::satisfies.

namespace testsupport {

using namespace valence::logic;

inline Term random_term(std::mt19937_64& rng, const Language& lang, int depth,
                        const std::vector<int>& vars) {
  std::uniform_int_distribution<int> pick(0, 99);
  int roll = pick(rng);
  if (depth <= 0 || roll < 40) {
    if (!vars.empty() && roll % 2 == 0) {
      std::uniform_int_distribution<std::size_t> vi(0, vars.size() - 1);
      return Term::variable(vars[vi(rng)]);
    }
    if (!lang.constants.empty()) {
      std::uniform_int_distribution<std::size_t> ci(0, lang.constants.size() - 1);
      return Term::constant(lang.constants[ci(rng)]);
    }
    return Term::variable(vars.empty() ? 1 : vars[0]);
  }
  std::uniform_int_distribution<std::size_t> fi(0, lang.functions.size() - 1);
  auto [name, arity] = lang.functions[fi(rng)];
  std::vector<Term> args;
  for (int i = 0; i < arity; ++i) args.push_back(random_term(rng, lang, depth - 1, vars));
  return Term::apply(name, std::move(args));
}

inline Formula random_formula(std::mt19937_64& rng, const Language& lang, int depth,
                              std::vector<int> vars) {
  std::uniform_int_distribution<int> pick(0, 99);
  int roll = pick(rng);
  if (depth <= 0 || roll < 30) {
    // atomic
    if (!lang.relations.empty() && roll % 3 == 0) {
      std::uniform_int_distribution<std::size_t> ri(0, lang.relations.size() - 1);
      auto [name, arity] = lang.relations[ri(rng)];
      std::vector<Term> args;
      for (int i = 0; i < arity; ++i) args.push_back(random_term(rng, lang, 2, vars));
      return mk_rel(name, std::move(args));
    }
    return mk_eq(random_term(rng, lang, 2, vars), random_term(rng, lang, 2, vars));
  }
  if (roll < 40) return mk_not(random_formula(rng, lang, depth - 1, vars));
  if (roll < 52)
    return mk_and(random_formula(rng, lang, depth - 1, vars),
                  random_formula(rng, lang, depth - 1, vars));
  if (roll < 64)
    return mk_or(random_formula(rng, lang, depth - 1, vars),
                 random_formula(rng, lang, depth - 1, vars));
  if (roll < 72)
    return mk_implies(random_formula(rng, lang, depth - 1, vars),
                      random_formula(rng, lang, depth - 1, vars));
  if (roll < 78)
    return mk_iff(random_formula(rng, lang, depth - 1, vars),
                  random_formula(rng, lang, depth - 1, vars));
  int var = static_cast<int>(vars.size()) + 1;
  vars.push_back(var);
  Formula body = random_formula(rng, lang, depth - 1, vars);
  return (roll % 2 == 0) ? mk_exists(var, std::move(body)) : mk_forall(var, std::move(body));
}

/// Random sentence: free variables closed by alternating quantifiers.
inline Formula random_sentence(std::mt19937_64& rng, const Language& lang, int depth) {
  Formula f = random_formula(rng, lang, depth, {1, 2});
  bool forall = true;
  for (int v : {2, 1}) {
    if (free_variables(f).count(v)) {
      f = forall ? mk_forall(v, std::move(f)) : mk_exists(v, std::move(f));
      forall = !forall;
    }
  }
  // the generator may have introduced deeper free variables through
  // formula reuse; close anything left
  while (!is_sentence(f)) {
    int v = *free_variables(f).begin();
    f = mk_forall(v, std::move(f));
  }
  return f;
}

/// Random total structure over a small language.
inline FiniteStructure random_structure(std::mt19937_64& rng, const Language& lang, int size) {
  std::vector<std::string> names;
  for (int i = 0; i < size; ++i) names.push_back("e" + std::to_string(i));
  FiniteStructure m(lang, std::move(names));
  std::uniform_int_distribution<int> elem(0, size - 1);
  for (const auto& c : lang.constants) m.set_constant(c, elem(rng));
  for (const auto& [f, arity] : lang.functions) {
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= size;
    std::vector<int> table(total);
    for (auto& v : table) v = elem(rng);
    m.set_function(f, std::move(table));
  }
  std::uniform_int_distribution<int> coin(0, 1);
  for (const auto& [r, arity] : lang.relations) {
    std::set<std::vector<int>> tuples;
    std::size_t total = 1;
    for (int i = 0; i < arity; ++i) total *= size;
    std::vector<int> args(arity, 0);
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t t = flat;
      for (int i = arity - 1; i >= 0; --i) {
        args[i] = static_cast<int>(t % size);
        t /= size;
      }
      if (coin(rng)) tuples.insert(args);
    }
    m.set_relation(r, std::move(tuples));
  }
  m.validate();
  return m;
}

// --- independent oracle ---------------------------------------------------

inline int oracle_term(const FiniteStructure& m, const Term& t, const std::map<int, int>& env) {
  switch (t.kind) {
    case Term::Kind::constant:
      return m.constant(t.name);
    case Term::Kind::variable:
      return env.at(t.var);
    case Term::Kind::apply: {
      std::vector<int> args;
      for (const auto& a : t.args) args.push_back(oracle_term(m, a, env));
      return m.apply_function(t.name, args);
    }
  }
  return -1;
}

/// Evaluates by desugaring: or / implies / iff / forall are rewritten into
/// the {not, and, exists} fragment on the fly.
inline bool oracle_satisfies(const FiniteStructure& m, const Formula& f,
                             std::map<int, int> env) {
  switch (f.kind()) {
    case Formula::Kind::eq:
      return oracle_term(m, f.terms()[0], env) == oracle_term(m, f.terms()[1], env);
    case Formula::Kind::rel: {
      std::vector<int> args;
      for (const auto& t : f.terms()) args.push_back(oracle_term(m, t, env));
      return m.relation_holds(f.rel(), args);
    }
    case Formula::Kind::lnot:
      return !oracle_satisfies(m, f.children()[0], env);
    case Formula::Kind::land:
      return oracle_satisfies(m, f.children()[0], env) &&
             oracle_satisfies(m, f.children()[1], env);
    case Formula::Kind::lor:
      // a | b  ==  !(!a & !b)
      return !(!oracle_satisfies(m, f.children()[0], env) &&
               !oracle_satisfies(m, f.children()[1], env));
    case Formula::Kind::implies:
      // a -> b  ==  !a | b
      return !(oracle_satisfies(m, f.children()[0], env) &&
               !oracle_satisfies(m, f.children()[1], env));
    case Formula::Kind::iff: {
      bool a = oracle_satisfies(m, f.children()[0], env);
      bool b = oracle_satisfies(m, f.children()[1], env);
      return (a && b) || (!a && !b);
    }
    case Formula::Kind::exists: {
      for (int e = 0; e < m.size(); ++e) {
        env[f.var()] = e;
        if (oracle_satisfies(m, f.children()[0], env)) return true;
      }
      return false;
    }
    case Formula::Kind::forall: {
      // forall v phi  ==  !(exists v !phi)
      for (int e = 0; e < m.size(); ++e) {
        env[f.var()] = e;
        if (!oracle_satisfies(m, f.children()[0], env)) return false;
      }
      return true;
    }
  }
  return false;
}

}  // namespace testsupport

#endif
