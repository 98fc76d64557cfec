#include <functional>

#include "valence/logic.hpp"

namespace valence {
namespace logic {
namespace {

Term V(int i) { return Term::variable(i); }
Term c0() { return Term::constant("0"); }
Term c1() { return Term::constant("1"); }
Term add(Term a, Term b) { return Term::apply("+", {std::move(a), std::move(b)}); }
Term mul(Term a, Term b) { return Term::apply("*", {std::move(a), std::move(b)}); }
Term neg(Term a) { return Term::apply("-", {std::move(a)}); }
Term val(Term a) { return Term::apply("v", {std::move(a)}); }
Formula leq(Term a, Term b) { return mk_rel("<=", {std::move(a), std::move(b)}); }
Formula inV(Term a) { return mk_rel("V", {std::move(a)}); }
Formula eq(Term a, Term b) { return mk_eq(std::move(a), std::move(b)); }

// 1 < x, the standard abbreviation (1 <= x) & !(1 = x)
Formula lt1(Term x) {
  return mk_and(leq(c1(), x), mk_not(eq(c1(), x)));
}

Formula forall_all(std::vector<int> vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = mk_forall(*it, std::move(body));
  return body;
}
Formula exists_all(std::vector<int> vars, Formula body) {
  for (auto it = vars.rbegin(); it != vars.rend(); ++it) body = mk_exists(*it, std::move(body));
  return body;
}

}  // namespace

Theory vf_axioms(bool verbatim) {
  Theory t;
  auto A = [&](Formula f) { t.push_back(std::move(f)); };

  // field axioms
  A(forall_all({1, 2, 3}, eq(add(add(V(1), V(2)), V(3)), add(V(1), add(V(2), V(3))))));
  A(mk_forall(1, eq(add(V(1), c0()), V(1))));
  A(mk_forall(1, eq(add(V(1), neg(V(1))), c0())));
  A(forall_all({1, 2}, eq(add(V(1), V(2)), add(V(2), V(1)))));
  A(forall_all({1, 2, 3}, eq(mul(mul(V(1), V(2)), V(3)), mul(V(1), mul(V(2), V(3))))));
  A(mk_forall(1, eq(mul(V(1), c1()), V(1))));
  A(mk_forall(1, mk_implies(mk_not(eq(V(1), c0())), mk_exists(2, eq(mul(V(1), V(2)), c1())))));
  A(forall_all({1, 2}, eq(mul(V(1), V(2)), mul(V(2), V(1)))));
  A(forall_all({1, 2, 3},
               eq(mul(V(1), add(V(2), V(3))), add(mul(V(1), V(2)), mul(V(1), V(3))))));
  A(mk_not(eq(c1(), c0())));

  // valuation axioms
  A(mk_forall(1, mk_iff(eq(val(V(1)), c0()), eq(V(1), c0()))));
  A(forall_all({1, 2}, eq(val(mul(V(1), V(2))), mul(val(V(1)), val(V(2))))));
  A(forall_all({1, 2}, mk_implies(leq(val(V(1)), val(V(2))), leq(val(V(1)), val(add(V(1), V(2)))))));

  // the value group is a subgroup of the multiplicative group
  A(forall_all({1, 2}, mk_implies(mk_and(inV(V(1)), inV(V(2))), inV(mul(V(1), V(2))))));
  A(mk_forall(1, mk_implies(inV(V(1)), mk_exists(2, mk_and(inV(V(2)), eq(mul(V(1), V(2)), c1()))))));

  // linear order axioms for the value group
  A(forall_all({1, 2}, mk_implies(mk_and(inV(V(1)), inV(V(2))),
                                  mk_or(leq(V(1), V(2)), leq(V(2), V(1))))));
  A(forall_all({1, 2},
               mk_implies(mk_and_all({inV(V(1)), inV(V(2)), leq(V(1), V(2)), leq(V(2), V(1))}),
                          eq(V(1), V(2)))));
  A(forall_all({1, 2, 3}, mk_implies(mk_and_all({inV(V(1)), inV(V(2)), inV(V(3)), leq(V(1), V(2)),
                                                 leq(V(2), V(3))}),
                                     leq(V(1), V(3)))));
  if (verbatim) {
    // tautological right-hand side, reproduced as printed
    A(forall_all({1, 2, 3},
                 mk_implies(mk_and_all({inV(V(1)), inV(V(2)), inV(V(3)), leq(V(1), V(2))}),
                            leq(mul(V(1), V(3)), mul(V(1), V(3))))));
  } else {
    A(forall_all({1, 2, 3},
                 mk_implies(mk_and_all({inV(V(1)), inV(V(2)), inV(V(3)), leq(V(1), V(2))}),
                            leq(mul(V(1), V(3)), mul(V(2), V(3))))));
  }

  // cross section axioms; the corrected variant exempts 0, whose image
  // under the cross section is the infinity point, not a group element
  if (verbatim) {
    A(mk_forall(1, inV(val(V(1)))));
  } else {
    A(mk_forall(1, mk_implies(mk_not(eq(V(1), c0())), inV(val(V(1))))));
  }
  A(mk_forall(1, mk_implies(inV(V(1)), eq(val(V(1)), V(1)))));
  return t;
}

Formula char_sentence(std::int64_t p) {
  if (p < 1) throw domain_error(errc::invalid_input, "characteristic must be positive");
  Term sum = c1();
  for (std::int64_t i = 1; i < p; ++i) sum = add(std::move(sum), c1());
  return eq(std::move(sum), c0());
}

// ---------------------------------------------------------------------------
// Hensel_n
// ---------------------------------------------------------------------------

namespace {

struct VarAlloc {
  int next = 1;
  std::vector<int> take(int count) {
    std::vector<int> out;
    out.reserve(count);
    for (int i = 0; i < count; ++i) out.push_back(next++);
    return out;
  }
};

std::vector<Term> poly_vars(const std::vector<int>& vars) {
  std::vector<Term> out;
  out.reserve(vars.size());
  for (int v : vars) out.push_back(V(v));
  return out;
}

// coefficients of the product, c_k = sum_{i+j=k} a_i b_j
std::vector<Term> poly_mul(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Term> out;
  out.resize(a.size() + b.size() - 1, c0());
  std::vector<bool> started(out.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) {
      Term prod = mul(a[i], b[j]);
      if (!started[i + j]) {
        out[i + j] = std::move(prod);
        started[i + j] = true;
      } else {
        out[i + j] = add(std::move(out[i + j]), std::move(prod));
      }
    }
  return out;
}

// all coefficients lie in the valuation ring: 1 <= v(a_i)
Formula poly_in_O(const std::vector<Term>& a) {
  std::vector<Formula> parts;
  for (const auto& t : a) parts.push_back(leq(c1(), val(t)));
  return mk_and_all(std::move(parts));
}

Formula poly_monic(const std::vector<Term>& a) { return eq(a.back(), c1()); }

// equality of residue images: coefficients congruent mod the maximal ideal
Formula res_eq(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Formula> parts;
  std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) parts.push_back(lt1(val(add(a[i], neg(b[i])))));
  for (std::size_t i = common; i < a.size(); ++i) parts.push_back(lt1(val(a[i])));
  for (std::size_t i = common; i < b.size(); ++i) parts.push_back(lt1(val(neg(b[i]))));
  return mk_and_all(std::move(parts));
}

// coefficient-wise equality with zero padding on the longer side
Formula poly_eq(const std::vector<Term>& a, const std::vector<Term>& b) {
  std::vector<Formula> parts;
  std::size_t common = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < common; ++i) parts.push_back(eq(a[i], b[i]));
  for (std::size_t i = common; i < a.size(); ++i) parts.push_back(eq(c0(), a[i]));
  for (std::size_t i = common; i < b.size(); ++i) parts.push_back(eq(c0(), b[i]));
  return mk_and_all(std::move(parts));
}

}  // namespace

Formula hensel_sentence(int n) {
  if (n < 1) throw domain_error(errc::invalid_input, "hensel_sentence requires n >= 1");
  VarAlloc alloc;
  auto fv = alloc.take(n + 1);
  auto g0v = alloc.take(n + 1);
  auto h0v = alloc.take(n + 1);
  auto f = poly_vars(fv), g0 = poly_vars(g0v), h0 = poly_vars(h0v);

  // ResRelPrime(g0, h0): no common divisor witnesses p, q, r with
  // residue(p q) = residue(g0) and residue(p r) = residue(h0)
  auto pv = alloc.take(n + 1);
  auto qv = alloc.take(n + 1);
  auto rv = alloc.take(n + 1);
  auto p = poly_vars(pv), q = poly_vars(qv), r = poly_vars(rv);
  Formula witness = mk_and_all({poly_in_O(p), poly_in_O(q), poly_in_O(r),
                                res_eq(poly_mul(p, q), g0), res_eq(poly_mul(p, r), h0)});
  std::vector<int> pqr;
  for (auto v : pv) pqr.push_back(v);
  for (auto v : qv) pqr.push_back(v);
  for (auto v : rv) pqr.push_back(v);
  Formula res_rel_prime = mk_not(exists_all(pqr, std::move(witness)));

  Formula premise = mk_and_all({poly_in_O(f), poly_in_O(g0), poly_in_O(h0), poly_monic(f),
                                poly_monic(g0), poly_monic(h0), std::move(res_rel_prime),
                                res_eq(poly_mul(g0, h0), f)});

  auto gv = alloc.take(n + 1);
  auto hv = alloc.take(n + 1);
  auto g = poly_vars(gv), h = poly_vars(hv);
  Formula conclusion = mk_and_all(
      {poly_in_O(g), poly_in_O(h), res_eq(g, g0), res_eq(h, h0), poly_eq(f, poly_mul(g, h))});
  std::vector<int> gh;
  for (auto v : gv) gh.push_back(v);
  for (auto v : hv) gh.push_back(v);

  std::vector<int> outer;
  for (auto v : fv) outer.push_back(v);
  for (auto v : g0v) outer.push_back(v);
  for (auto v : h0v) outer.push_back(v);
  return forall_all(outer,
                    mk_implies(std::move(premise), exists_all(gh, std::move(conclusion))));
}

// ---------------------------------------------------------------------------
// phi_d
// ---------------------------------------------------------------------------

long long theta(int d) {
  if (d < 1) throw domain_error(errc::invalid_input, "theta requires d >= 1");
  // number of monomials of degree d in d^2+1 variables: C(d^2 + d, d)
  long long n = static_cast<long long>(d) * d + d;
  long long k = d;
  long long acc = 1;
  for (long long i = 1; i <= k; ++i) acc = acc * (n - k + i) / i;
  return acc;
}

namespace {

void enumerate_exponents(int slots, int degree, std::vector<int>& current,
                         std::vector<std::vector<int>>& out) {
  if (slots == 1) {
    current.push_back(degree);
    out.push_back(current);
    current.pop_back();
    return;
  }
  for (int e = 0; e <= degree; ++e) {
    current.push_back(e);
    enumerate_exponents(slots - 1, degree - e, current, out);
    current.pop_back();
  }
}

}  // namespace

Formula c2d_sentence(int d) {
  if (d < 1) throw domain_error(errc::invalid_input, "c2d_sentence requires d >= 1");
  int nvars = d * d + 1;
  std::vector<std::vector<int>> monomials;
  std::vector<int> scratch;
  enumerate_exponents(nvars, d, scratch, monomials);
  if (static_cast<long long>(monomials.size()) != theta(d))
    throw domain_error(errc::invalid_input, "monomial enumeration mismatch");

  VarAlloc alloc;
  auto avars = alloc.take(static_cast<int>(monomials.size()));
  auto xvars = alloc.take(nvars);

  auto all_zero = [&](const std::vector<int>& vars) {
    std::vector<Formula> parts;
    for (int v : vars) parts.push_back(eq(V(v), c0()));
    return mk_and_all(std::move(parts));
  };

  // sum of a_i * m_i(x)
  Term form = c0();
  bool first = true;
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    Term mono = V(avars[i]);
    for (int j = 0; j < nvars; ++j)
      for (int e = 0; e < monomials[i][j]; ++e) mono = mul(std::move(mono), V(xvars[j]));
    if (first) {
      form = std::move(mono);
      first = false;
    } else {
      form = add(std::move(form), std::move(mono));
    }
  }

  Formula body = mk_implies(
      mk_not(all_zero(avars)),
      exists_all(xvars, mk_and(mk_not(all_zero(xvars)), eq(std::move(form), c0()))));
  return forall_all(avars, std::move(body));
}

// ---------------------------------------------------------------------------
// Relativization transforms
// ---------------------------------------------------------------------------

namespace {

void check_symbols(const Term& t, const Language& lang) {
  switch (t.kind) {
    case Term::Kind::constant:
      if (!lang.has_constant(t.name))
        throw domain_error(errc::wrong_language, "constant '" + t.name + "' outside the language");
      return;
    case Term::Kind::variable:
      return;
    case Term::Kind::apply:
      if (lang.function_arity(t.name) != static_cast<int>(t.args.size()))
        throw domain_error(errc::wrong_language, "function '" + t.name + "' outside the language");
      for (const auto& a : t.args) check_symbols(a, lang);
      return;
  }
}

void check_symbols(const Formula& f, const Language& lang) {
  switch (f.kind()) {
    case Formula::Kind::eq:
      for (const auto& t : f.terms()) check_symbols(t, lang);
      return;
    case Formula::Kind::rel:
      if (lang.relation_arity(f.rel()) != static_cast<int>(f.terms().size()))
        throw domain_error(errc::wrong_language, "relation '" + f.rel() + "' outside the language");
      for (const auto& t : f.terms()) check_symbols(t, lang);
      return;
    default:
      for (const auto& c : f.children()) check_symbols(c, lang);
      if (f.kind() == Formula::Kind::exists || f.kind() == Formula::Kind::forall) return;
  }
}

Formula relativize(const Formula& f, const std::function<Formula(Term)>& guard,
                   const std::function<Formula(const Formula&)>& atom) {
  switch (f.kind()) {
    case Formula::Kind::eq:
    case Formula::Kind::rel:
      return atom(f);
    case Formula::Kind::lnot:
      return mk_not(relativize(f.children()[0], guard, atom));
    case Formula::Kind::land:
      return mk_and(relativize(f.children()[0], guard, atom),
                    relativize(f.children()[1], guard, atom));
    case Formula::Kind::lor:
      return mk_or(relativize(f.children()[0], guard, atom),
                   relativize(f.children()[1], guard, atom));
    case Formula::Kind::implies:
      return mk_implies(relativize(f.children()[0], guard, atom),
                        relativize(f.children()[1], guard, atom));
    case Formula::Kind::iff:
      return mk_iff(relativize(f.children()[0], guard, atom),
                    relativize(f.children()[1], guard, atom));
    case Formula::Kind::exists:
      return mk_exists(f.var(),
                       mk_and(guard(V(f.var())), relativize(f.children()[0], guard, atom)));
    case Formula::Kind::forall:
      return mk_forall(f.var(),
                       mk_implies(guard(V(f.var())), relativize(f.children()[0], guard, atom)));
  }
  throw domain_error(errc::invalid_input, "corrupt formula");
}

Formula guard_free(const Formula& transformed, const std::set<int>& free,
                   const std::function<Formula(Term)>& guard) {
  if (free.empty()) return transformed;
  std::vector<Formula> parts;
  for (int v : free) parts.push_back(guard(V(v)));
  parts.push_back(transformed);
  return mk_and_all(std::move(parts));
}

}  // namespace

Formula relativize_residue(const Formula& f) {
  check_symbols(f, Language::field());
  auto guard = [](Term t) { return leq(c1(), val(std::move(t))); };
  auto atom = [](const Formula& a) {
    if (a.kind() != Formula::Kind::eq)
      throw domain_error(errc::wrong_language, "field formulas have only equality atoms");
    // t1 = t2 becomes 1 < v(t1 + -(t2))
    return lt1(val(add(a.terms()[0], neg(a.terms()[1]))));
  };
  auto free = free_variables(f);
  return guard_free(relativize(f, guard, atom), free, guard);
}

Formula relativize_valuegroup(const Formula& f) {
  check_symbols(f, Language::group());
  auto guard = [](Term t) { return inV(std::move(t)); };
  auto atom = [](const Formula& a) { return a; };
  auto free = free_variables(f);
  return guard_free(relativize(f, guard, atom), free, guard);
}

}  // namespace logic
}  // namespace valence
