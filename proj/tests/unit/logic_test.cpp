#include <sstream>

#include "doctest.h"
#include "logic_gen.hpp"
#include "support.hpp"
#include "valence/logic.hpp"
#include "valence/structure_io.hpp"

using namespace valence;
using namespace valence::logic;
using testsupport::make_rng;
using testsupport::oracle_satisfies;
using testsupport::random_sentence;
using testsupport::random_structure;

TEST_CASE("formula parsing and printing") {
  Language lvf = Language::valued_field();

  Formula f = parse_formula("forall v1. exists v2. v1 * v2 = 1", lvf);
  CHECK(is_sentence(f));
  std::string printed = print_formula(f);
  Formula again = parse_formula(printed, lvf);
  CHECK(f == again);
  CHECK(print_formula(again) == printed);

  // the field-inverse axiom parses to the expected tree
  Formula axiom = parse_formula("forall v1. !(v1 = 0) -> (exists v2. v1 * v2 = 1)", lvf);
  CHECK(axiom.kind() == Formula::Kind::forall);
  CHECK(axiom.children()[0].kind() == Formula::Kind::implies);
  CHECK(axiom.children()[0].children()[0].kind() == Formula::Kind::lnot);
  CHECK(axiom.children()[0].children()[1].kind() == Formula::Kind::exists);
  CHECK(axiom == vf_axioms()[6]);

  CHECK_THROWS_AS(parse_formula("v1 + ", lvf), parse_error);
  CHECK_THROWS_AS(parse_formula("w1 = 0", lvf), parse_error);
}

TEST_CASE("print/parse round-trips on random formulas") {
  auto rng = make_rng(11111);
  Language lvf = Language::valued_field();
  for (int t = 0; t < 200; ++t) {
    Formula f = random_sentence(rng, lvf, 3);
    std::string s1 = print_formula(f);
    Formula g = parse_formula(s1, lvf);
    std::string s2 = print_formula(g);
    CAPTURE(s1);
    CHECK(s1 == s2);
    CHECK(f == g);
  }
}

TEST_CASE("free variables and sentences") {
  Language lvf = Language::valued_field();
  CHECK(is_sentence(char_sentence(5)));
  Formula leqf = parse_formula("v1 <= v2", lvf);
  CHECK(free_variables(leqf) == std::set<int>{1, 2});
  Formula ex = parse_formula("exists v1. v1 <= v2", lvf);
  CHECK(free_variables(ex) == std::set<int>{2});
}

TEST_CASE("renaming hygiene") {
  // the same index bound twice gets separated on construction
  Formula inner1 = mk_exists(1, mk_eq(Term::variable(1), Term::constant("0")));
  Formula inner2 = mk_exists(1, mk_eq(Term::variable(1), Term::constant("1")));
  Formula combined = mk_and(inner1, inner2);
  CHECK(combined.children()[0].var() != combined.children()[1].var());
  // no variable is both free and bound
  Formula mixed = mk_and(mk_eq(Term::variable(1), Term::constant("0")),
                         mk_exists(1, mk_eq(Term::variable(1), Term::constant("1"))));
  auto free = free_variables(mixed);
  CHECK(free.count(1) == 1);
  CHECK(mixed.children()[1].var() != 1);
}

TEST_CASE("satisfaction: characteristic sentences") {
  auto f5 = field_structure(FqField::get(5));
  CHECK(satisfies(f5, char_sentence(5)));
  CHECK(!satisfies(f5, char_sentence(3)));
  for (std::int64_t p : {2, 3, 5, 7, 11, 13}) {
    auto m = field_structure(FqField::get(p));
    for (std::int64_t q : {2, 3, 5, 7, 11, 13})
      CHECK(satisfies(m, char_sentence(q)) == (p == q));
  }
}

TEST_CASE("trivial valued fields model the corrected axiom corpus") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto m = trivial_valued_field(FqField::get(p));
    auto report = models_theory(m, vf_axioms());
    CAPTURE(p);
    CAPTURE(report.failing_index);
    CHECK(report.models);
  }
  // the verbatim corpus fails on the cross-section axiom (index 19)
  auto m7 = trivial_valued_field(FqField::get(7));
  auto verbatim = models_theory(m7, vf_axioms(true));
  CHECK(!verbatim.models);
  CHECK(verbatim.failing_index == 19);
}

TEST_CASE("pure fields lack the valued-field symbols") {
  auto f5 = field_structure(FqField::get(5));
  CHECK_THROWS_AS(models_theory(f5, vf_axioms()), domain_error);
  CHECK(models_theory(f5, Theory{}).models);
}

TEST_CASE("satisfaction agrees with the independent oracle") {
  auto rng = make_rng(424242);
  Language lang;
  lang.constants = {"c"};
  lang.functions = {{"f", 2}, {"g", 1}};
  lang.relations = {{"R", 2}};
  int agreements = 0;
  for (int t = 0; t < 150; ++t) {
    int size = 2 + static_cast<int>(t % 3);
    auto m = random_structure(rng, lang, size);
    auto phi = random_sentence(rng, lang, 3);
    bool a = satisfies(m, phi);
    bool b = oracle_satisfies(m, phi, {});
    CHECK(a == b);
    ++agreements;
  }
  CHECK(agreements == 150);
}

TEST_CASE("isomorphism invariance") {
  auto rng = make_rng(777);
  Language lang;
  lang.constants = {"c"};
  lang.functions = {{"f", 2}};
  lang.relations = {{"R", 1}};
  for (int t = 0; t < 30; ++t) {
    int size = 3;
    auto m = random_structure(rng, lang, size);
    std::vector<int> perm{0, 1, 2};
    std::shuffle(perm.begin(), perm.end(), rng);
    auto n = permuted_structure(m, perm);
    CHECK(is_isomorphism(m, n, perm));
    for (int k = 0; k < 7; ++k) {
      auto phi = random_sentence(rng, lang, 2);
      CHECK(satisfies(m, phi) == satisfies(n, phi));
    }
  }
}

TEST_CASE("hensel sentence shape") {
  Formula h1 = hensel_sentence(1);
  CHECK(is_sentence(h1));
  // 6 leading universal coefficient quantifiers: 3 polynomials x 2
  const Formula* cur = &h1;
  int leading = 0;
  while (cur->kind() == Formula::Kind::forall) {
    ++leading;
    cur = &cur->children()[0];
  }
  CHECK(leading == 6);

  for (int n : {1, 2, 3}) {
    Formula h = hensel_sentence(n);
    CHECK(is_sentence(h));
    std::string s = print_formula(h);
    Formula back = parse_formula(s, Language::valued_field());
    CHECK(back == h);
    CHECK(print_formula(back) == s);
  }
}

TEST_CASE("trivial valued fields model hensel_sentence(1)") {
  for (std::int64_t p : {2, 3, 5, 7}) {
    auto m = trivial_valued_field(FqField::get(p));
    CAPTURE(p);
    CHECK(satisfies(m, hensel_sentence(1), {}, 500'000'000));
  }
}

TEST_CASE("theta and the C2(d) sentence") {
  CHECK(theta(1) == 2);
  CHECK(theta(2) == 15);
  CHECK(theta(3) == 220);
  Formula c1 = c2d_sentence(1);
  CHECK(is_sentence(c1));
  CHECK(satisfies(field_structure(FqField::get(2)), c1));
  CHECK(satisfies(field_structure(FqField::get(3)), c1));
}

TEST_CASE("relativization to the residue field") {
  // Char_p relativized holds in the trivial valued field on F_p
  for (std::int64_t p : {3, 5, 7}) {
    auto m = trivial_valued_field(FqField::get(p));
    Formula rel = relativize_residue(char_sentence(p));
    CHECK(is_sentence(rel));
    CHECK(satisfies(m, rel));
    CHECK(!satisfies(m, relativize_residue(char_sentence(p == 3 ? 5 : 3))));
  }
  // wrong language: the valuation symbol is not a field symbol
  Language lvf = Language::valued_field();
  Formula bad = parse_formula("v(v1) = 0", lvf);
  CHECK_THROWS_AS(relativize_residue(bad), domain_error);
}

TEST_CASE("relativization to the value group") {
  Language lg = Language::group();
  Formula inverse = parse_formula("forall v1. exists v2. v1 * v2 = 1", lg);
  Formula rel = relativize_valuegroup(inverse);
  CHECK(is_sentence(rel));
  auto m = trivial_valued_field(FqField::get(7));
  CHECK(satisfies(m, rel));
}

TEST_CASE("structure files round-trip") {
  auto m = trivial_valued_field(FqField::get(3));
  std::ostringstream os;
  write_structure(os, m);
  std::istringstream is(os.str());
  auto back = read_structure(is);
  CHECK(back.size() == m.size());
  // identical interpretation everywhere: identity map is an isomorphism
  std::vector<int> id{0, 1, 2};
  CHECK(is_isomorphism(m, back, id));
  CHECK(satisfies(back, char_sentence(3)));

  CHECK(structure_from_spec("field:F_5").size() == 5);
  CHECK(structure_from_spec("trivialvf:F_3").size() == 3);
}

TEST_CASE("unassigned free variables are rejected") {
  auto m = field_structure(FqField::get(5));
  Formula open = parse_formula("v1 + v2 = 0", m.language());
  CHECK_THROWS_AS(satisfies(m, open), domain_error);
  CHECK(satisfies(m, open, {{1, 2}, {2, 3}}));
  CHECK(!satisfies(m, open, {{1, 2}, {2, 2}}));
}

TEST_CASE("evaluation budget") {
  auto m = field_structure(FqField::get(7));
  // 4 nested quantifiers, budget too small
  Formula f = parse_formula(
      "forall v1. forall v2. forall v3. forall v4. v1 + v2 + v3 + v4 = v4 + v3 + v2 + v1", m.language());
  CHECK(satisfies(m, f));
  CHECK_THROWS_AS(satisfies(m, f, {}, 100), budget_error);
}
