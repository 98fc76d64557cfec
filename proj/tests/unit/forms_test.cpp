#include "doctest.h"
#include "support.hpp"
#include "valence/forms.hpp"

using namespace valence;
using namespace testsupport;

namespace {

using FPoly = MultiPoly<FqElem>;
using LPoly = MultiPoly<TruncatedLocal>;

FPoly fq_poly(const FqField* f, int nvars, std::vector<std::pair<std::vector<int>, std::int64_t>> terms) {
  FPoly p(nvars);
  for (auto& [e, c] : terms) p.add_term(e, f->from_int(c));
  return p;
}

LPoly local_poly(const LocalRing* ring, int nvars,
                 std::vector<std::pair<std::vector<int>, std::int64_t>> terms, int prec) {
  LPoly p(nvars);
  for (auto& [e, c] : terms) p.add_term(e, TruncatedLocal::from_int(ring, c, prec));
  return p;
}

// Independent oracle: lexicographically least primitive zero modulo
// p^(m+1), enumerating integer coordinates 0..p^(m+1)-1, first coordinate
// most significant.
std::optional<std::vector<std::int64_t>> oracle_primitive_zero(
    const std::vector<std::pair<std::vector<int>, std::int64_t>>& terms, int nvars,
    std::int64_t p, int m) {
  std::int64_t modulus = 1;
  for (int i = 0; i <= m; ++i) modulus *= p;
  std::vector<std::int64_t> x(nvars, 0);
  for (;;) {
    int i = nvars - 1;
    while (i >= 0 && ++x[i] == modulus) x[i--] = 0;
    if (i < 0) return std::nullopt;
    bool primitive = false;
    for (auto v : x) primitive = primitive || (v % p != 0);
    if (!primitive) continue;
    __int128 acc = 0;
    for (const auto& [e, c] : terms) {
      __int128 t = c % modulus;
      for (int j = 0; j < nvars; ++j)
        for (int k = 0; k < e[j]; ++k) t = (t * x[j]) % modulus;
      acc = (acc + t) % modulus;
    }
    if ((acc % modulus + modulus) % modulus == 0) return x;
  }
}

std::int64_t digits_to_int(const std::vector<FqElem>& digits, std::int64_t p) {
  std::int64_t v = 0;
  for (int i = static_cast<int>(digits.size()) - 1; i >= 0; --i) v = v * p + digits[i].residue_int();
  return v;
}

}  // namespace

TEST_CASE("norm forms of quadratic extensions") {
  // F_9 / F_3 with modulus x^2 + 1: the complex-norm analogue
  auto ext9 = ExtensionData::from_field(FqField::get(3, 2));
  auto n9 = norm_form(ext9);
  auto expect9 = fq_poly(FqField::get(3), 2, {{{2, 0}, 1}, {{0, 2}, 1}});
  CHECK(n9 == expect9);

  // F_4 / F_2: x1^2 + x1 x2 + x2^2
  auto ext4 = ExtensionData::from_field(FqField::get(2, 2));
  auto n4 = norm_form(ext4);
  auto expect4 = fq_poly(FqField::get(2), 2, {{{2, 0}, 1}, {{1, 1}, 1}, {{0, 2}, 1}});
  CHECK(n4 == expect4);
  CHECK(!find_nontrivial_zero(n4, FqField::get(2)).has_value());

  CHECK_THROWS_AS(ExtensionData::from_field(FqField::get(5)), domain_error);
}

TEST_CASE("norm forms are normic for small extensions") {
  for (auto [p, v] : {std::pair{2, 2}, {3, 2}, {2, 3}, {5, 2}}) {
    auto ext = ExtensionData::from_field(FqField::get(p, v));
    auto n = norm_form(ext);
    CHECK(is_homogeneous(n) == v);
    CHECK(n.nvars() == v);
    CHECK(!find_nontrivial_zero(n, FqField::get(p)).has_value());
  }
}

TEST_CASE("degenerate algebras are rejected") {
  const FqField* f3 = FqField::get(3);
  // w2*w2 = 0: zero divisors
  std::vector<std::vector<std::vector<FqElem>>> c(
      2, std::vector<std::vector<FqElem>>(2, std::vector<FqElem>(2, f3->zero())));
  c[0][0][0] = f3->one();               // w1 w1 = w1
  c[0][1][1] = c[1][0][1] = f3->one();  // w1 w2 = w2
  // w2 w2 = 0
  CHECK_THROWS_AS(ExtensionData::from_constants(f3, c), domain_error);
}

TEST_CASE("normic towers") {
  auto ext = ExtensionData::from_field(FqField::get(3, 2));
  auto phi = norm_form(ext);  // x1^2 + x2^2 over F_3

  CHECK(normic_tower(phi, 1) == phi);

  auto t2 = normic_tower(phi, 2);
  CHECK(t2.nvars() == 4);
  CHECK(is_homogeneous(t2) == 4);
  CHECK(!find_nontrivial_zero(t2, FqField::get(3)).has_value());

  auto t3 = normic_tower(phi, 3);
  CHECK(t3.nvars() == 8);
  CHECK(is_homogeneous(t3) == 8);
  CHECK(!find_nontrivial_zero(t3, FqField::get(3)).has_value());  // 3^8 points

  auto bad = fq_poly(FqField::get(3), 2, {{{1, 0}, 1}});  // degree 1 != 2 vars
  CHECK_THROWS_AS(normic_tower(bad, 2), domain_error);
}

TEST_CASE("Lang-Nagata reduction: worked F_2 example") {
  const FqField* f2 = FqField::get(2);
  auto f1 = fq_poly(f2, 3, {{{1, 0, 0}, 1}, {{0, 1, 0}, 1}, {{0, 0, 1}, 1}});  // x1+x2+x3
  auto f2form = fq_poly(f2, 3, {{{1, 0, 0}, 1}, {{0, 0, 1}, 1}});              // x1+x3
  auto phi = norm_form(ExtensionData::from_field(FqField::get(2, 2)));

  LangNagataReduction red({f1, f2form}, phi, 1);
  CHECK(red.level_count() == 1);  // N_1 = 3 > D_1 = 2 (d = 1, l = 2)
  auto zero = find_nontrivial_zero(red.composed(), f2);
  REQUIRE(zero.has_value());
  auto common = red.extract(*zero);
  REQUIRE(common.size() == 3);
  bool nontrivial = false;
  for (const auto& c : common) nontrivial = nontrivial || !c.is_zero();
  CHECK(nontrivial);
  CHECK(f1.evaluate(common).is_zero());
  CHECK(f2form.evaluate(common).is_zero());
  // oracle: brute force over all 8 points confirms (1,0,1) is a common zero
  CHECK(common[0].is_one());
  CHECK(common[1].is_zero());
  CHECK(common[2].is_one());
}

TEST_CASE("Lang-Nagata recurrence bookkeeping") {
  const FqField* f3 = FqField::get(3);
  // r = 1: a single linear form in 2 variables with i = 1, l = 2
  auto form = fq_poly(f3, 2, {{{1, 0}, 1}, {{0, 1}, 2}});
  auto phi = norm_form(ExtensionData::from_field(FqField::get(3, 2)));
  LangNagataReduction red({form}, phi, 1);
  // slots_1 = 2, groups = 2, N_1 = 4 > D_1 = 2: stops at level 1
  CHECK(red.level_count() == 1);
  CHECK(red.groups_at(0) == 2);
  CHECK(red.var_label(3) == std::pair<int, int>{1, 1});
  CHECK_THROWS_AS(LangNagataReduction({form}, form, 1), domain_error);  // n = rd^i fails
}

TEST_CASE("Lang-Nagata extraction soundness on random instances") {
  auto rng = make_rng(2024);
  const FqField* f2 = FqField::get(2);
  auto phi = norm_form(ExtensionData::from_field(FqField::get(2, 2)));
  int checked = 0;
  for (int t = 0; t < 40; ++t) {
    auto a = random_homogeneous(rng, f2, 3, 1, 2);
    auto b = random_homogeneous(rng, f2, 3, 1, 2);
    if (!is_homogeneous(a) || !is_homogeneous(b)) continue;
    if (*is_homogeneous(a) != 1 || *is_homogeneous(b) != 1) continue;
    LangNagataReduction red({a, b}, phi, 1);
    auto zero = find_nontrivial_zero(red.composed(), f2);
    if (!zero) continue;
    auto common = red.extract(*zero);
    CHECK(a.evaluate(common).is_zero());
    CHECK(b.evaluate(common).is_zero());
    bool nontrivial = false;
    for (const auto& c : common) nontrivial = nontrivial || !c.is_zero();
    CHECK(nontrivial);
    ++checked;
  }
  CHECK(checked >= 10);
}

TEST_CASE("expand_algebraic: x1^2 over F_4") {
  const FqField* f4 = FqField::get(2, 2);
  const FqField* f2 = FqField::get(2);
  auto ext = ExtensionData::from_field(f4);
  FPoly f(1);
  f.add_term({2}, f4->one());
  auto comps = expand_algebraic(f, ext);
  REQUIRE(comps.size() == 2);
  // (x11 + x12 g)^2 = (x11^2 + x12^2) + x12^2 g  over F_2 with g^2 = g+1
  auto c0 = fq_poly(f2, 2, {{{2, 0}, 1}, {{0, 2}, 1}});
  auto c1 = fq_poly(f2, 2, {{{0, 2}, 1}});
  CHECK(comps[0] == c0);
  CHECK(comps[1] == c1);
}

TEST_CASE("expand_algebraic evaluation identity") {
  auto rng = make_rng(313);
  const FqField* f9 = FqField::get(3, 2);
  auto ext = ExtensionData::from_field(f9);
  for (int t = 0; t < 20; ++t) {
    auto f = random_homogeneous(rng, f9, 2, 2, 3);
    if (!is_homogeneous(f)) continue;
    auto comps = expand_algebraic(f, ext);
    REQUIRE(comps.size() == 2);
    for (int pt = 0; pt < 5; ++pt) {
      // random base point, mapped back into E
      std::vector<FqElem> base_pt;
      for (int i = 0; i < 4; ++i) base_pt.push_back(random_elem(rng, FqField::get(3)));
      auto epoint = algebraic_point(base_pt, ext);
      FqElem lhs = f.evaluate(epoint);
      // sum_k f_k(base) w_k
      FqElem rhs = f9->zero();
      for (int k = 0; k < 2; ++k) {
        std::vector<std::int64_t> wk(2, 0);
        wk[k] = 1;
        rhs = rhs +
              f9->from_coeffs(wk) * f9->from_coeffs({comps[k].evaluate(base_pt).residue_int()});
      }
      CHECK(lhs == rhs);
    }
  }
  // zero polynomial expands to zero components
  auto zeros = expand_algebraic(FPoly::zero(2), ext);
  for (const auto& z : zeros) CHECK(z.is_zero_poly());
}

TEST_CASE("minimal_s") {
  CHECK(minimal_s(5, 2, 1, 1) == 0);  // (5-4)s > 2*2-5 = -1
  CHECK(minimal_s(5, 2, 1, 2) == 2);  // s > 1
  CHECK(minimal_s(5, 2, 1, 3) == 4);  // s > 3
  CHECK_THROWS_AS(minimal_s(4, 2, 1, 0), domain_error);
}

TEST_CASE("expand_transcendental worked example") {
  const FqField* f3 = FqField::get(3);
  // f = x1^2 + t x2^2 in 5 declared variables
  MultiPoly<UniPoly<FqElem>> f(5);
  f.add_term({2, 0, 0, 0, 0}, UniPoly<FqElem>::constant(f3->one()));
  f.add_term({0, 2, 0, 0, 0}, UniPoly<FqElem>::monomial(f3->one(), 1));
  auto forms = expand_transcendental(f, 0);
  REQUIRE(forms.size() == 2);  // f_0, f_1 (d*s + r + 1 = 0 + 1 + 1)
  auto f0 = fq_poly(f3, 5, {{{2, 0, 0, 0, 0}, 1}});
  auto f1 = fq_poly(f3, 5, {{{0, 2, 0, 0, 0}, 1}});
  CHECK(forms[0] == f0);
  CHECK(forms[1] == f1);

  // constant-coefficient form at s = 1: components vanish above d*s
  MultiPoly<UniPoly<FqElem>> g(2);
  g.add_term({2, 0}, UniPoly<FqElem>::constant(f3->one()));
  g.add_term({0, 2}, UniPoly<FqElem>::constant(f3->from_int(2)));
  auto gf = expand_transcendental(g, 1);
  REQUIRE(gf.size() == 3);  // k = 0, 1, 2 = d*s
  for (std::size_t k = 0; k < gf.size(); ++k)
    if (k > 2) CHECK(gf[k].is_zero_poly());
}

TEST_CASE("expand_transcendental evaluation identity") {
  auto rng = make_rng(717);
  const FqField* f2 = FqField::get(2);
  for (int t = 0; t < 20; ++t) {
    MultiPoly<UniPoly<FqElem>> f(3);
    for (int k = 0; k < 4; ++k) {
      std::vector<int> e(3, 0);
      int budget = 2;
      for (int i = 0; i < 2; ++i) {
        e[i] = static_cast<int>(rand_int(rng, 0, budget));
        budget -= e[i];
      }
      e[2] = budget;
      std::vector<FqElem> coeffs{random_elem(rng, f2), random_elem(rng, f2)};
      UniPoly<FqElem> c(std::move(coeffs));
      if (!c.is_zero_poly()) f.add_term(e, c);
    }
    if (f.is_zero_poly()) continue;
    int s = 1;
    auto forms = expand_transcendental(f, s);
    for (int pt = 0; pt < 5; ++pt) {
      // random digits X_{j,k}
      std::vector<FqElem> X;
      for (int i = 0; i < 3 * (s + 1); ++i) X.push_back(random_elem(rng, f2));
      // lhs: f evaluated at the polynomial substitutions
      std::vector<UniPoly<FqElem>> subs;
      for (int j = 0; j < 3; ++j) {
        std::vector<FqElem> c(X.begin() + j * (s + 1), X.begin() + (j + 1) * (s + 1));
        subs.emplace_back(std::move(c));
      }
      UniPoly<FqElem> lhs = f.evaluate(subs);
      // rhs: sum f_k(X) t^k
      std::vector<FqElem> rhs_c(forms.size(), f2->zero());
      for (std::size_t k = 0; k < forms.size(); ++k) rhs_c[k] = forms[k].evaluate(X);
      UniPoly<FqElem> rhs(std::move(rhs_c));
      CHECK(lhs == rhs);
    }
  }
}

TEST_CASE("primitive zeros of x1^2+x2^2+x3^2 over Z_3") {
  const LocalRing* z3 = LocalRing::padic(3);
  std::vector<std::pair<std::vector<int>, std::int64_t>> terms{
      {{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}};

  auto f0 = local_poly(z3, 3, terms, 4);
  auto w0 = primitive_zero_mod(f0, 0);
  REQUIRE(w0.has_value());
  CHECK(verify_zero_mod(f0, *w0));
  auto oracle0 = oracle_primitive_zero(terms, 3, 3, 0);
  REQUIRE(oracle0.has_value());
  CHECK(digits_to_int(w0->point[0], 3) == (*oracle0)[0]);
  CHECK(digits_to_int(w0->point[1], 3) == (*oracle0)[1]);
  CHECK(digits_to_int(w0->point[2], 3) == (*oracle0)[2]);
  CHECK(*oracle0 == std::vector<std::int64_t>{1, 1, 1});

  auto w1 = primitive_zero_mod(f0, 1);
  REQUIRE(w1.has_value());
  CHECK(verify_zero_mod(f0, *w1));
  auto oracle1 = oracle_primitive_zero(terms, 3, 3, 1);
  REQUIRE(oracle1.has_value());
  for (int c = 0; c < 3; ++c) CHECK(digits_to_int(w1->point[c], 3) == (*oracle1)[c]);
  // the lex-least primitive zero mod 9 (1+1+16 = 18 = 0 mod 9)
  CHECK(*oracle1 == std::vector<std::int64_t>{1, 1, 4});

  // two squares admit no primitive zero mod 3
  auto g = local_poly(z3, 2, {{{2, 0}, 1}, {{0, 2}, 1}}, 3);
  CHECK(!primitive_zero_mod(g, 0).has_value());
}

TEST_CASE("lift_zero_search") {
  const LocalRing* z3 = LocalRing::padic(3);
  std::vector<std::pair<std::vector<int>, std::int64_t>> terms{
      {{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, 1}};
  auto f = local_poly(z3, 3, terms, 6);

  auto w = lift_zero_search(f, 2);
  REQUIRE(w.has_value());
  CHECK(w->modulus_exponent == 2);
  CHECK(w->is_primitive());
  CHECK(verify_zero_mod(f, *w));
  // projections to lower depth are primitive zeros
  for (int j = 0; j < 2; ++j) {
    PrimitiveZero proj;
    proj.modulus_exponent = j;
    for (const auto& c : w->point)
      proj.point.emplace_back(c.begin(), c.begin() + j + 1);
    CHECK(proj.is_primitive());
    CHECK(verify_zero_mod(f, proj));
  }
  CHECK(lift_zero_search(f, 3).has_value());

  // no residue zero at all: absent immediately
  auto g = local_poly(z3, 2, {{{2, 0}, 1}, {{0, 2}, 1}}, 6);
  CHECK(!lift_zero_search(g, 3).has_value());

  // x1 x2 - x3^2 over Z_5 at depth 2, verified by evaluation mod 125
  const LocalRing* z5 = LocalRing::padic(5);
  auto h = local_poly(z5, 3, {{{1, 1, 0}, 1}, {{0, 0, 2}, -1}}, 6);
  auto wh = lift_zero_search(h, 2);
  REQUIRE(wh.has_value());
  CHECK(verify_zero_mod(h, *wh));
}

TEST_CASE("enumeration and lift search agree on existence") {
  auto rng = make_rng(808017);
  for (std::int64_t p : {3, 5}) {
    const LocalRing* ring = LocalRing::padic(p);
    for (int t = 0; t < 25; ++t) {
      LPoly f(3);
      for (int i = 0; i < 3; ++i)
        for (int j = i; j < 3; ++j) {
          if (rand_int(rng, 0, 2) == 0) continue;
          std::vector<int> e(3, 0);
          e[i] += 1;
          e[j] += 1;
          f.add_term(e, TruncatedLocal::from_int(ring, rand_int(rng, 1, p * p - 1), 5));
        }
      if (f.is_zero_poly() || !is_homogeneous(f)) continue;
      for (int m : {0, 1}) {
        auto enumerated = primitive_zero_mod(f, m);
        auto lifted = lift_zero_search(f, m);
        CHECK(enumerated.has_value() == lifted.has_value());
        if (enumerated) CHECK(verify_zero_mod(f, *enumerated));
        if (lifted) CHECK(verify_zero_mod(f, *lifted));
      }
    }
  }
}

TEST_CASE("lift search handles degenerate residue quadrics") {
  // Almost every coefficient carries a factor of pi, so the residue form
  // involves only two variables and the projection tree is dominated by
  // flat directions; the gradient shortcut must keep this cheap on both
  // sides.
  std::vector<std::pair<std::vector<int>, std::int64_t>> units{{{0, 1, 1, 0, 0}, 9},
                                                               {{2, 0, 0, 0, 0}, 6}};
  std::vector<std::pair<std::vector<int>, std::int64_t>> shifted{
      {{0, 0, 0, 0, 2}, 1}, {{0, 0, 0, 1, 1}, 5}, {{0, 0, 0, 2, 0}, 9}, {{0, 0, 1, 0, 1}, 2},
      {{0, 0, 1, 1, 0}, 10}, {{0, 0, 2, 0, 0}, 2}, {{0, 1, 0, 0, 1}, 3}, {{0, 1, 0, 1, 0}, 5},
      {{0, 2, 0, 0, 0}, 8}, {{1, 0, 0, 0, 1}, 1}, {{1, 0, 0, 1, 0}, 2}, {{1, 0, 1, 0, 0}, 9},
      {{1, 1, 0, 0, 0}, 3}};

  const LocalRing* z11 = LocalRing::padic(11);
  MultiPoly<TruncatedLocal> fp(5);
  for (auto& [e, c] : units) fp.add_term(e, TruncatedLocal::from_int(z11, c, 5));
  for (auto& [e, c] : shifted) fp.add_term(e, TruncatedLocal::from_int(z11, c * 11, 5));
  auto wp = lift_zero_search(fp, 3, 20'000'000);
  REQUIRE(wp.has_value());
  CHECK(verify_zero_mod(fp, *wp));

  const FqField* f11 = FqField::get(11);
  const LocalRing* s11 = LocalRing::series(f11);
  MultiPoly<TruncatedLocal> fs(5);
  for (auto& [e, c] : units) fs.add_term(e, TruncatedLocal::from_int(s11, c, 5));
  for (auto& [e, c] : shifted)
    fs.add_term(e, TruncatedLocal::from_digits(s11, 1, {f11->from_int(c)}, 5));
  auto ws = lift_zero_search(fs, 3, 20'000'000);
  REQUIRE(ws.has_value());
  CHECK(verify_zero_mod(fs, *ws));
}

TEST_CASE("c2_witness_series examples") {
  const FqField* f3 = FqField::get(3);
  const LocalRing* r3 = LocalRing::series(f3);

  // sum of five squares over F_3[[t]]: constant witness (1,1,1,0,0)
  std::vector<std::pair<std::vector<int>, std::int64_t>> sq5;
  for (int i = 0; i < 5; ++i) {
    std::vector<int> e(5, 0);
    e[i] = 2;
    sq5.emplace_back(e, 1);
  }
  auto f = local_poly(r3, 5, sq5, 4);
  for (int m : {0, 1, 2}) {
    auto w = c2_witness_series(f, m);
    CHECK(w.is_primitive());
    CHECK(verify_zero_mod(f, w));
    // constant witness with three unit coordinates (3 = 0 in F_3); the
    // common-zero search returns its lexicographically least solution
    CHECK(digits_to_int(w.point[0], 3) == 0);
    CHECK(digits_to_int(w.point[1], 3) == 0);
    CHECK(digits_to_int(w.point[2], 3) == 1);
    CHECK(digits_to_int(w.point[3], 3) == 1);
    CHECK(digits_to_int(w.point[4], 3) == 1);
  }

  // x1^2 + t x2^2 + x3^2 + x4^2 + x5^2 over F_2[[t]] at m = 1
  const FqField* f2field = FqField::get(2);
  const LocalRing* r2 = LocalRing::series(f2field);
  LPoly g(5);
  g.add_term({2, 0, 0, 0, 0}, TruncatedLocal::from_int(r2, 1, 4));
  g.add_term({0, 2, 0, 0, 0}, TruncatedLocal::power_of_pi(r2, 1, 4));
  g.add_term({0, 0, 2, 0, 0}, TruncatedLocal::from_int(r2, 1, 4));
  g.add_term({0, 0, 0, 2, 0}, TruncatedLocal::from_int(r2, 1, 4));
  g.add_term({0, 0, 0, 0, 2}, TruncatedLocal::from_int(r2, 1, 4));
  auto wg = c2_witness_series(g, 1);
  CHECK(wg.is_primitive());
  CHECK(verify_zero_mod(g, wg));

  // all coefficients divisible by t^(m+1): the zero-polynomial branch
  LPoly h(5);
  std::vector<int> e0(5, 0);
  e0[0] = 2;
  h.add_term(e0, TruncatedLocal::power_of_pi(r3, 3, 6));
  auto wh = c2_witness_series(h, 1);
  CHECK(wh.is_primitive());
  CHECK(digits_to_int(wh.point[0], 3) == 1);
  for (int c = 1; c < 5; ++c) CHECK(digits_to_int(wh.point[c], 3) == 0);

  // hypothesis failure: n <= d^2
  LPoly narrow(4);
  std::vector<int> e(4, 0);
  e[0] = 2;
  narrow.add_term(e, TruncatedLocal::from_int(r3, 1, 4));
  CHECK_THROWS_AS(c2_witness_series(narrow, 1), domain_error);
}

TEST_CASE("random series witnesses verify") {
  auto rng = make_rng(52);
  for (std::int64_t p : {2, 3}) {
    const FqField* field = FqField::get(p);
    const LocalRing* ring = LocalRing::series(field);
    for (int t = 0; t < 10; ++t) {
      LPoly f(5);
      // random degree-2 form with small polynomial coefficients
      for (int i = 0; i < 5; ++i)
        for (int j = i; j < 5; ++j) {
          if (rand_int(rng, 0, 2) == 0) continue;
          std::vector<int> e(5, 0);
          e[i] += 1;
          e[j] += 1;
          std::int64_t c = rand_int(rng, 1, p - 1 > 0 ? p - 1 : 1);
          int shift = static_cast<int>(rand_int(rng, 0, 1));
          f.add_term(e, TruncatedLocal::from_digits(
                            ring, shift, {field->from_int(c)}, 4));
        }
      if (f.is_zero_poly() || !is_homogeneous(f)) continue;
      auto w = c2_witness_series(f, 2);
      CHECK(w.is_primitive());
      CHECK(verify_zero_mod(f, w));
    }
  }
}
