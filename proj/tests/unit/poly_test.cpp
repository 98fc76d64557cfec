#include "doctest.h"
#include "support.hpp"
#include "valence/poly.hpp"

using namespace valence;
using namespace testsupport;

using IPoly = MultiPoly<long long>;
using IUni = UniPoly<long long>;

TEST_CASE("is_homogeneous") {
  IPoly f(3);
  f.add_term({2, 1, 0}, 1);
  f.add_term({0, 0, 3}, 1);
  CHECK(is_homogeneous(f) == 3);

  IPoly g(2);
  g.add_term({2, 0}, 1);
  g.add_term({0, 1}, 1);
  CHECK(!is_homogeneous(g).has_value());

  // 2x2 symbolic determinant x1 x4 - x2 x3
  IPoly det(4);
  det.add_term({1, 0, 0, 1}, 1);
  det.add_term({0, 1, 1, 0}, -1);
  CHECK(is_homogeneous(det) == 2);
  CHECK(det.evaluate({1, 2, 3, 4}) == -2);

  CHECK(!is_homogeneous(IPoly::zero(2)).has_value());
}

TEST_CASE("evaluate") {
  IPoly f(2);
  f.add_term({2, 0}, 1);
  f.add_term({0, 2}, 1);
  CHECK(f.evaluate({3, 4}) == 25);
  CHECK(f.evaluate({0, 0}) == 0);
  CHECK_THROWS_AS(f.evaluate({1}), domain_error);
}

TEST_CASE("homogenize and dehomogenize") {
  IUni f(std::vector<long long>{-2, 0, 1});  // x^2 - 2
  IPoly fh = homogenize(f);
  IPoly expect(2);
  expect.add_term({2, 0}, 1);
  expect.add_term({0, 2}, -2);
  CHECK(fh == expect);

  IUni lin(std::vector<long long>{1, 1});  // x + 1
  IPoly linh = homogenize(lin);
  IPoly lexpect(2);
  lexpect.add_term({1, 0}, 1);
  lexpect.add_term({0, 1}, 1);
  CHECK(linh == lexpect);

  IUni cube(std::vector<long long>{0, 0, 0, 1});  // x^3
  IPoly cubeh = homogenize(cube);
  CHECK(cubeh.term_count() == 1);
  CHECK(is_homogeneous(cubeh) == 3);

  CHECK_THROWS_AS(homogenize(IUni::constant(4)), domain_error);

  auto rng = make_rng(5);
  for (int t = 0; t < 25; ++t) {
    int d = static_cast<int>(rand_int(rng, 1, 5));
    std::vector<long long> c(d + 1);
    for (auto& x : c) x = rand_int(rng, -4, 4);
    if (c[d] == 0) c[d] = 1;
    IUni p{std::vector<long long>(c)};
    CHECK(dehomogenize(homogenize(p)) == p);
    CHECK(is_homogeneous(homogenize(p)) == d);
  }
}

TEST_CASE("compose") {
  IPoly f(2);
  f.add_term({1, 1}, 1);  // x1 x2
  IPoly s1(2), s2(2);
  s1.add_term({1, 0}, 1);
  s1.add_term({0, 1}, 1);  // x1 + x2
  s2.add_term({1, 0}, 1);
  s2.add_term({0, 1}, -1);  // x1 - x2
  IPoly got = compose(f, {s1, s2});
  IPoly expect(2);
  expect.add_term({2, 0}, 1);
  expect.add_term({0, 2}, -1);
  CHECK(got == expect);

  // degree multiplies for homogeneous compositions
  auto rng = make_rng(11);
  const FqField* f5 = FqField::get(5);
  for (int t = 0; t < 10; ++t) {
    auto outer = random_homogeneous(rng, f5, 2, 2, 3);
    auto inner1 = random_homogeneous(rng, f5, 2, 3, 3);
    auto inner2 = random_homogeneous(rng, f5, 2, 3, 3);
    auto comp = compose(outer, {inner1, inner2});
    if (!comp.is_zero_poly()) CHECK(is_homogeneous(comp) == 6);
    // evaluation respects composition
    std::vector<FqElem> x{random_elem(rng, f5), random_elem(rng, f5)};
    CHECK(comp.evaluate(x) == outer.evaluate({inner1.evaluate(x), inner2.evaluate(x)}));
  }
}

TEST_CASE("sylvester matrix and resultant examples") {
  // Res(x - a, x - b) = a - b under the leading-coefficients-left layout
  for (long long a : {-2, 0, 3})
    for (long long b : {-1, 2, 5}) {
      IUni f(std::vector<long long>{-a, 1});
      IUni g(std::vector<long long>{-b, 1});
      CHECK(resultant(f, g) == a - b);
    }

  IUni f(std::vector<long long>{-1, 0, 1});  // x^2 - 1
  IUni g(std::vector<long long>{-1, 1});     // x - 1
  CHECK(resultant(f, g) == 0);

  IUni a(std::vector<long long>{-3, 1});  // x - 3
  IUni b(std::vector<long long>{3, 1});   // x + 3
  CHECK(resultant(a, b) == 6);

  CHECK_THROWS_AS(resultant(IUni::constant(1), b), domain_error);
}

TEST_CASE("resultant swap sign: Res(f,g) = (-1)^(mn) Res(g,f)") {
  auto rng = make_rng(23);
  const FqField* f7 = FqField::get(7);
  for (int t = 0; t < 40; ++t) {
    int n = static_cast<int>(rand_int(rng, 1, 4));
    int m = static_cast<int>(rand_int(rng, 1, 4));
    auto f = random_unipoly(rng, f7, n);
    auto g = random_unipoly(rng, f7, m);
    FqElem lhs = resultant(f, g);
    FqElem rhs = resultant(g, f);
    if ((n * m) % 2 == 1) rhs = -rhs;
    CHECK(lhs == rhs);
  }
}

TEST_CASE("resultant matches the root-product formula") {
  // Res(f,g) = a_n^m b_m^n prod_(i,j) (alpha_i - beta_j) for split
  // polynomials; fixes the sign convention of the matrix layout
  auto rng = make_rng(1729);
  for (std::int64_t p : {5, 7, 11}) {
    const FqField* fq = FqField::get(p);
    for (int t = 0; t < 25; ++t) {
      int n = static_cast<int>(rand_int(rng, 1, 3));
      int m = static_cast<int>(rand_int(rng, 1, 3));
      FqElem a = random_nonzero(rng, fq), b = random_nonzero(rng, fq);
      std::vector<FqElem> alphas, betas;
      UniPoly<FqElem> f = UniPoly<FqElem>::constant(a);
      for (int i = 0; i < n; ++i) {
        alphas.push_back(random_elem(rng, fq));
        f = f * UniPoly<FqElem>{std::vector<FqElem>{-alphas.back(), fq->one()}};
      }
      UniPoly<FqElem> g = UniPoly<FqElem>::constant(b);
      for (int j = 0; j < m; ++j) {
        betas.push_back(random_elem(rng, fq));
        g = g * UniPoly<FqElem>{std::vector<FqElem>{-betas.back(), fq->one()}};
      }
      FqElem expect = a.pow(m) * b.pow(n);
      for (const auto& alpha : alphas)
        for (const auto& beta : betas) expect = expect * (alpha - beta);
      CHECK(resultant(f, g) == expect);
    }
  }
}

TEST_CASE("resultant vanishes exactly when the Euclidean gcd is nonconstant") {
  auto rng = make_rng(31);
  for (std::int64_t p : {3, 5, 7}) {
    const FqField* f = FqField::get(p);
    for (int t = 0; t < 60; ++t) {
      auto a = random_unipoly(rng, f, static_cast<int>(rand_int(rng, 1, 4)));
      auto b = random_unipoly(rng, f, static_cast<int>(rand_int(rng, 1, 4)));
      if (rand_int(rng, 0, 1) == 1) {
        // plant a shared root
        FqElem r = random_elem(rng, f);
        UniPoly<FqElem> lin{std::vector<FqElem>{-r, f->one()}};
        a = a * lin;
        b = b * lin;
      }
      FqElem res = resultant(a, b);
      auto g = poly_gcd(a, b);
      CHECK((g.degree() >= 1) == res.is_zero());
    }
  }
}

TEST_CASE("bezout identity examples") {
  IUni g(std::vector<long long>{-1, 1});  // x - 1
  IUni h(std::vector<long long>{1, 1});   // x + 1
  auto [phi, psi] = bezout_solve(g, h, IUni::constant(1));
  CHECK(phi == IUni::constant(-1));
  CHECK(psi == IUni::constant(1));

  IUni g2(std::vector<long long>{-3, 1});
  IUni h2(std::vector<long long>{3, 1});
  auto [phi2, psi2] = bezout_solve(g2, h2, IUni::constant(1));
  CHECK(phi2 == IUni::constant(-1));
  CHECK(psi2 == IUni::constant(1));

  auto [zphi, zpsi] = bezout_solve(g2, h2, IUni::zero());
  CHECK(zphi.is_zero_poly());
  CHECK(zpsi.is_zero_poly());

  IUni bad(std::vector<long long>{0, 1});  // x
  CHECK_THROWS_AS(bezout_solve(bad, bad, IUni::constant(1)), domain_error);
}

TEST_CASE("bezout identity holds with degree bounds on random instances") {
  auto rng = make_rng(41);
  for (std::int64_t p : {5, 7, 11}) {
    const FqField* f = FqField::get(p);
    for (int t = 0; t < 40; ++t) {
      int m = static_cast<int>(rand_int(rng, 1, 3));
      int n = static_cast<int>(rand_int(rng, 1, 3));
      auto g = random_unipoly(rng, f, m);
      auto h = random_unipoly(rng, f, n);
      FqElem rho = resultant(g, h);
      if (rho.is_zero()) continue;
      int ldeg = static_cast<int>(rand_int(rng, 0, m + n - 1));
      auto l = random_unipoly(rng, f, ldeg);
      auto [phi, psi] = bezout_solve(g, h, l);
      CHECK(g * phi + h * psi == l.scale(rho));
      CHECK(phi.degree() <= n - 1);
      CHECK(psi.degree() <= m - 1);
    }
  }
}

TEST_CASE("polynomial grammar round-trip") {
  auto parsed = parse_poly("3*x1^2*x2 + 2*t*x3^3");
  CHECK(parsed.n_xvars == 3);
  CHECK(parsed.t_used);
  CHECK(parsed.poly.nvars() == 4);
  std::string printed = print_poly(parsed.poly, parsed.t_used);
  auto reparsed = parse_poly(printed, parsed.n_xvars);
  CHECK(reparsed.poly == parsed.poly);

  auto bare = parse_poly("x^2 - 2");
  CHECK(bare.n_xvars == 1);
  CHECK(!bare.t_used);
  CHECK(bare.poly.evaluate({3}) == 7);

  CHECK_THROWS_AS(parse_poly("x1 + "), parse_error);
  CHECK_THROWS_AS(parse_poly("x0"), parse_error);

  auto rng = make_rng(77);
  for (int t = 0; t < 30; ++t) {
    IPoly p(3);
    for (int k = 0; k < 4; ++k) {
      std::vector<int> e{static_cast<int>(rand_int(rng, 0, 3)),
                         static_cast<int>(rand_int(rng, 0, 2)),
                         static_cast<int>(rand_int(rng, 0, 2))};
      p.add_term(e, rand_int(rng, -5, 5));
    }
    std::string s = print_poly(p, false);
    auto back = parse_poly(s, 3);
    CHECK(back.poly == p);
  }
}
