#include "doctest.h"
#include "support.hpp"
#include "valence/local.hpp"

using namespace valence;
using namespace testsupport;

namespace {

TruncatedLocal random_local(std::mt19937_64& rng, const LocalRing* ring, int prec) {
  const FqField* rf = ring->residue_field();
  int lowest = static_cast<int>(rand_int(rng, -2, 2));
  int len = static_cast<int>(rand_int(rng, 1, prec - lowest + 1));
  std::vector<FqElem> digits;
  for (int i = 0; i < len; ++i) digits.push_back(random_elem(rng, rf));
  if (digits[0].is_zero()) digits[0] = rf->one();
  return TruncatedLocal::from_digits(ring, lowest, std::move(digits), prec);
}

}  // namespace

TEST_CASE("ring descriptors") {
  CHECK(LocalRing::parse("7adic") == LocalRing::padic(7));
  CHECK(LocalRing::parse("Q_7") == LocalRing::padic(7));
  CHECK(LocalRing::parse("Z5") == LocalRing::padic(5));
  CHECK(LocalRing::parse("F3[[t]]") == LocalRing::series(FqField::get(3)));
  CHECK(LocalRing::parse("F_3^2((t))") == LocalRing::series(FqField::get(3, 2)));
  CHECK(LocalRing::padic(7)->descriptor() == "Q_7");
  CHECK(LocalRing::series(FqField::get(3))->descriptor() == "F_3((t))");
  CHECK_THROWS_AS(LocalRing::parse("bogus"), domain_error);
}

TEST_CASE("worked addition in Q_3: 1 + (2 + 2*3 + 3^2) has valuation 2") {
  const LocalRing* q3 = LocalRing::padic(3);
  auto a = TruncatedLocal::from_int(q3, 1, 4);
  auto b = TruncatedLocal::from_int(q3, 2 + 2 * 3 + 9, 4);
  auto s = a + b;
  CHECK(s.valuation() == Valuation{false, 2});
  CHECK(s.digit_at(2).residue_int() == 2);  // 2 * 3^2
  CHECK(s.precision() == 4);
}

TEST_CASE("series addition cancels without carries") {
  const LocalRing* r = LocalRing::series(FqField::get(3));
  const FqField* f3 = FqField::get(3);
  auto a = TruncatedLocal::from_digits(r, 0, {f3->from_int(1), f3->from_int(1)}, 1);
  auto b = TruncatedLocal::from_digits(r, 0, {f3->from_int(2), f3->from_int(2)}, 1);
  auto s = a + b;
  CHECK(s.is_known_zero());
  CHECK(!s.is_exact_zero());
  CHECK(s.precision() == 1);
  CHECK_THROWS_AS(s.valuation(), precision_error);
}

TEST_CASE("rational reconstruction: 1/3 in Q_5") {
  const LocalRing* q5 = LocalRing::padic(5);
  auto third = TruncatedLocal::from_rational(q5, 1, 3, 2);
  // oracle: solve 3x = 1 mod 125 -> 42 = 2 + 3*5 + 1*25
  CHECK(third.digit_at(0).residue_int() == 2);
  CHECK(third.digit_at(1).residue_int() == 3);
  CHECK(third.digit_at(2).residue_int() == 1);

  auto prod = third * TruncatedLocal::from_int(q5, 3, 2);
  CHECK(prod == TruncatedLocal::from_int(q5, 1, 2));

  CHECK(TruncatedLocal::from_rational(q5, 2, 1, 3).digit_at(0).residue_int() == 2);
  auto inv7 = TruncatedLocal::from_rational(LocalRing::padic(7), 1, 7, 3);
  CHECK(inv7.valuation() == Valuation{false, -1});
  CHECK(inv7.digit_at(-1).residue_int() == 1);
  CHECK_THROWS_AS(TruncatedLocal::from_rational(q5, 1, 0, 2), domain_error);
}

TEST_CASE("valuation worked examples") {
  const LocalRing* q3 = LocalRing::padic(3);
  CHECK(TruncatedLocal::from_int(q3, 18, 5).valuation() == Valuation{false, 2});
  CHECK(TruncatedLocal::exact_zero(q3).valuation().infinite);

  const LocalRing* rt = LocalRing::series(FqField::get(5));
  const FqField* f5 = FqField::get(5);
  auto x = TruncatedLocal::from_digits(rt, -2, {f5->one(), f5->zero(), f5->one()}, 3);
  CHECK(x.valuation() == Valuation{false, -2});
}

TEST_CASE("residue and reduce_mod") {
  const LocalRing* q5 = LocalRing::padic(5);
  CHECK(TruncatedLocal::from_int(q5, 7, 3).residue().residue_int() == 2);

  const LocalRing* rt = LocalRing::series(FqField::get(3));
  const FqField* f3 = FqField::get(3);
  auto a = TruncatedLocal::from_digits(rt, 0, {f3->from_int(2), f3->one()}, 3);
  CHECK(a.residue().residue_int() == 2);
  CHECK(TruncatedLocal::power_of_pi(q5, 1, 3).residue().is_zero());

  const LocalRing* q7 = LocalRing::padic(7);
  auto ten = TruncatedLocal::from_int(q7, 10, 4);
  auto d = ten.reduce_mod(1);
  REQUIRE(d.size() == 2);
  CHECK(d[0].residue_int() == 3);
  CHECK(d[1].residue_int() == 1);
  CHECK(ten.reduce_mod(0)[0] == ten.residue());

  auto b = TruncatedLocal::from_digits(rt, 0, {f3->from_int(2), f3->zero(), f3->one()}, 3);
  auto db = b.reduce_mod(2);
  CHECK(db[0].residue_int() == 2);
  CHECK(db[1].residue_int() == 0);
  CHECK(db[2].residue_int() == 1);

  auto below = TruncatedLocal::power_of_pi(q5, -1, 3);
  CHECK_THROWS_AS(below.residue(), domain_error);
  CHECK_THROWS_AS(ten.reduce_mod(9), precision_error);
}

TEST_CASE("projection coherence: dropping the top digit") {
  auto rng = make_rng(303);
  for (const LocalRing* ring : {LocalRing::padic(5), LocalRing::series(FqField::get(2, 2))}) {
    for (int t = 0; t < 40; ++t) {
      auto a = random_local(rng, ring, 5);
      if (!a.known_valuation_at_least(0)) continue;
      for (int n = 1; n <= 4; ++n) {
        auto dn = a.reduce_mod(n);
        auto dn1 = a.reduce_mod(n - 1);
        dn.pop_back();
        CHECK(dn == dn1);
      }
    }
  }
}

TEST_CASE("laurent expansion of rational functions") {
  const FqField* f2 = FqField::get(2);
  const LocalRing* r2 = LocalRing::series(f2);
  UniPoly<FqElem> one{std::vector<FqElem>{f2->one()}};
  UniPoly<FqElem> den{std::vector<FqElem>{f2->one(), f2->one()}};  // 1 - t = 1 + t over F_2
  auto geo = TruncatedLocal::from_ratfunc(r2, one, den, 3);
  for (int k = 0; k <= 3; ++k) CHECK(geo.digit_at(k).is_one());

  const FqField* f3 = FqField::get(3);
  const LocalRing* r3 = LocalRing::series(f3);
  UniPoly<FqElem> t2{std::vector<FqElem>{f3->zero(), f3->zero(), f3->one()}};
  UniPoly<FqElem> t1{std::vector<FqElem>{f3->zero(), f3->one()}};
  auto quot = TruncatedLocal::from_ratfunc(r3, t2, t1, 3);
  CHECK(quot.valuation() == Valuation{false, 1});
  CHECK(quot.digit_at(1).is_one());

  UniPoly<FqElem> onep{std::vector<FqElem>{f3->one()}};
  UniPoly<FqElem> denp{std::vector<FqElem>{f3->one(), f3->one()}};  // 1 + t
  auto inv = TruncatedLocal::from_ratfunc(r3, onep, denp, 2);
  CHECK(inv.digit_at(0).residue_int() == 1);
  CHECK(inv.digit_at(1).residue_int() == 2);
  CHECK(inv.digit_at(2).residue_int() == 1);
  // multiply back
  auto den_elem = TruncatedLocal::from_digits(r3, 0, {f3->one(), f3->one()}, 2);
  CHECK(inv * den_elem == TruncatedLocal::from_int(r3, 1, 2));
}

TEST_CASE("ultrametric and homomorphism laws on random pairs") {
  auto rng = make_rng(505);
  for (const LocalRing* ring : {LocalRing::padic(3), LocalRing::padic(7),
                                LocalRing::series(FqField::get(2)),
                                LocalRing::series(FqField::get(3, 2))}) {
    for (int t = 0; t < 125; ++t) {
      auto a = random_local(rng, ring, 6);
      auto b = random_local(rng, ring, 6);
      long long va = a.valuation().value;
      long long vb = b.valuation().value;

      auto sum = a + b;
      if (!sum.is_known_zero()) {
        long long vs = sum.valuation().value;
        CHECK(vs >= std::min(va, vb));
        if (va != vb) CHECK(vs == std::min(va, vb));
      } else {
        // cancellation to the full window is only possible at equal valuations
        CHECK(va == vb);
      }

      auto prod = a * b;
      CHECK(prod.valuation().value == va + vb);
      CHECK(a.inv().valuation().value == -va);
      CHECK((-a).valuation().value == va);
    }
  }
}

TEST_CASE("inverse agrees with multiplication") {
  auto rng = make_rng(606);
  for (const LocalRing* ring : {LocalRing::padic(5), LocalRing::series(FqField::get(3))}) {
    for (int t = 0; t < 30; ++t) {
      auto a = random_local(rng, ring, 6);
      auto ainv = a.inv();
      auto prod = a * ainv;
      CHECK(prod == TruncatedLocal::from_int(ring, 1, prod.precision()));
    }
  }
}

TEST_CASE("rational arithmetic pushed through from_rational") {
  const LocalRing* q7 = LocalRing::padic(7);
  auto rng = make_rng(707);
  for (int t = 0; t < 40; ++t) {
    std::int64_t a = rand_int(rng, -20, 20), b = rand_int(rng, 1, 20);
    std::int64_t c = rand_int(rng, -20, 20), d = rand_int(rng, 1, 20);
    if (a == 0 || c == 0) continue;
    auto x = TruncatedLocal::from_rational(q7, a, b, 5);
    auto y = TruncatedLocal::from_rational(q7, c, d, 5);
    auto sum = TruncatedLocal::from_rational(q7, a * d + c * b, b * d, 5);
    auto prod = TruncatedLocal::from_rational(q7, a * c, b * d, 5);
    CHECK(x + y == sum);
    CHECK(x * y == prod);
  }
}

TEST_CASE("residue is a ring homomorphism on O") {
  auto rng = make_rng(808);
  for (const LocalRing* ring : {LocalRing::padic(5), LocalRing::series(FqField::get(2, 2))}) {
    for (int t = 0; t < 40; ++t) {
      auto a = random_local(rng, ring, 4);
      auto b = random_local(rng, ring, 4);
      if (!a.known_valuation_at_least(0) || !b.known_valuation_at_least(0)) continue;
      CHECK((a + b).residue() == a.residue() + b.residue());
      CHECK((a * b).residue() == a.residue() * b.residue());
    }
  }
}

TEST_CASE("text forms round-trip") {
  const LocalRing* q7 = LocalRing::padic(7);
  auto a = TruncatedLocal::from_int(q7, 10, 1);
  CHECK(a.to_string() == "3 + 7 + O(7^2)");
  CHECK(parse_local(q7, a.to_string()) == a);
  CHECK(parse_local(q7, "3 + 1*7 + O(7^2)") == a);

  const LocalRing* r3 = LocalRing::series(FqField::get(3));
  const FqField* f3 = FqField::get(3);
  auto b = TruncatedLocal::from_digits(r3, -1, {f3->from_int(2), f3->one(), f3->one()}, 1);
  CHECK(b.to_string() == "2*t^-1 + 1 + t + O(t^2)");
  CHECK(parse_local(r3, b.to_string()) == b);

  CHECK(parse_local(q7, "0").is_exact_zero());
  auto kz = parse_local(q7, "O(7^3)");
  CHECK(kz.is_known_zero());
  CHECK(kz.precision() == 2);

  auto rng = make_rng(909);
  for (const LocalRing* ring : {LocalRing::padic(5), LocalRing::series(FqField::get(3, 2))}) {
    for (int t = 0; t < 30; ++t) {
      auto x = random_local(rng, ring, 4);
      auto y = parse_local(ring, x.to_string());
      CHECK(x == y);
      CHECK(x.to_string() == y.to_string());
    }
  }

  CHECK_THROWS_AS(parse_local(q7, "3 + "), parse_error);
  CHECK_THROWS_AS(parse_local(q7, "9 + O(7^2)"), parse_error);
}

TEST_CASE("precision bookkeeping in multiplication") {
  const LocalRing* q5 = LocalRing::padic(5);
  auto a = TruncatedLocal::power_of_pi(q5, 2, 6);   // v=2, prec 6
  auto b = TruncatedLocal::from_int(q5, 3, 4);      // v=0, prec 4
  auto prod = a * b;
  // min(v(a)+prec(b), v(b)+prec(a)) = min(2+4, 0+6) = 6
  CHECK(prod.precision() == 6);
  CHECK(prod.valuation() == Valuation{false, 2});

  CHECK((TruncatedLocal::exact_zero(q5) * b).is_exact_zero());
  CHECK_THROWS_AS(TruncatedLocal::known_zero(q5, 3).inv(), precision_error);
  CHECK_THROWS_AS(TruncatedLocal::exact_zero(q5).inv(), domain_error);
}
