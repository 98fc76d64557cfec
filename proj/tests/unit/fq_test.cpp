#include "doctest.h"
#include "support.hpp"
#include "valence/fq.hpp"

using namespace valence;
using namespace testsupport;

TEST_CASE("prime field arithmetic") {
  const FqField* f7 = FqField::get(7);
  CHECK((f7->from_int(3) + f7->from_int(5)).residue_int() == 1);
  CHECK((f7->from_int(3) * f7->from_int(5)).residue_int() == 1);
  CHECK((-f7->from_int(3)).residue_int() == 4);

  // inverse checked against brute-force search
  FqElem three = f7->from_int(3);
  auto oracle = brute_inverse(three);
  REQUIRE(oracle.has_value());
  CHECK(oracle->residue_int() == 5);
  CHECK(three.inv() == *oracle);

  CHECK_THROWS_AS(f7->zero().inv(), domain_error);
}

TEST_CASE("field descriptors and construction errors") {
  CHECK(FqField::get(7)->descriptor() == "F_7");
  CHECK(FqField::get(3, 2)->descriptor() == "F_3^2");
  CHECK(FqField::parse("F_5") == FqField::get(5));
  CHECK(FqField::parse("F2^4") == FqField::get(2, 4));
  CHECK_THROWS_AS(FqField::get(6), domain_error);        // composite p
  CHECK_THROWS_AS(FqField::with_modulus(2, {1, 0, 1}), domain_error);  // (x+1)^2
}

TEST_CASE("mixed fields are rejected") {
  const FqField* f5 = FqField::get(5);
  const FqField* f7 = FqField::get(7);
  CHECK_THROWS_AS(f5->one() + f7->one(), domain_error);
}

TEST_CASE("extension field F_4") {
  const FqField* f4 = FqField::get(2, 2);
  // canonical modulus is x^2 + x + 1
  CHECK(f4->modulus() == std::vector<std::int64_t>{1, 1, 1});
  FqElem g = f4->from_coeffs({0, 1});  // class of x
  FqElem g_plus_1 = f4->from_coeffs({1, 1});
  CHECK(g * g == g_plus_1);
}

TEST_CASE("canonical moduli for the acceptance fields") {
  CHECK(FqField::get(3, 2)->modulus() == std::vector<std::int64_t>{1, 0, 1});   // x^2+1
  CHECK(FqField::get(2, 3)->modulus() == std::vector<std::int64_t>{1, 1, 0, 1});
  CHECK(FqField::get(2, 4)->modulus() == std::vector<std::int64_t>{1, 1, 0, 0, 1});
  CHECK(FqField::get(5, 2)->modulus() == std::vector<std::int64_t>{2, 0, 1});   // x^2+2
  CHECK(FqField::get(7, 2)->modulus() == std::vector<std::int64_t>{1, 0, 1});   // x^2+1
}

TEST_CASE("multiplicative generator") {
  CHECK(multiplicative_generator(*FqField::get(2)).is_one());
  CHECK(multiplicative_generator(*FqField::get(7)).residue_int() == 3);
  CHECK(multiplicative_generator(*FqField::get(5)).residue_int() == 2);
  for (auto [p, v] : {std::pair{2, 2}, {3, 2}, {2, 3}, {13, 1}}) {
    const FqField* f = FqField::get(p, v);
    FqElem b = multiplicative_generator(*f);
    CHECK(b.mult_order() == f->q() - 1);
  }
}

TEST_CASE("power sums: paper branch values") {
  const FqField* f5 = FqField::get(5);
  CHECK(power_sum(*f5, 4).residue_int() == 4);  // (q-1) | m gives -1
  CHECK(power_sum(*f5, 3).is_zero());
  CHECK(power_sum(*FqField::get(7), 12).residue_int() == 6);
  CHECK_THROWS_AS(power_sum(*f5, 0), domain_error);
}

TEST_CASE("power sums match the closed form for q <= 49") {
  for (auto [p, v] : {std::pair{2, 1}, {3, 1}, {2, 2}, {5, 1}, {7, 1}, {2, 3}, {3, 2},
                      {11, 1}, {13, 1}, {2, 4}, {5, 2}, {3, 3}, {7, 2}}) {
    const FqField* f = FqField::get(p, v);
    std::int64_t q = f->q();
    for (std::int64_t m = 1; m <= 3 * (q - 1); ++m) {
      FqElem s = power_sum(*f, m);
      if ((q - 1) > 0 && m % (q - 1) == 0) {
        CHECK(s == -f->one());
      } else {
        CHECK(s.is_zero());
      }
    }
  }
}

TEST_CASE("canonical element order is the enumeration order") {
  const FqField* f9 = FqField::get(3, 2);
  for (std::int64_t i = 0; i + 1 < f9->q(); ++i)
    CHECK(f9->element_at(i) < f9->element_at(i + 1));
}
