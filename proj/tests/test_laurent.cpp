#include <random>

#include "doctest.h"
#include "qmarkoff/laurent.hpp"

using namespace qmarkoff;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> deg(-4, 4), len(0, 6), coef(-20, 20);
  std::vector<BigInt> cs(static_cast<std::size_t>(len(rng)));
  for (auto& c : cs) c = coef(rng);
  return LaurentPoly(deg(rng), std::move(cs));
}

}  // namespace

TEST_CASE("canonical form") {
  LaurentPoly p(-2, {0, 0, 1, 2, 0});
  CHECK(p.min_degree() == 0);
  CHECK(p.coeffs().size() == 2);
  CHECK(LaurentPoly(3, {0, 0}).is_zero());
  CHECK(LaurentPoly(3, {0, 0}) == LaurentPoly());
  CHECK(LaurentPoly(3, {0, 0}).min_degree() == 0);
}

TEST_CASE("basic arithmetic") {
  const LaurentPoly q = LaurentPoly::q();
  CHECK((q + 1) * (q - 1) == q * q - 1);
  CHECK(q + LaurentPoly() == q);
  CHECK((LaurentPoly::monomial(1, -1) + 1) * q == 1 + q);
  CHECK((q - q).is_zero());
  CHECK(q.shifted(-3) == LaurentPoly::monomial(1, -2));
}

TEST_CASE("ring axioms on random polynomials") {
  std::mt19937_64 rng(12345);
  for (int i = 0; i < 300; ++i) {
    auto a = random_poly(rng), b = random_poly(rng), c = random_poly(rng);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a + b) + c == a + (b + c));
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == LaurentPoly());
    CHECK(a * 1 == a);
    CHECK((a * b).eval_at_one() == a.eval_at_one() * b.eval_at_one());
  }
}

TEST_CASE("evaluation at one") {
  CHECK(LaurentPoly(0, {1, 4, 10, 18, 27, 33, 33, 29, 21, 12, 5, 1}).eval_at_one() == 194);
  CHECK(LaurentPoly().eval_at_one() == 0);
}

TEST_CASE("coefficients beyond 64 bits") {
  LaurentPoly p(0, {1, 1});
  LaurentPoly x = 1;
  for (int i = 0; i < 100; ++i) x *= p;
  CHECK(x.coeff(50) == BigInt("100891344545564193334812497256"));
  CHECK(x.eval_at_one() == BigInt("1267650600228229401496703205376"));
}

TEST_CASE("to_string") {
  CHECK(LaurentPoly(0, {1, 4, 10}).to_string() == "1 + 4q + 10q^2");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(LaurentPoly(-1, {-1, 0, 1}).to_string() == "-q^-1 + q");
}

TEST_CASE("hash and ordering agree with equality") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    auto a = random_poly(rng);
    LaurentPoly b(a.min_degree(), a.coeffs());
    CHECK(a.content_hash() == b.content_hash());
    CHECK((a <=> b) == std::strong_ordering::equal);
  }
  CHECK(LaurentPoly(0, {1, 2}).content_hash() != LaurentPoly(1, {1, 2}).content_hash());
  CHECK(LaurentPoly(0, {1, 2}).content_hash() != LaurentPoly(0, {1, -2}).content_hash());
}

TEST_CASE("nonnegative coefficients") {
  CHECK(LaurentPoly(0, {1, 2}).nonnegative_coefficients());
  CHECK_FALSE(LaurentPoly(0, {1, -2}).nonnegative_coefficients());
}
