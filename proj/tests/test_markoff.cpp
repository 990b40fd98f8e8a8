#include <algorithm>

#include "doctest.h"
#include "qmarkoff/markoff.hpp"
#include "qmarkoff/qmatrix.hpp"

using namespace qmarkoff;

namespace {

bool contains(const std::pair<MarkoffTriple, MarkoffTriple>& c, long n) {
  for (const auto& t : {c.first, c.second}) {
    if (t.x() == n || t.y() == n || t.z() == n) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("triples") {
  CHECK(is_markoff_solution(1, 5, 2));
  CHECK_FALSE(is_markoff_solution(1, 5, 3));
  CHECK_THROWS_AS(MarkoffTriple(1, 5, 3), std::invalid_argument);
  CHECK_THROWS_AS(MarkoffTriple(5, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(MarkoffTriple(0, 0, 0), std::invalid_argument);
  CHECK(contains(MarkoffTriple(1, 2, 1).children(), 5));
  const auto c = MarkoffTriple(1, 5, 2).children();
  CHECK(contains(c, 13));
  CHECK(contains(c, 29));
  CHECK(c.first == MarkoffTriple(1, 13, 5));
  CHECK(c.second == MarkoffTriple(5, 29, 2));
}

TEST_CASE("markoff numbers") {
  CHECK(markoff_numbers(0) == std::vector<BigInt>{1});
  const auto n = markoff_numbers(8);
  const std::vector<BigInt> prefix{1, 2, 5, 13, 29, 34, 89, 169, 194};
  REQUIRE(n.size() >= prefix.size());
  CHECK(std::equal(prefix.begin(), prefix.end(), n.begin()));
  const auto upto = markoff_numbers_up_to(1000);
  const std::vector<BigInt> expected{1, 2, 5, 13, 29, 34, 89, 169, 194, 233, 433, 610, 985};
  CHECK(upto == expected);
  CHECK(markoff_numbers_up_to(0).empty());
}

TEST_CASE("christoffel words give markoff numbers") {
  for (const auto& w : christoffel_words(15)) {
    const BigInt m = mu_q12(w).eval_at_one();
    const auto numbers = markoff_numbers_up_to(m);
    CHECK(std::binary_search(numbers.begin(), numbers.end(), m));
    CHECK(mu_q12(w).nonnegative_coefficients());
  }
}
