#include <algorithm>
#include <numeric>
#include <set>

#include "doctest.h"
#include "qmarkoff/word.hpp"

using namespace qmarkoff;

TEST_CASE("word construction validates letters") {
  CHECK(Word("abba").size() == 4);
  CHECK_THROWS_AS(Word("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Word::parse("x"), std::invalid_argument);
  CHECK(Word("acd", Alphabet::extended).str() == "acd");
  CHECK_THROWS_AS(Word("ae", Alphabet::extended), std::invalid_argument);
  CHECK(Word().empty());
}

TEST_CASE("from_bits puts the high bit first") {
  CHECK(Word::from_bits(0b011, 3).str() == "abb");
  CHECK(Word::from_bits(0, 0).str().empty());
  CHECK(Word::from_bits(0b10, 2).str() == "ba");
}

TEST_CASE("mirror and bar") {
  CHECK(mirror(Word("aab")).str() == "baa");
  CHECK(mirror(Word()).empty());
  CHECK(mirror(Word("abba")).str() == "abba");
  CHECK(bar(Word("aab")).str() == "abb");
  CHECK(bar(Word()).empty());
  CHECK(bar(Word("acd", Alphabet::extended)).str() == "cdb");
  CHECK(flip(Word("acd", Alphabet::extended)).str() == "dcb");
  CHECK(flip(Word("aabab")) == bar(Word("aabab")));
}

TEST_CASE("bar and mirror are involutions") {
  for (std::uint64_t bits = 0; bits < 64; ++bits) {
    Word w = Word::from_bits(bits, 6);
    CHECK(bar(bar(w)) == w);
    CHECK(mirror(mirror(w)) == w);
  }
}

TEST_CASE("shortlex order") {
  CHECK(shortlex(Word("b"), Word("aa")) < 0);
  CHECK(shortlex(Word("ab"), Word("ba")) < 0);
  CHECK(shortlex(Word("ab"), Word("ab")) == 0);
}

TEST_CASE("christoffel words") {
  auto str = [](const std::vector<Word>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
  };
  CHECK(str(christoffel_words(2)) == std::vector<std::string>{"a", "b", "ab"});
  CHECK(str(christoffel_words(4)) == std::vector<std::string>{"a", "b", "ab", "aab", "abb", "aaab", "abbb"});
  const auto five = str(christoffel_words(5));
  CHECK(std::find(five.begin(), five.end(), "aabab") != five.end());
  CHECK(std::find(five.begin(), five.end(), "ababb") != five.end());
}

TEST_CASE("christoffel inner factors are palindromes") {
  for (const auto& w : christoffel_words(30)) {
    if (w.size() < 2) continue;
    CHECK(is_palindrome(w.substr(1, w.size() - 2)));
  }
}

TEST_CASE("one christoffel word per reduced fraction") {
  std::set<Fraction> seen;
  const auto words = christoffel_words(25);
  for (const auto& w : words) CHECK(seen.insert(stern_brocot_fraction(w)).second);
  // Words of length n correspond to fractions p/q with p + q = n, gcd 1.
  std::size_t expected = 2;  // a, b
  for (std::uint64_t n = 2; n <= 25; ++n) {
    for (std::uint64_t p = 1; p < n; ++p) expected += std::gcd(p, n - p) == 1;
  }
  CHECK(words.size() == expected);
}

TEST_CASE("stern-brocot fractions") {
  CHECK(stern_brocot_fraction(Word("aabab")) == Fraction{2, 3});
  CHECK(stern_brocot_fraction(Word("a")) == Fraction{0, 1});
  CHECK(stern_brocot_fraction(Word("ab")) == Fraction{1, 1});
  CHECK(stern_brocot_fraction(Word("b")) == Fraction{1, 0});
  CHECK_THROWS_AS(stern_brocot_fraction(Word()), std::invalid_argument);
}

TEST_CASE("christoffel tree") {
  ChristoffelNode root = christoffel_root();
  CHECK(root.word().str() == "ab");
  CHECK(root.left_child().word().str() == "aab");
  CHECK(root.right_child().word().str() == "abb");
  CHECK(root.left_child().right_child().word().str() == "aabab");
}

TEST_CASE("palindromes") {
  CHECK(is_palindrome(Word("aba")));
  CHECK_FALSE(is_palindrome(Word("ab")));
  CHECK(is_palindrome(Word()));
}
