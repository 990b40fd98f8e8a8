#include "doctest.h"
#include "qmarkoff/identities.hpp"
#include "qmarkoff/qmatrix.hpp"

using namespace qmarkoff;

namespace {

const LaurentPoly q = LaurentPoly::q();

std::vector<Word> words_up_to(std::size_t n) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= n; ++len) {
    for (auto& w : all_words(len)) out.push_back(w);
  }
  return out;
}

}  // namespace

TEST_CASE("generators") {
  CHECK(R_q() * L_q() == mu_q_a());
  CHECK(mu_q_a() == QMatrix{q + q * q, 1, q, 1});
  const QMatrix b = mu_q_b();
  CHECK(b.m11 == LaurentPoly(1, {1, 2, 1, 1}));
  CHECK(b.m12 == LaurentPoly(0, {1, 1}));
  CHECK(b.m21 == LaurentPoly(1, {1, 1}));
  CHECK(b.m22 == LaurentPoly(1));
  CHECK(QMatrix::identity() * b == b);
  CHECK(M_q(Word()) == QMatrix::identity());
}

TEST_CASE("worked values") {
  const QMatrix m = mu_q(Word("aabab"));
  CHECK(m.m12 == LaurentPoly(0, {1, 4, 10, 18, 27, 33, 33, 29, 21, 12, 5, 1}));
  CHECK(m.m11.eval_at_one() == 463);
  CHECK(m.m12.eval_at_one() == 194);
  CHECK(m.m21.eval_at_one() == 284);
  CHECK(m.m22.eval_at_one() == 119);
  CHECK(mu_q12(Word("aaabb")) == LaurentPoly(0, {1, 4, 10, 19, 27, 33, 34, 29, 21, 12, 5, 1}));
  CHECK(mu_q12(Word("abaab")) == mu_q12(Word("aaabb")));
  CHECK(M_q12(Word("bab")) == LaurentPoly(0, {1, 1, 1}));
  CHECK(M_q12(Word("bbaaaaabb")) == LaurentPoly(0, {1, 2, 3, 4, 4, 4, 3, 2, 1}));
  CHECK(M_q12(Word("baaabaaab")) == M_q12(Word("bbaaaaabb")));
  // Oracle: integer products of (2 1 / 1 1) and (5 2 / 2 1).
  CHECK(mu_q12(Word("abb")).eval_at_one() == 29);
  CHECK(mu_q12(Word("aab")).eval_at_one() == 13);
}

TEST_CASE("M_q rejects extended letters") {
  CHECK_THROWS_AS(M_q(Word("ac", Alphabet::extended)), std::invalid_argument);
}

TEST_CASE("homomorphism and the sigma path") {
  const auto ws = words_up_to(5);
  for (const auto& u : ws) {
    CHECK(mu_q(u) == mu_q_via_sigma(u));
    for (const auto& v : words_up_to(2)) {
      CHECK(mu_q(u + v) == mu_q(u) * mu_q(v));
      CHECK(M_q(u + v) == M_q(u) * M_q(v));
    }
  }
}

TEST_CASE("incremental right multiplication matches products") {
  for (const auto& w : words_up_to(7)) {
    QMatrix m = QMatrix::identity();
    for (char c : w) m.right_multiply_letter(c);
    CHECK(m == M_q(w));
  }
}

TEST_CASE("determinant") {
  for (const auto& w : words_up_to(6)) {
    CHECK(M_q(w).det() == LaurentPoly::monomial(1, static_cast<int>(w.size())));
    CHECK(mu_q(w).det() == LaurentPoly::monomial(1, static_cast<int>(2 * w.count_a() + 4 * w.count_b())));
  }
}

TEST_CASE("conjugation by Q_q transposes and bars") {
  CHECK(Q_q() * Q_q_inverse() == QMatrix::identity());
  CHECK(Q_q() * L_q() * Q_q_inverse() == R_q().transpose());
  CHECK(Q_q() * R_q() * Q_q_inverse() == L_q().transpose());
  for (const auto& w : words_up_to(6)) CHECK(Q_q() * M_q(w) * Q_q_inverse() == M_q(bar(w)).transpose());
}

TEST_CASE("abba against baab") {
  CHECK(M_q(Word("abba")) == M_q(Word("baab")) + (q * q * q + 1) * (S_matrix() * Q_q()));
}

TEST_CASE("outer a's scale the 12-entry") {
  for (const auto& w : words_up_to(5)) {
    for (std::size_t k = 0; k <= 3; ++k) {
      for (std::size_t m = 0; m <= 3; ++m) {
        CHECK(M_q12(repeat('a', k) + w + repeat('a', m)) == M_q12(w).shifted(static_cast<int>(k)));
      }
    }
  }
}

TEST_CASE("characteristic polynomial of q^-1 mu_q(a)") {
  const QMatrix a = scaled_mu_q_a();
  CHECK(a.trace() == LaurentPoly(-1, {1, 1, 1}));
  CHECK(a.det() == LaurentPoly(1));
  const CharPoly cp = char_poly_scaled_a();
  CHECK(cp.leading == LaurentPoly(1));
  CHECK(cp.linear == -LaurentPoly(-1, {1, 1, 1}));
  CHECK(cp.constant == LaurentPoly(1));
  const QMatrix r = cayley_hamilton_residual();
  CHECK(r == QMatrix{0, 0, 0, 0});
}
