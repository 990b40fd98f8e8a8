#include "qmarkoff/qmatrix.hpp"

#include <cassert>
#include <stdexcept>

namespace qmarkoff {

namespace {

void require_binary_letter(char letter) {
  if (letter != 'a' && letter != 'b') {
    throw std::invalid_argument(std::string("expected a binary word, found letter '") + letter + "'");
  }
}

}  // namespace

void QMatrix::right_multiply_letter(char letter) {
  require_binary_letter(letter);
  if (letter == 'a') {
    // (x y / z t) (q 0 / q 1) = (q(x+y) y / q(z+t) t)
    m11 = (m11 + m12).shifted(1);
    m21 = (m21 + m22).shifted(1);
  } else {
    // (x y / z t) (q 1 / 0 1) = (qx x+y / qz z+t)
    m12 += m11;
    m11 = m11.shifted(1);
    m22 += m21;
    m21 = m21.shifted(1);
  }
}

QMatrix operator*(const QMatrix& x, const QMatrix& y) {
  return {x.m11 * y.m11 + x.m12 * y.m21, x.m11 * y.m12 + x.m12 * y.m22,
          x.m21 * y.m11 + x.m22 * y.m21, x.m21 * y.m12 + x.m22 * y.m22};
}

QMatrix operator+(const QMatrix& x, const QMatrix& y) {
  return {x.m11 + y.m11, x.m12 + y.m12, x.m21 + y.m21, x.m22 + y.m22};
}

QMatrix operator-(const QMatrix& x, const QMatrix& y) {
  return {x.m11 - y.m11, x.m12 - y.m12, x.m21 - y.m21, x.m22 - y.m22};
}

QMatrix operator*(const LaurentPoly& s, const QMatrix& x) {
  return {s * x.m11, s * x.m12, s * x.m21, s * x.m22};
}

QMatrix L_q() { return {LaurentPoly::q(), 0, LaurentPoly::q(), 1}; }
QMatrix R_q() { return {LaurentPoly::q(), 1, 0, 1}; }
QMatrix Q_q() { return {LaurentPoly::q(), 0, 0, 1}; }
QMatrix Q_q_inverse() { return {LaurentPoly::monomial(1, -1), 0, 0, 1}; }
QMatrix S_matrix() { return {0, -1, 1, 0}; }

QMatrix M_q(const Word& w) {
  QMatrix m = QMatrix::identity();
  for (char c : w) m.right_multiply_letter(c);
  return m;
}

QMatrix mu_q_a() { return R_q() * L_q(); }
QMatrix mu_q_b() { return R_q() * R_q() * L_q() * L_q(); }

QMatrix mu_q(const Word& w) {
  static const QMatrix a = mu_q_a();
  static const QMatrix b = mu_q_b();
  QMatrix m = QMatrix::identity();
  for (char c : w) {
    require_binary_letter(c);
    m = m * (c == 'a' ? a : b);
  }
#ifdef QMARKOFF_CHECK_MU_PATHS
  assert(m == mu_q_via_sigma(w));
#endif
  return m;
}

QMatrix mu_q_via_sigma(const Word& w) {
  QMatrix m = QMatrix::identity();
  for (char c : w) {
    require_binary_letter(c);
    for (char d : std::string_view(c == 'a' ? "ba" : "bbaa")) m.right_multiply_letter(d);
  }
  return m;
}

QMatrix scaled_mu_q_a() { return LaurentPoly::monomial(1, -1) * mu_q_a(); }

CharPoly char_poly_scaled_a() {
  QMatrix a = scaled_mu_q_a();
  return {1, -a.trace(), a.det()};
}

QMatrix cayley_hamilton_residual() {
  QMatrix a = scaled_mu_q_a();
  CharPoly cp = char_poly_scaled_a();
  return a * a + cp.linear * a + cp.constant * QMatrix::identity();
}

}  // namespace qmarkoff
