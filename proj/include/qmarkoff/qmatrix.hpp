#pragma once

#include "qmarkoff/laurent.hpp"
#include "qmarkoff/word.hpp"

namespace qmarkoff {

/// 2x2 matrix over Z[q, q^-1].
struct QMatrix {
  LaurentPoly m11, m12, m21, m22;

  static QMatrix identity() { return {1, 0, 0, 1}; }

  QMatrix transpose() const { return {m11, m21, m12, m22}; }
  LaurentPoly det() const { return m11 * m22 - m12 * m21; }
  LaurentPoly trace() const { return m11 + m22; }

  /// In-place right multiplication by M_q(letter) for letter a (L_q) or b (R_q);
  /// shift-and-add only.
  void right_multiply_letter(char letter);

  friend QMatrix operator*(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator+(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator-(const QMatrix& x, const QMatrix& y);
  friend QMatrix operator*(const LaurentPoly& s, const QMatrix& x);
  friend bool operator==(const QMatrix&, const QMatrix&) = default;
};

/// L_q = (q 0 / q 1).
QMatrix L_q();
/// R_q = (q 1 / 0 1).
QMatrix R_q();
/// Q_q = diag(q, 1).
QMatrix Q_q();
/// diag(q^-1, 1).
QMatrix Q_q_inverse();
/// S = (0 -1 / 1 0).
QMatrix S_matrix();

/// Monoid morphism a -> L_q, b -> R_q. Throws std::invalid_argument on c or d.
QMatrix M_q(const Word& w);

/// mu_q(a) = R_q L_q.
QMatrix mu_q_a();
/// mu_q(b) = R_q R_q L_q L_q.
QMatrix mu_q_b();

/// Product of mu_q(a) / mu_q(b) over the letters of w.
QMatrix mu_q(const Word& w);
/// mu_q(w) computed as M_q(sigma(w)), sigma: a -> ba, b -> bbaa.
QMatrix mu_q_via_sigma(const Word& w);

/// The 12-entries alone.
inline LaurentPoly M_q12(const Word& w) { return M_q(w).m12; }
inline LaurentPoly mu_q12(const Word& w) { return mu_q(w).m12; }

/// x^2 + linear x + constant, the characteristic polynomial of q^-1 mu_q(a).
struct CharPoly {
  LaurentPoly leading;
  LaurentPoly linear;
  LaurentPoly constant;
};

/// q^-1 mu_q(a).
QMatrix scaled_mu_q_a();
/// Computed from trace and determinant of q^-1 mu_q(a).
CharPoly char_poly_scaled_a();
/// A^2 + linear*A + constant*I for A = q^-1 mu_q(a); the zero matrix when Cayley-Hamilton holds.
QMatrix cayley_hamilton_residual();

}  // namespace qmarkoff
