#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace qmarkoff {

using BigInt = mpz_class;

/// Element of Z[q, q^-1] with arbitrary-precision coefficients.
///
/// Stored densely: coeffs()[i] is the coefficient of q^(min_degree()+i).
/// Always canonical: first and last coefficients are nonzero, and the zero
/// polynomial has no coefficients and min_degree 0. Equality, ordering and
/// hashing therefore work on the representation directly.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(const BigInt& constant);
  LaurentPoly(int min_degree, std::vector<BigInt> coeffs);
  LaurentPoly(int min_degree, std::initializer_list<long> coeffs);

  static LaurentPoly monomial(const BigInt& coeff, int degree);
  /// The indeterminate q.
  static LaurentPoly q() { return monomial(1, 1); }

  bool is_zero() const { return coeffs_.empty(); }
  int min_degree() const { return min_degree_; }
  /// Highest exponent; meaningless for zero.
  int max_degree() const { return min_degree_ + static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<BigInt>& coeffs() const { return coeffs_; }
  BigInt coeff(int degree) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& r);
  LaurentPoly& operator-=(const LaurentPoly& r);
  LaurentPoly& operator*=(const LaurentPoly& r);
  friend LaurentPoly operator+(LaurentPoly p, const LaurentPoly& r) { return p += r; }
  friend LaurentPoly operator-(LaurentPoly p, const LaurentPoly& r) { return p -= r; }
  friend LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r);

  /// Multiplication by q^k.
  LaurentPoly shifted(int k) const;

  /// Value at q = 1, i.e. the coefficient sum.
  BigInt eval_at_one() const;

  bool nonnegative_coefficients() const;

  /// FNV-1a over min_degree and the signed big-endian magnitude bytes of
  /// each coefficient. Stable across runs and platforms.
  std::uint64_t content_hash() const;

  /// "1 + 4q + 10q^2 - q^-1" style, ascending exponents.
  std::string to_string() const;

  friend bool operator==(const LaurentPoly& p, const LaurentPoly& r);
  friend std::strong_ordering operator<=>(const LaurentPoly& p, const LaurentPoly& r);

 private:
  void canonicalize();

  int min_degree_ = 0;
  std::vector<BigInt> coeffs_;
};

}  // namespace qmarkoff
