#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qmarkoff/laurent.hpp"
#include "qmarkoff/qmatrix.hpp"
#include "qmarkoff/word.hpp"

namespace qmarkoff {

/// Degree of the k-th cyclotomic polynomial, k in 1..6.
int cyclotomic_degree(int k);

/// Element of Z[zeta_k] for k in 1..6, zeta_k = exp(2 pi i / k).
///
/// Coordinates are in the power basis {1, zeta_k, ..., zeta_k^(d-1)} with
/// d = deg Phi_k, fully reduced modulo Phi_k, so equality is coordinate-wise.
/// Any other k throws std::domain_error.
class CycInt {
 public:
  CycInt() : CycInt(1) {}
  explicit CycInt(int k);
  CycInt(int k, std::vector<BigInt> coords);

  /// sum_e c[e] zeta^e, for a coefficient vector of any length.
  static CycInt from_power_coeffs(int k, std::vector<BigInt> by_exponent);
  static CycInt integer(int k, const BigInt& n);
  /// zeta_k^e for any integer e.
  static CycInt zeta_power(int k, long e);

  int k() const { return k_; }
  const std::vector<BigInt>& coords() const { return coords_; }
  bool is_zero() const;

  CycInt operator-() const;
  friend CycInt operator+(const CycInt& x, const CycInt& y);
  friend CycInt operator-(const CycInt& x, const CycInt& y);
  friend CycInt operator*(const CycInt& x, const CycInt& y);
  friend bool operator==(const CycInt&, const CycInt&) = default;
  friend std::strong_ordering operator<=>(const CycInt& x, const CycInt& y);

  std::complex<double> approx() const;
  std::uint64_t content_hash() const;
  /// "-2 - 3z" style, z standing for zeta_k.
  std::string to_string() const;

 private:
  int k_;
  std::vector<BigInt> coords_;
};

/// Image of p under q -> zeta_k (q^-1 -> zeta_k^(k-1)).
CycInt eval_cyclotomic(const LaurentPoly& p, int k);

/// 2x2 matrix over Z[zeta_k], row-major.
struct CycMatrix {
  std::array<CycInt, 4> e;

  static CycMatrix identity(int k);
  const CycInt& m11() const { return e[0]; }
  const CycInt& m12() const { return e[1]; }
  const CycInt& m21() const { return e[2]; }
  const CycInt& m22() const { return e[3]; }

  friend CycMatrix operator*(const CycMatrix& x, const CycMatrix& y);
  friend CycMatrix operator*(const CycInt& s, const CycMatrix& x);
  friend bool operator==(const CycMatrix&, const CycMatrix&) = default;
  std::uint64_t content_hash() const;
};

CycMatrix eval_cyclotomic(const QMatrix& m, int k);

/// Closed form of mu_q(w) at zeta_6 in terms of |w| and |w|_b.
/// Throws std::invalid_argument if count_b > length.
CycMatrix closed_form_mu_zeta6(std::uint64_t length, std::uint64_t count_b);
/// 12-entry of the closed form: zeta_6^(n+b) (n - (n+b) zeta_6).
CycInt entry12_zeta6(std::uint64_t length, std::uint64_t count_b);

/// One of the six half-open cones of C \ {0}. The cone spanned by
/// zeta_6^j and zeta_6^(j+1) contains its ray zeta_6^(j+1) but not zeta_6^j,
/// and is labelled residue = (j - 4) mod 6, which is (|w| + |w|_b) mod 6 for
/// the 12-entry of a nonempty word w.
struct ConeIndex {
  int residue = 0;
  friend bool operator==(const ConeIndex&, const ConeIndex&) = default;
};

/// std::nullopt iff z == 0. Exact: solves z = alpha zeta^j + beta zeta^(j+1)
/// over the integers and accepts alpha >= 0, beta > 0.
std::optional<ConeIndex> cone_of(const CycInt& z);

struct LetterCounts {
  std::uint64_t count_a = 0;
  std::uint64_t count_b = 0;
  friend bool operator==(const LetterCounts&, const LetterCounts&) = default;
  friend auto operator<=>(const LetterCounts&, const LetterCounts&) = default;
};

/// Inverse of entry12_zeta6: recovers (|w|_a, |w|_b) from mu_zeta6(w)_12.
/// std::nullopt when z is not the 12-entry of any word.
std::optional<LetterCounts> recover_counts(const CycInt& z);

struct ClosureResult {
  enum class Status { finite, exceeded_cap };
  Status status = Status::finite;
  std::size_t size = 0;
  bool finite() const { return status == Status::finite; }
};

/// Breadth-first closure of the monoid generated by mu_zeta_k(a), mu_zeta_k(b)
/// (or zeta^-1 mu(a), zeta^-2 mu(b) when scaled), identity included.
ClosureResult monoid_closure(int k, bool scaled, std::size_t cap = 10000);

/// Residue-class correspondence between mu_1(w)_12 mod k and mu_zeta_k(w)_12,
/// over all words of length <= max_len (empty word included).
struct ResidueReport {
  int k = 0;
  std::size_t max_len = 0;
  std::size_t words_checked = 0;
  /// Words whose value falls outside the set predicted by its residue (k = 2, 3, 4).
  std::vector<std::string> violations;
  /// Distinct values of mu_zeta_k(w)_12 grouped by mu_1(w)_12 mod k.
  std::map<int, std::vector<CycInt>> classes;
  std::size_t distinct_values = 0;
  /// True when no value occurs under two residues, i.e. the value determines
  /// the residue (for k = 4: determines 0, 2, or odd).
  bool residue_determined = true;

  bool ok() const { return violations.empty() && residue_determined; }
  friend bool operator==(const ResidueReport&, const ResidueReport&) = default;
};

/// Throws std::domain_error unless k in 2..5.
ResidueReport residue_relation_check(int k, std::size_t max_len, int threads = 0);
/// Reference path: evaluates the polynomial mu_q(w)_12 word by word.
ResidueReport residue_relation_check_serial(int k, std::size_t max_len);

/// One point of the mu_zeta_5 value cloud.
struct Figure2Point {
  int residue = 0;
  CycInt value;
};

std::vector<Figure2Point> figure2_points(std::size_t max_len, int threads = 0);

}  // namespace qmarkoff
