#pragma once

#include <utility>
#include <vector>

#include "qmarkoff/laurent.hpp"

namespace qmarkoff {

/// Positive solution of x^2 + y^2 + z^2 = 3xyz with the middle entry maximal.
class MarkoffTriple {
 public:
  /// Throws std::invalid_argument if the entries are not positive, violate the
  /// equation, or y is not maximal.
  MarkoffTriple(BigInt x, BigInt y, BigInt z);

  const BigInt& x() const { return x_; }
  const BigInt& y() const { return y_; }
  const BigInt& z() const { return z_; }

  /// (x, 3xy - z, y) and (y, 3yz - x, z).
  std::pair<MarkoffTriple, MarkoffTriple> children() const;

  friend bool operator==(const MarkoffTriple&, const MarkoffTriple&) = default;

 private:
  BigInt x_, y_, z_;
};

bool is_markoff_solution(const BigInt& x, const BigInt& y, const BigInt& z);

inline MarkoffTriple markoff_root() { return MarkoffTriple(1, 1, 1); }

/// Every entry of every triple within `depth` generations of (1,1,1), sorted, deduplicated.
std::vector<BigInt> markoff_numbers(std::size_t depth);

/// All Markoff numbers <= bound. Exhaustive: the middle entry strictly grows
/// below (1,2,1), so the tree is cut once it exceeds the bound.
std::vector<BigInt> markoff_numbers_up_to(const BigInt& bound);

}  // namespace qmarkoff
