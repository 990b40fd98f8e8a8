#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "qmarkoff/laurent.hpp"
#include "qmarkoff/word.hpp"

namespace qmarkoff {

/// Which 12-entry the search collides on.
enum class MapKind { M, mu };

std::string to_string(MapKind kind);
/// Accepts "M" / "m" and "mu". Throws std::invalid_argument otherwise.
MapKind parse_map_kind(const std::string& s);

/// How a colliding pair is accounted for by the two identity families.
/// For MapKind::mu the families are mu_q(a w b) = mu_q(a wtilde b) and
/// mu_q(a psi_w(v) w b) = mu_q(a psi_w(flip(v)) w b). For MapKind::M they are
/// the a^k b w b a^m / a^k b wbar b a^n family (with its a-prefix/suffix law)
/// and the phi_w family.
enum class PairClass { identity1, identity2, both, unexplained };

std::string to_string(PairClass c);
PairClass parse_pair_class(const std::string& s);

struct PairClassification {
  Word x;
  Word y;
  PairClass kind = PairClass::unexplained;
  /// Parameters that realise the match, e.g. "w=aab" or "w=,v=c"; empty when unexplained.
  std::string witness;
  /// Largest |w| tried for the second family.
  std::size_t w_bound = 0;
  /// For unexplained pairs: x and y are still linked through a chain of
  /// explained pairs inside their group.
  bool chain_explained = false;

  friend bool operator==(const PairClassification&, const PairClassification&) = default;
};

/// Classifies x, y whose 12-entries are already known to agree.
PairClassification classify_collision(MapKind kind, const Word& x, const Word& y);

/// Checked variant for MapKind::mu: throws std::invalid_argument if x == y or
/// mu_q(x)_12 != mu_q(y)_12.
PairClassification classify_pair(const Word& x, const Word& y);
PairClassification classify_pair(MapKind kind, const Word& x, const Word& y);

struct CollisionGroup {
  LaurentPoly value;
  /// Shortlex sorted, at least two words.
  std::vector<Word> words;

  friend bool operator==(const CollisionGroup&, const CollisionGroup&) = default;
};

struct CollisionSummary {
  std::size_t words_examined = 0;
  std::size_t groups = 0;
  std::size_t pairs = 0;
  std::size_t identity1 = 0;
  std::size_t identity2 = 0;
  std::size_t both = 0;
  std::size_t unexplained = 0;
  /// Unexplained pairs not linked by any chain of explained pairs.
  std::size_t unexplained_after_chaining = 0;

  friend bool operator==(const CollisionSummary&, const CollisionSummary&) = default;
};

struct CollisionReport {
  MapKind kind = MapKind::mu;
  std::size_t max_len = 0;
  /// Sorted by their first word in shortlex order.
  std::vector<CollisionGroup> groups;
  /// Every unordered pair inside every group, in group order.
  std::vector<PairClassification> pairs;
  CollisionSummary summary;

  /// True when some pair matches neither family directly (CLI exit code 3).
  /// summary.unexplained_after_chaining tells whether such pairs are still
  /// linked through explained ones.
  bool has_unexplained() const { return summary.unexplained > 0; }
  friend bool operator==(const CollisionReport&, const CollisionReport&) = default;
};

/// Thrown when a search would exceed the configured word-length bound.
class ResourceBoundError : public std::runtime_error {
 public:
  ResourceBoundError(std::size_t max_len, std::size_t bound);
  std::size_t max_len() const { return max_len_; }
  std::size_t bound() const { return bound_; }
  std::uint64_t words_required() const;
  /// Rough peak memory of the search in bytes.
  std::uint64_t bytes_estimate() const;

 private:
  std::size_t max_len_;
  std::size_t bound_;
};

inline constexpr std::size_t kDefaultSafetyBound = 16;

struct SearchOptions {
  int threads = 0;  // 0: QMARKOFF_THREADS or the OpenMP default
  std::size_t safety_bound = kDefaultSafetyBound;
};

/// All maximal groups of nonempty words of length <= max_len sharing their
/// 12-entry. Words are split into prefix classes processed in parallel, each
/// worker keyed by content hash; groups are confirmed by full polynomial
/// equality and the merge is ordered, so the result does not depend on the
/// thread count.
CollisionReport collide(MapKind kind, std::size_t max_len, const SearchOptions& options = {});

/// Single-threaded reference: recomputes every 12-entry from scratch and
/// groups with an ordered map. Same result as collide().
CollisionReport collide_serial(MapKind kind, std::size_t max_len, std::size_t safety_bound = kDefaultSafetyBound);

struct InjectivityVerdict {
  std::size_t max_len = 0;
  std::size_t words = 0;
  bool injective = true;          // w -> mu_q(w)_12
  bool zeta6_injective = true;    // w -> mu_zeta6(w)_12
  bool counts_distinct = true;    // w -> (|w|_a, |w|_b)
  std::optional<std::pair<Word, Word>> counterexample;
};

/// Injectivity of w -> mu_q(w)_12 over Christoffel words of length <= max_len.
InjectivityVerdict christoffel_injectivity(std::size_t max_len);

}  // namespace qmarkoff
