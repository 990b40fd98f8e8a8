#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "qmarkoff/laurent.hpp"
#include "qmarkoff/word.hpp"

namespace qmarkoff {

/// A word morphism given by its letter images.
class Morphism {
 public:
  enum class Kind { sigma, tau, phi, psi, eta, eta_prime };

  /// a -> ba, b -> bbaa; mu_q = M_q o sigma.
  static Morphism sigma();
  /// a -> ac, b -> bd, c -> bc, d -> ad.
  static Morphism tau();
  /// a -> w abba wbar abba, b -> w baab wbar baab, c -> w abba wbar baab, d -> w baab wbar abba.
  static Morphism phi(const Word& w);
  /// a -> w ab wtilde ab, b -> w ba wtilde ba, c -> w ab wtilde ba, d -> w ba wtilde ab.
  static Morphism psi(const Word& w);
  /// a -> w abba, b -> w baab, c -> wbar abba, d -> wbar baab.
  static Morphism eta(const Word& w);
  /// a -> abba w, b -> baab w, c -> abba wbar, d -> baab wbar.
  static Morphism eta_prime(const Word& w);

  Kind kind() const { return kind_; }
  std::string name() const;
  const Word& parameter() const { return parameter_; }
  Alphabet source() const { return source_; }
  Alphabet target() const { return target_; }
  const Word& image(char letter) const;

  /// Throws std::invalid_argument if v has a letter outside the source alphabet.
  Word operator()(const Word& v) const;

 private:
  Morphism(Kind kind, Word parameter, Alphabet source, Alphabet target, std::array<Word, 4> images);

  Kind kind_;
  Word parameter_;
  Alphabet source_;
  Alphabet target_;
  std::array<Word, 4> images_;
};

/// Both sides of one instance of an identity.
struct IdentityCheck {
  Word lhs_word;
  Word rhs_word;
  LaurentPoly lhs;
  LaurentPoly rhs;
  bool equal() const { return lhs == rhs; }
};

/// M_q(a^k b w b a^m)_12 against M_q(a^k b wbar b a^n)_12.
IdentityCheck verify_identity1_M(const Word& w, std::size_t k, std::size_t m, std::size_t n);
/// mu_q(a w b)_12 against mu_q(a wtilde b)_12.
IdentityCheck verify_identity1_mu(const Word& w);
/// M_q(a^k b phi_w(v) w b a^m)_12 against M_q(a^k b phi_w(flip(v)) w b a^n)_12.
/// With bar (c <-> d) in place of flip the two sides differ as soon as v
/// contains c or d, e.g. w = "", v = "c".
IdentityCheck verify_identity2_M(const Word& w, const Word& v, std::size_t k, std::size_t m, std::size_t n);
/// mu_q(a psi_w(v) w b)_12 against mu_q(a psi_w(flip(v)) w b)_12.
IdentityCheck verify_identity2_mu(const Word& w, const Word& v);

/// M_q(b eta_w(v) w b)_12 - M_q(b w eta'_w(vbar) b)_12.
LaurentPoly delta(const Word& w, const Word& v);

enum class IdentityFamily { identity1_M, identity1_mu, identity2_M, identity2_mu };

std::string to_string(IdentityFamily f);
/// "1M", "1mu", "2M", "2mu". Throws std::invalid_argument otherwise.
IdentityFamily parse_identity_family(const std::string& s);

/// One randomly drawn instance of a family and its outcome.
struct IdentityCase {
  IdentityFamily family;
  std::uint64_t seed = 0;
  Word w;
  Word v;  // extended alphabet; empty for the first family
  std::size_t k = 0, m = 0, n = 0;
  IdentityCheck check;
};

/// Parameter bounds for the random suites.
struct SuiteBounds {
  std::size_t max_w_first = 8;   // |w| for the first family
  std::size_t max_kmn_first = 3;
  std::size_t max_w_second = 4;  // |w| for the second family
  std::size_t max_v_second = 3;
  std::size_t max_kmn_second = 2;
};

/// Draws case i from its own generator seeded with mix(seed, i), so a case is
/// reproducible on its own and the suite is independent of the thread count.
IdentityCase draw_identity_case(IdentityFamily family, std::uint64_t seed, std::size_t index,
                                const SuiteBounds& bounds = {});
std::vector<IdentityCase> run_identity_suite(IdentityFamily family, std::size_t cases, std::uint64_t seed,
                                             const SuiteBounds& bounds = {}, int threads = 0);

/// All words of ({a,b}{c,d})^pairs, shortlex order.
std::vector<Word> paired_words(std::size_t pairs);
/// All words over the given alphabet of exactly the given length, shortlex order.
std::vector<Word> all_words(std::size_t length, Alphabet alphabet = Alphabet::binary);

}  // namespace qmarkoff
