#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qmarkoff {

enum class Alphabet : std::uint8_t { binary, extended };

/// A finite word over {a,b} or {a,b,c,d}. Immutable once built.
///
/// Letters are stored as the ASCII characters 'a'..'d'. The alphabet tag is
/// part of the value: parsing a word containing c or d requires
/// Alphabet::extended, and morphisms check the tag of their argument.
class Word {
 public:
  Word() = default;
  explicit Word(std::string_view letters, Alphabet alphabet = Alphabet::binary);

  /// Throws std::invalid_argument on letters outside the alphabet.
  static Word parse(std::string_view letters, Alphabet alphabet = Alphabet::binary);

  /// Binary word of the given length whose i-th letter is b iff bit
  /// (length-1-i) of `bits` is set, so numeric order equals lexicographic order.
  static Word from_bits(std::uint64_t bits, int length);

  const std::string& str() const { return letters_; }
  Alphabet alphabet() const { return alphabet_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  char operator[](std::size_t i) const { return letters_[i]; }
  auto begin() const { return letters_.begin(); }
  auto end() const { return letters_.end(); }

  std::size_t count(char letter) const;
  std::size_t count_a() const { return count('a'); }
  std::size_t count_b() const { return count('b'); }

  /// Same letters, widened to the extended alphabet.
  Word as_extended() const;

  Word substr(std::size_t pos, std::size_t len = std::string::npos) const;

  friend Word operator+(const Word& u, const Word& v);
  friend bool operator==(const Word& u, const Word& v) { return u.letters_ == v.letters_; }

 private:
  std::string letters_;
  Alphabet alphabet_ = Alphabet::binary;
};

/// Shortlex order: shorter first, then lexicographic with a < b < c < d.
std::strong_ordering shortlex(const Word& u, const Word& v);
struct ShortlexLess {
  bool operator()(const Word& u, const Word& v) const { return shortlex(u, v) < 0; }
};

Word repeat(char letter, std::size_t times);

/// Reversal.
Word mirror(const Word& w);
/// Reversal composed with a<->b and c<->d.
Word bar(const Word& w);
/// Reversal composed with a<->b, fixing c and d. Agrees with bar on binary words.
Word flip(const Word& w);
bool is_palindrome(const Word& w);

/// Christoffel words of length <= max_len (single letters included), shortlex sorted.
std::vector<Word> christoffel_words(std::size_t max_len);

/// One node (u, v) of the Christoffel tree; its word is u v.
struct ChristoffelNode {
  Word left_factor;
  Word right_factor;

  Word word() const { return left_factor + right_factor; }
  ChristoffelNode left_child() const { return {left_factor, left_factor + right_factor}; }
  ChristoffelNode right_child() const { return {left_factor + right_factor, right_factor}; }
};

inline ChristoffelNode christoffel_root() { return {Word("a"), Word("b")}; }

/// |w|_b / |w|_a in lowest terms. The word "b" gives the formal fraction 1/0.
struct Fraction {
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 1;
  friend bool operator==(const Fraction&, const Fraction&) = default;
  friend auto operator<=>(const Fraction&, const Fraction&) = default;
};

/// Throws std::invalid_argument for the empty word.
Fraction stern_brocot_fraction(const Word& w);

}  // namespace qmarkoff
