#include "qmarkoff/word.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <stdexcept>

namespace qmarkoff {

namespace {

bool in_alphabet(char c, Alphabet alphabet) {
  if (c == 'a' || c == 'b') return true;
  return alphabet == Alphabet::extended && (c == 'c' || c == 'd');
}

char swap_letter(char c) {
  switch (c) {
    case 'a': return 'b';
    case 'b': return 'a';
    case 'c': return 'd';
    default: return 'c';
  }
}

}  // namespace

Word::Word(std::string_view letters, Alphabet alphabet) : letters_(letters), alphabet_(alphabet) {
  for (char c : letters_) {
    if (!in_alphabet(c, alphabet_)) {
      throw std::invalid_argument("invalid letter '" + std::string(1, c) + "' in word \"" +
                                  letters_ + "\"");
    }
  }
}

Word Word::parse(std::string_view letters, Alphabet alphabet) { return Word(letters, alphabet); }

Word Word::from_bits(std::uint64_t bits, int length) {
  std::string s(static_cast<std::size_t>(length), 'a');
  for (int i = 0; i < length; ++i) {
    if ((bits >> (length - 1 - i)) & 1U) s[static_cast<std::size_t>(i)] = 'b';
  }
  Word w;
  w.letters_ = std::move(s);
  return w;
}

std::size_t Word::count(char letter) const {
  return static_cast<std::size_t>(std::count(letters_.begin(), letters_.end(), letter));
}

Word Word::as_extended() const {
  Word w = *this;
  w.alphabet_ = Alphabet::extended;
  return w;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  Word w;
  w.letters_ = letters_.substr(pos, len);
  w.alphabet_ = alphabet_;
  return w;
}

Word operator+(const Word& u, const Word& v) {
  Word w;
  w.letters_ = u.letters_ + v.letters_;
  w.alphabet_ = (u.alphabet_ == Alphabet::extended || v.alphabet_ == Alphabet::extended)
                    ? Alphabet::extended
                    : Alphabet::binary;
  return w;
}

std::strong_ordering shortlex(const Word& u, const Word& v) {
  if (auto c = u.size() <=> v.size(); c != 0) return c;
  return u.str() <=> v.str();
}

Word repeat(char letter, std::size_t times) {
  Alphabet alpha = (letter == 'c' || letter == 'd') ? Alphabet::extended : Alphabet::binary;
  return Word(std::string(times, letter), alpha);
}

Word mirror(const Word& w) {
  std::string s(w.str().rbegin(), w.str().rend());
  return Word(s, w.alphabet());
}

Word bar(const Word& w) {
  std::string s(w.str().rbegin(), w.str().rend());
  for (char& c : s) c = swap_letter(c);
  return Word(s, w.alphabet());
}

Word flip(const Word& w) {
  std::string s(w.str().rbegin(), w.str().rend());
  for (char& c : s) {
    if (c == 'a' || c == 'b') c = swap_letter(c);
  }
  return Word(s, w.alphabet());
}

bool is_palindrome(const Word& w) { return std::equal(w.begin(), w.end(), w.str().rbegin()); }

std::vector<Word> christoffel_words(std::size_t max_len) {
  std::vector<Word> out;
  if (max_len >= 1) {
    out.emplace_back("a");
    out.emplace_back("b");
  }
  // Breadth-first over the Christoffel tree; a child's word is strictly
  // longer than its parent's, so each branch is cut independently.
  std::deque<ChristoffelNode> queue{christoffel_root()};
  while (!queue.empty()) {
    ChristoffelNode node = std::move(queue.front());
    queue.pop_front();
    Word w = node.word();
    if (w.size() > max_len) continue;
    out.push_back(w);
    queue.push_back(node.left_child());
    queue.push_back(node.right_child());
  }
  std::sort(out.begin(), out.end(), ShortlexLess{});
  return out;
}

Fraction stern_brocot_fraction(const Word& w) {
  if (w.empty()) throw std::invalid_argument("stern_brocot_fraction: empty word");
  std::uint64_t nb = w.count_b();
  std::uint64_t na = w.count_a();
  std::uint64_t g = std::gcd(nb, na);
  return {nb / g, na / g};
}

}  // namespace qmarkoff
