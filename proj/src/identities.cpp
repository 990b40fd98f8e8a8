#include "qmarkoff/identities.hpp"

#include <random>
#include <stdexcept>

#include "qmarkoff/parallel.hpp"

#include "qmarkoff/qmatrix.hpp"

namespace qmarkoff {

namespace {

Word lit(const char* s) { return Word(s); }

std::size_t letter_index(char c) { return static_cast<std::size_t>(c - 'a'); }

Word binary_of(const Word& w) {
  for (char c : w) {
    if (c != 'a' && c != 'b') throw std::invalid_argument("morphism parameter must be a binary word");
  }
  return Word(w.str());
}

}  // namespace

Morphism::Morphism(Kind kind, Word parameter, Alphabet source, Alphabet target, std::array<Word, 4> images)
    : kind_(kind), parameter_(std::move(parameter)), source_(source), target_(target), images_(std::move(images)) {}

Morphism Morphism::sigma() {
  return Morphism(Kind::sigma, Word(), Alphabet::binary, Alphabet::binary, {lit("ba"), lit("bbaa"), Word(), Word()});
}

Morphism Morphism::tau() {
  auto e = [](const char* s) { return Word(s, Alphabet::extended); };
  return Morphism(Kind::tau, Word(), Alphabet::extended, Alphabet::extended,
                  {e("ac"), e("bd"), e("bc"), e("ad")});
}

Morphism Morphism::phi(const Word& w0) {
  Word w = binary_of(w0);
  Word wb = bar(w);
  Word abba = lit("abba");
  Word baab = lit("baab");
  return Morphism(Kind::phi, w, Alphabet::extended, Alphabet::binary,
                  {w + abba + wb + abba, w + baab + wb + baab, w + abba + wb + baab, w + baab + wb + abba});
}

Morphism Morphism::psi(const Word& w0) {
  Word w = binary_of(w0);
  Word wt = mirror(w);
  Word ab = lit("ab");
  Word ba = lit("ba");
  return Morphism(Kind::psi, w, Alphabet::extended, Alphabet::binary,
                  {w + ab + wt + ab, w + ba + wt + ba, w + ab + wt + ba, w + ba + wt + ab});
}

Morphism Morphism::eta(const Word& w0) {
  Word w = binary_of(w0);
  Word wb = bar(w);
  return Morphism(Kind::eta, w, Alphabet::extended, Alphabet::binary,
                  {w + lit("abba"), w + lit("baab"), wb + lit("abba"), wb + lit("baab")});
}

Morphism Morphism::eta_prime(const Word& w0) {
  Word w = binary_of(w0);
  Word wb = bar(w);
  return Morphism(Kind::eta_prime, w, Alphabet::extended, Alphabet::binary,
                  {lit("abba") + w, lit("baab") + w, lit("abba") + wb, lit("baab") + wb});
}

std::string Morphism::name() const {
  switch (kind_) {
    case Kind::sigma: return "sigma";
    case Kind::tau: return "tau";
    case Kind::phi: return "phi_" + parameter_.str();
    case Kind::psi: return "psi_" + parameter_.str();
    case Kind::eta: return "eta_" + parameter_.str();
    case Kind::eta_prime: return "eta'_" + parameter_.str();
  }
  return {};
}

const Word& Morphism::image(char letter) const { return images_[letter_index(letter)]; }

Word Morphism::operator()(const Word& v) const {
  std::string out;
  for (char c : v) {
    const bool ok = (c == 'a' || c == 'b') || (source_ == Alphabet::extended && (c == 'c' || c == 'd'));
    if (!ok) throw std::invalid_argument(name() + ": letter '" + std::string(1, c) + "' outside the source alphabet");
    out += image(c).str();
  }
  return Word(out, target_);
}

namespace {

IdentityCheck check_M(Word lhs, Word rhs) {
  LaurentPoly l = M_q12(lhs);
  LaurentPoly r = M_q12(rhs);
  return {std::move(lhs), std::move(rhs), std::move(l), std::move(r)};
}

IdentityCheck check_mu(Word lhs, Word rhs) {
  LaurentPoly l = mu_q12(lhs);
  LaurentPoly r = mu_q12(rhs);
  return {std::move(lhs), std::move(rhs), std::move(l), std::move(r)};
}

}  // namespace

IdentityCheck verify_identity1_M(const Word& w, std::size_t k, std::size_t m, std::size_t n) {
  const Word b("b");
  return check_M(repeat('a', k) + b + w + b + repeat('a', m), repeat('a', k) + b + bar(w) + b + repeat('a', n));
}

IdentityCheck verify_identity1_mu(const Word& w) {
  const Word a("a");
  const Word b("b");
  return check_mu(a + w + b, a + mirror(w) + b);
}

IdentityCheck verify_identity2_M(const Word& w, const Word& v, std::size_t k, std::size_t m, std::size_t n) {
  const Word b("b");
  Morphism phi = Morphism::phi(w);
  return check_M(Word((repeat('a', k) + b + phi(v) + w + b + repeat('a', m)).str()),
                 Word((repeat('a', k) + b + phi(flip(v)) + w + b + repeat('a', n)).str()));
}

IdentityCheck verify_identity2_mu(const Word& w, const Word& v) {
  const Word a("a");
  const Word b("b");
  Morphism psi = Morphism::psi(w);
  return check_mu(Word((a + psi(v) + w + b).str()), Word((a + psi(flip(v)) + w + b).str()));
}

LaurentPoly delta(const Word& w, const Word& v) {
  const Word b("b");
  Word lhs = b + Morphism::eta(w)(v) + w + b;
  Word rhs = b + w + Morphism::eta_prime(w)(bar(v)) + b;
  return M_q12(Word(lhs.str())) - M_q12(Word(rhs.str()));
}

std::string to_string(IdentityFamily f) {
  switch (f) {
    case IdentityFamily::identity1_M: return "1M";
    case IdentityFamily::identity1_mu: return "1mu";
    case IdentityFamily::identity2_M: return "2M";
    case IdentityFamily::identity2_mu: return "2mu";
  }
  return {};
}

IdentityFamily parse_identity_family(const std::string& s) {
  for (auto f : {IdentityFamily::identity1_M, IdentityFamily::identity1_mu, IdentityFamily::identity2_M,
                 IdentityFamily::identity2_mu}) {
    if (to_string(f) == s) return f;
  }
  throw std::invalid_argument("unknown identity family '" + s + "' (expected 1M, 1mu, 2M or 2mu)");
}

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

// Uniform length in [0, max_len], then uniform letters.
Word random_word(std::mt19937_64& rng, std::size_t max_len, Alphabet alphabet) {
  std::uniform_int_distribution<std::size_t> len_dist(0, max_len);
  std::uniform_int_distribution<int> letter_dist(0, alphabet == Alphabet::binary ? 1 : 3);
  std::string s(len_dist(rng), 'a');
  for (char& c : s) c = static_cast<char>('a' + letter_dist(rng));
  return Word(s, alphabet);
}

}  // namespace

IdentityCase draw_identity_case(IdentityFamily family, std::uint64_t seed, std::size_t index,
                                const SuiteBounds& bounds) {
  IdentityCase c{family, splitmix64(seed ^ splitmix64(index)), {}, Word("", Alphabet::extended), 0, 0, 0, {}};
  std::mt19937_64 rng(c.seed);
  const bool first = family == IdentityFamily::identity1_M || family == IdentityFamily::identity1_mu;
  c.w = random_word(rng, first ? bounds.max_w_first : bounds.max_w_second, Alphabet::binary);
  if (!first) c.v = random_word(rng, bounds.max_v_second, Alphabet::extended);
  std::uniform_int_distribution<std::size_t> kmn(0, first ? bounds.max_kmn_first : bounds.max_kmn_second);
  c.k = kmn(rng);
  c.m = kmn(rng);
  c.n = kmn(rng);
  switch (family) {
    case IdentityFamily::identity1_M: c.check = verify_identity1_M(c.w, c.k, c.m, c.n); break;
    case IdentityFamily::identity1_mu: c.check = verify_identity1_mu(c.w); break;
    case IdentityFamily::identity2_M: c.check = verify_identity2_M(c.w, c.v, c.k, c.m, c.n); break;
    case IdentityFamily::identity2_mu: c.check = verify_identity2_mu(c.w, c.v); break;
  }
  return c;
}

std::vector<IdentityCase> run_identity_suite(IdentityFamily family, std::size_t cases, std::uint64_t seed,
                                             const SuiteBounds& bounds, int threads) {
  std::vector<IdentityCase> out(cases);
  const auto n = static_cast<std::int64_t>(cases);
#pragma omp parallel for schedule(dynamic, 8) num_threads(resolve_threads(threads))
  for (std::int64_t i = 0; i < n; ++i) {
    out[static_cast<std::size_t>(i)] = draw_identity_case(family, seed, static_cast<std::size_t>(i), bounds);
  }
  return out;
}

std::vector<Word> paired_words(std::size_t pairs) {
  std::vector<std::string> layer{""};
  for (std::size_t i = 0; i < pairs; ++i) {
    std::vector<std::string> next;
    for (const auto& s : layer) {
      for (const char* p : {"ac", "ad", "bc", "bd"}) next.push_back(s + p);
    }
    layer = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(layer.size());
  for (const auto& s : layer) out.emplace_back(s, Alphabet::extended);
  return out;
}

std::vector<Word> all_words(std::size_t length, Alphabet alphabet) {
  const std::string letters = alphabet == Alphabet::binary ? "ab" : "abcd";
  std::vector<std::string> layer{""};
  for (std::size_t i = 0; i < length; ++i) {
    std::vector<std::string> next;
    for (const auto& s : layer) {
      for (char c : letters) next.push_back(s + c);
    }
    layer = std::move(next);
  }
  std::vector<Word> out;
  out.reserve(layer.size());
  for (const auto& s : layer) out.emplace_back(s, alphabet);
  return out;
}

}  // namespace qmarkoff
