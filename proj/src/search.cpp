#include "qmarkoff/search.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <set>

#include "qmarkoff/cyclotomic.hpp"
#include "qmarkoff/identities.hpp"
#include "qmarkoff/parallel.hpp"
#include "qmarkoff/qmatrix.hpp"

namespace qmarkoff {

std::string to_string(MapKind kind) { return kind == MapKind::M ? "M" : "mu"; }

MapKind parse_map_kind(const std::string& s) {
  if (s == "M" || s == "m") return MapKind::M;
  if (s == "mu") return MapKind::mu;
  throw std::invalid_argument("unknown map kind '" + s + "' (expected M or mu)");
}

std::string to_string(PairClass c) {
  switch (c) {
    case PairClass::identity1: return "Identity1";
    case PairClass::identity2: return "Identity2";
    case PairClass::both: return "Both";
    case PairClass::unexplained: return "Unexplained";
  }
  return {};
}

PairClass parse_pair_class(const std::string& s) {
  for (auto c : {PairClass::identity1, PairClass::identity2, PairClass::both, PairClass::unexplained}) {
    if (to_string(c) == s) return c;
  }
  throw std::invalid_argument("unknown pair class '" + s + "'");
}

// ---------------------------------------------------------------------------
// Pair classification

namespace {

const std::string kAb = "ab";
const std::string kBa = "ba";
const std::string kAbba = "abba";
const std::string kBaab = "baab";

std::string reversed(const std::string& s) { return {s.rbegin(), s.rend()}; }

std::string barred(const std::string& s) { return bar(Word(s, Alphabet::extended)).str(); }

// Inverts v -> psi_w(v) (short_blocks) or v -> phi_w(v) (long blocks) for a
// fixed w. Each letter image is w s1 w' s2 with s1, s2 in {ab, ba} (psi) or
// {abba, baab} (phi), and (s1, s2) determines the letter, so the decoding is
// unique when it exists.
std::optional<std::string> decode_blocks(const std::string& body, const std::string& w, const std::string& w2,
                                         bool long_blocks) {
  const std::string& up = long_blocks ? kAbba : kAb;
  const std::string& down = long_blocks ? kBaab : kBa;
  const std::size_t s = up.size();
  const std::size_t block = 2 * w.size() + 2 * s;
  if (body.empty() || body.size() % block != 0) return std::nullopt;
  std::string v;
  for (std::size_t pos = 0; pos < body.size(); pos += block) {
    if (body.compare(pos, w.size(), w) != 0) return std::nullopt;
    std::string s1 = body.substr(pos + w.size(), s);
    if (body.compare(pos + w.size() + s, w2.size(), w2) != 0) return std::nullopt;
    std::string s2 = body.substr(pos + 2 * w.size() + s, s);
    const bool u1 = s1 == up, d1 = s1 == down, u2 = s2 == up, d2 = s2 == down;
    if (!(u1 || d1) || !(u2 || d2)) return std::nullopt;
    v += u1 ? (u2 ? 'a' : 'c') : (d2 ? 'b' : 'd');
  }
  return v;
}

struct Match {
  std::string witness;
};

// x = a psi_w(v) w b and y = a psi_w(flip(v)) w b.
std::optional<Match> match_mu_identity2(const std::string& x, const std::string& y) {
  if (x.size() != y.size() || x.size() < 2 || x.front() != 'a' || x.back() != 'b') return std::nullopt;
  const std::string inner = x.substr(1, x.size() - 2);
  for (std::size_t wl = 0; wl <= inner.size(); ++wl) {
    const std::string w = inner.substr(inner.size() - wl);
    const std::string body = inner.substr(0, inner.size() - wl);
    auto v = decode_blocks(body, w, reversed(w), false);
    if (!v) continue;
    Morphism psi = Morphism::psi(Word(w));
    const std::string image = "a" + psi(flip(Word(*v, Alphabet::extended))).str() + w + "b";
    if (image == y) return Match{"w=" + w + ",v=" + *v};
  }
  return std::nullopt;
}

// x = a w b and y = a wtilde b.
std::optional<Match> match_mu_identity1(const std::string& x, const std::string& y) {
  if (x.size() != y.size() || x.size() < 2) return std::nullopt;
  if (x.front() != 'a' || x.back() != 'b' || y.front() != 'a' || y.back() != 'b') return std::nullopt;
  const std::string w = x.substr(1, x.size() - 2);
  if (y.substr(1, y.size() - 2) == reversed(w)) return Match{"w=" + w};
  return std::nullopt;
}

// x = a^k core a^m with core empty or starting and ending with b.
struct ACore {
  std::size_t k = 0;
  std::string core;
};

ACore strip_a(const std::string& x) {
  std::size_t first = x.find('b');
  if (first == std::string::npos) return {x.size(), ""};
  std::size_t last = x.rfind('b');
  return {first, x.substr(first, last - first + 1)};
}

// x = a^k b w b a^m, y = a^k b wbar b a^n, or x, y equal up to trailing a's
// (M_q(a^k u a^m)_12 = q^k M_q(u)_12).
std::optional<Match> match_M_identity1(const std::string& x, const std::string& y) {
  ACore cx = strip_a(x), cy = strip_a(y);
  if (cx.core.empty() && cy.core.empty()) return Match{"a-power"};
  if (cx.k != cy.k) return std::nullopt;
  if (cx.core == cy.core) return Match{"k=" + std::to_string(cx.k) + ",trailing-a"};
  if (cx.core.size() < 2 || cy.core.size() != cx.core.size()) return std::nullopt;
  const std::string w = cx.core.substr(1, cx.core.size() - 2);
  if (cy.core.substr(1, cy.core.size() - 2) == barred(w)) return Match{"k=" + std::to_string(cx.k) + ",w=" + w};
  return std::nullopt;
}

// x = a^k b phi_w(v) w b a^m and y = a^k b phi_w(flip(v)) w b a^n.
std::optional<Match> match_M_identity2(const std::string& x, const std::string& y) {
  ACore cx = strip_a(x), cy = strip_a(y);
  if (cx.k != cy.k || cx.core.size() < 2 || cx.core.size() != cy.core.size()) return std::nullopt;
  const std::string inner = cx.core.substr(1, cx.core.size() - 2);
  for (std::size_t wl = 0; wl <= inner.size(); ++wl) {
    const std::string w = inner.substr(inner.size() - wl);
    const std::string body = inner.substr(0, inner.size() - wl);
    auto v = decode_blocks(body, w, barred(w), true);
    if (!v) continue;
    Morphism phi = Morphism::phi(Word(w));
    const std::string image = "b" + phi(flip(Word(*v, Alphabet::extended))).str() + w + "b";
    if (image == cy.core) return Match{"k=" + std::to_string(cx.k) + ",w=" + w + ",v=" + *v};
  }
  return std::nullopt;
}

template <typename F>
std::optional<Match> either_order(F f, const std::string& x, const std::string& y) {
  if (auto m = f(x, y)) return m;
  return f(y, x);
}

}  // namespace

PairClassification classify_collision(MapKind kind, const Word& x, const Word& y) {
  const std::string& xs = x.str();
  const std::string& ys = y.str();
  std::optional<Match> m1, m2;
  if (kind == MapKind::mu) {
    m1 = either_order(match_mu_identity1, xs, ys);
    m2 = either_order(match_mu_identity2, xs, ys);
  } else {
    m1 = either_order(match_M_identity1, xs, ys);
    m2 = either_order(match_M_identity2, xs, ys);
  }
  PairClassification out{x, y, PairClass::unexplained, "", std::max(xs.size(), ys.size())};
  if (m1 && m2) {
    out.kind = PairClass::both;
    out.witness = m1->witness + ";" + m2->witness;
  } else if (m1) {
    out.kind = PairClass::identity1;
    out.witness = m1->witness;
  } else if (m2) {
    out.kind = PairClass::identity2;
    out.witness = m2->witness;
  }
  return out;
}

PairClassification classify_pair(MapKind kind, const Word& x, const Word& y) {
  if (x == y) throw std::invalid_argument("classify_pair: x and y must be distinct words");
  const LaurentPoly px = kind == MapKind::mu ? mu_q12(x) : M_q12(x);
  const LaurentPoly py = kind == MapKind::mu ? mu_q12(y) : M_q12(y);
  if (px != py) {
    throw std::invalid_argument("classify_pair: " + x.str() + " and " + y.str() + " do not collide");
  }
  return classify_collision(kind, x, y);
}

PairClassification classify_pair(const Word& x, const Word& y) { return classify_pair(MapKind::mu, x, y); }

// ---------------------------------------------------------------------------
// Resource bound

ResourceBoundError::ResourceBoundError(std::size_t max_len, std::size_t bound)
    : std::runtime_error("collision search with max_len " + std::to_string(max_len) + " exceeds the safety bound " +
                         std::to_string(bound) + ": it needs " +
                         std::to_string((std::uint64_t{2} << max_len) - 2) + " words and roughly " +
                         std::to_string(((std::uint64_t{2} << max_len) - 2) * (96 + 3 * 32 * max_len) >> 20) +
                         " MiB; raise the bound explicitly to proceed"),
      max_len_(max_len),
      bound_(bound) {}

std::uint64_t ResourceBoundError::words_required() const { return (std::uint64_t{2} << max_len_) - 2; }

std::uint64_t ResourceBoundError::bytes_estimate() const { return words_required() * (96 + 3 * 32 * max_len_); }

// ---------------------------------------------------------------------------
// Search

namespace {

struct Entry {
  std::uint64_t hash;
  std::uint64_t bits;
  int length;
  LaurentPoly value;
};

bool entry_less(const Entry& l, const Entry& r) {
  if (l.hash != r.hash) return l.hash < r.hash;
  if (auto c = l.value <=> r.value; c != 0) return c < 0;
  if (l.length != r.length) return l.length < r.length;
  return l.bits < r.bits;
}

void step(QMatrix& m, MapKind kind, char letter) {
  if (kind == MapKind::M) {
    m.right_multiply_letter(letter);
  } else {
    for (char c : std::string_view(letter == 'a' ? "ba" : "bbaa")) m.right_multiply_letter(c);
  }
}

// Depth-first over all extensions of (bits, length) up to max_len, recording
// every node of length >= 1.
void explore(QMatrix m, std::uint64_t bits, int length, int max_len, MapKind kind, std::vector<Entry>& out) {
  if (length >= 1) out.push_back({m.m12.content_hash(), bits, length, m.m12});
  if (length == max_len) return;
  for (int letter = 0; letter < 2; ++letter) {
    QMatrix child = m;
    step(child, kind, letter == 0 ? 'a' : 'b');
    explore(std::move(child), (bits << 1) | static_cast<std::uint64_t>(letter), length + 1, max_len, kind, out);
  }
}

CollisionReport finish_report(MapKind kind, std::size_t max_len, std::size_t words,
                              std::vector<CollisionGroup> groups, int threads) {
  for (auto& g : groups) std::sort(g.words.begin(), g.words.end(), ShortlexLess{});
  std::sort(groups.begin(), groups.end(),
            [](const CollisionGroup& l, const CollisionGroup& r) { return shortlex(l.words[0], r.words[0]) < 0; });

  CollisionReport report;
  report.kind = kind;
  report.max_len = max_len;
  report.summary.words_examined = words;
  report.summary.groups = groups.size();

  std::vector<std::pair<const Word*, const Word*>> todo;
  for (const auto& g : groups) {
    if (kind == MapKind::mu) {
      // Letter counts are recoverable from the value at zeta_6.
      for (const auto& w : g.words) {
        if (w.count_b() != g.words[0].count_b() || w.size() != g.words[0].size()) {
          throw std::logic_error("mu_q collision group with differing letter counts: " + g.words[0].str() + ", " +
                                 w.str());
        }
      }
    }
    for (std::size_t i = 0; i < g.words.size(); ++i) {
      for (std::size_t j = i + 1; j < g.words.size(); ++j) todo.emplace_back(&g.words[i], &g.words[j]);
    }
  }
  report.pairs.resize(todo.size());
  const auto n = static_cast<std::int64_t>(todo.size());
#pragma omp parallel for schedule(dynamic, 16) num_threads(threads)
  for (std::int64_t i = 0; i < n; ++i) {
    const auto& [x, y] = todo[static_cast<std::size_t>(i)];
    report.pairs[static_cast<std::size_t>(i)] = classify_collision(kind, *x, *y);
  }
  // Link explained pairs group by group; an unexplained pair whose ends end
  // up in one component follows from the families by transitivity.
  std::size_t pair_index = 0;
  for (const auto& g : groups) {
    const std::size_t n = g.words.size();
    std::vector<std::size_t> parent(n);
    for (std::size_t i = 0; i < n; ++i) parent[i] = i;
    auto find = [&parent](std::size_t i) {
      while (parent[i] != i) i = parent[i] = parent[parent[i]];
      return i;
    };
    std::size_t idx = pair_index;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        if (report.pairs[idx].kind != PairClass::unexplained) parent[find(i)] = find(j);
      }
    }
    idx = pair_index;
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = i + 1; j < n; ++j, ++idx) {
        auto& p = report.pairs[idx];
        if (p.kind == PairClass::unexplained) {
          p.chain_explained = find(i) == find(j);
          if (!p.chain_explained) ++report.summary.unexplained_after_chaining;
        }
      }
    }
    pair_index = idx;
  }
  for (const auto& p : report.pairs) {
    switch (p.kind) {
      case PairClass::identity1: ++report.summary.identity1; break;
      case PairClass::identity2: ++report.summary.identity2; break;
      case PairClass::both: ++report.summary.both; break;
      case PairClass::unexplained: ++report.summary.unexplained; break;
    }
  }
  report.summary.pairs = report.pairs.size();
  report.groups = std::move(groups);
  return report;
}

}  // namespace

CollisionReport collide(MapKind kind, std::size_t max_len, const SearchOptions& options) {
  if (max_len > options.safety_bound) throw ResourceBoundError(max_len, options.safety_bound);
  if (max_len > 62) throw ResourceBoundError(max_len, 62);
  const int threads = resolve_threads(options.threads);
  const int len = static_cast<int>(max_len);

  // Prefix classes: 4 per thread, capped by the word length.
  int prefix = 0;
  while ((1 << prefix) < 4 * threads && prefix < len) ++prefix;

  std::vector<Entry> entries;
  // Words shorter than the prefix length, done serially.
  {
    std::vector<Entry> shallow;
    for (int l = 1; l < prefix; ++l) {
      for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l); ++bits) {
        QMatrix m = QMatrix::identity();
        for (int i = l - 1; i >= 0; --i) step(m, kind, ((bits >> i) & 1U) ? 'b' : 'a');
        shallow.push_back({m.m12.content_hash(), bits, l, m.m12});
      }
    }
    entries = std::move(shallow);
  }

  const auto classes = static_cast<std::int64_t>(std::uint64_t{1} << prefix);
  std::vector<std::vector<Entry>> local(static_cast<std::size_t>(classes));
#pragma omp parallel for schedule(dynamic, 1) num_threads(threads)
  for (std::int64_t c = 0; c < classes; ++c) {
    const auto bits = static_cast<std::uint64_t>(c);
    QMatrix m = QMatrix::identity();
    for (int i = prefix - 1; i >= 0; --i) step(m, kind, ((bits >> i) & 1U) ? 'b' : 'a');
    auto& out = local[static_cast<std::size_t>(c)];
    if (prefix == 0) {
      explore(std::move(m), 0, 0, len, kind, out);
    } else {
      explore(std::move(m), bits, prefix, len, kind, out);
    }
  }
  for (auto& v : local) {
    std::move(v.begin(), v.end(), std::back_inserter(entries));
    std::vector<Entry>().swap(v);
  }
  const std::size_t words = entries.size();
  std::sort(entries.begin(), entries.end(), entry_less);

  std::vector<CollisionGroup> groups;
  for (std::size_t i = 0; i < entries.size();) {
    std::size_t j = i + 1;
    // Same hash and same polynomial; the hash only orders the scan.
    while (j < entries.size() && entries[j].hash == entries[i].hash && entries[j].value == entries[i].value) ++j;
    if (j - i >= 2) {
      CollisionGroup g{entries[i].value, {}};
      for (std::size_t t = i; t < j; ++t) g.words.push_back(Word::from_bits(entries[t].bits, entries[t].length));
      groups.push_back(std::move(g));
    }
    i = j;
  }
  return finish_report(kind, max_len, words, std::move(groups), threads);
}

CollisionReport collide_serial(MapKind kind, std::size_t max_len, std::size_t safety_bound) {
  if (max_len > safety_bound) throw ResourceBoundError(max_len, safety_bound);
  std::map<LaurentPoly, std::vector<Word>> by_value;
  std::size_t words = 0;
  for (std::size_t l = 1; l <= max_len; ++l) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << l); ++bits) {
      Word w = Word::from_bits(bits, static_cast<int>(l));
      by_value[kind == MapKind::M ? M_q12(w) : mu_q12(w)].push_back(std::move(w));
      ++words;
    }
  }
  std::vector<CollisionGroup> groups;
  for (auto& [value, ws] : by_value) {
    if (ws.size() >= 2) groups.push_back({value, std::move(ws)});
  }
  return finish_report(kind, max_len, words, std::move(groups), 1);
}

// ---------------------------------------------------------------------------
// Christoffel injectivity

InjectivityVerdict christoffel_injectivity(std::size_t max_len) {
  InjectivityVerdict v;
  v.max_len = max_len;
  const std::vector<Word> words = christoffel_words(max_len);
  v.words = words.size();

  std::map<LaurentPoly, const Word*> by_poly;
  std::map<CycInt, const Word*> by_zeta6;
  std::set<LetterCounts> counts;
  for (const auto& w : words) {
    LaurentPoly p = mu_q12(w);
    CycInt z = eval_cyclotomic(p, 6);
    if (auto [it, fresh] = by_poly.emplace(p, &w); !fresh) {
      v.injective = false;
      if (!v.counterexample) v.counterexample = std::make_pair(*it->second, w);
    }
    if (auto [it, fresh] = by_zeta6.emplace(z, &w); !fresh) v.zeta6_injective = false;
    if (!counts.insert({w.count_a(), w.count_b()}).second) v.counts_distinct = false;
  }
  return v;
}

}  // namespace qmarkoff
