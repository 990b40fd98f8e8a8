#include "qmarkoff/cyclotomic.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "qmarkoff/parallel.hpp"

namespace qmarkoff {

namespace {

// Phi_k = x^d + sum_j low[j] x^j.
const std::vector<long>& cyclotomic_low_coeffs(int k) {
  static const std::array<std::vector<long>, 7> table = {{
      {},
      {-1},
      {1},
      {1, 1},
      {1, 0},
      {1, 1, 1, 1},
      {1, -1},
  }};
  return table[static_cast<std::size_t>(k)];
}

void check_k(int k) {
  if (k < 1 || k > 6) throw std::domain_error("cyclotomic order k must be in 1..6, got " + std::to_string(k));
}

// Reduces a power-basis coefficient vector modulo Phi_k.
std::vector<BigInt> reduce(int k, std::vector<BigInt> c) {
  const auto& low = cyclotomic_low_coeffs(k);
  const std::size_t d = low.size();
  for (std::size_t i = c.size(); i-- > d;) {
    if (c[i] == 0) continue;
    BigInt t = c[i];
    c[i] = 0;
    for (std::size_t j = 0; j < d; ++j) {
      if (low[j] != 0) c[i - d + j] -= t * low[j];
    }
  }
  c.resize(d);
  return c;
}

std::uint64_t fnv(std::uint64_t h, const BigInt& c) {
  std::string s = c.get_str(16);
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ULL;
  }
  h ^= 0xFF;
  h *= 1099511628211ULL;
  return h;
}

}  // namespace

int cyclotomic_degree(int k) {
  check_k(k);
  return static_cast<int>(cyclotomic_low_coeffs(k).size());
}

CycInt::CycInt(int k) : k_(k), coords_(static_cast<std::size_t>(cyclotomic_degree(k))) {}

CycInt::CycInt(int k, std::vector<BigInt> coords) : k_(k) {
  check_k(k);
  coords_ = reduce(k, std::move(coords));
}

CycInt CycInt::from_power_coeffs(int k, std::vector<BigInt> by_exponent) {
  return CycInt(k, std::move(by_exponent));
}

CycInt CycInt::integer(int k, const BigInt& n) { return CycInt(k, std::vector<BigInt>{n}); }

CycInt CycInt::zeta_power(int k, long e) {
  check_k(k);
  long r = ((e % k) + k) % k;
  std::vector<BigInt> c(static_cast<std::size_t>(r + 1));
  c[static_cast<std::size_t>(r)] = 1;
  return CycInt(k, std::move(c));
}

bool CycInt::is_zero() const {
  return std::all_of(coords_.begin(), coords_.end(), [](const BigInt& c) { return c == 0; });
}

CycInt CycInt::operator-() const {
  CycInt r = *this;
  for (auto& c : r.coords_) c = -c;
  return r;
}

CycInt operator+(const CycInt& x, const CycInt& y) {
  if (x.k_ != y.k_) throw std::domain_error("CycInt: mismatched cyclotomic orders");
  CycInt r = x;
  for (std::size_t i = 0; i < r.coords_.size(); ++i) r.coords_[i] += y.coords_[i];
  return r;
}

CycInt operator-(const CycInt& x, const CycInt& y) { return x + (-y); }

std::strong_ordering operator<=>(const CycInt& x, const CycInt& y) {
  if (auto c = x.k_ <=> y.k_; c != 0) return c;
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    int c = cmp(x.coords_[i], y.coords_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

CycInt operator*(const CycInt& x, const CycInt& y) {
  if (x.k_ != y.k_) throw std::domain_error("CycInt: mismatched cyclotomic orders");
  std::vector<BigInt> prod(x.coords_.size() + y.coords_.size() - 1);
  for (std::size_t i = 0; i < x.coords_.size(); ++i) {
    if (x.coords_[i] == 0) continue;
    for (std::size_t j = 0; j < y.coords_.size(); ++j) {
      mpz_addmul(prod[i + j].get_mpz_t(), x.coords_[i].get_mpz_t(), y.coords_[j].get_mpz_t());
    }
  }
  return CycInt(x.k_, std::move(prod));
}

std::complex<double> CycInt::approx() const {
  std::complex<double> z = 0;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    double angle = 2.0 * std::numbers::pi * static_cast<double>(i) / k_;
    z += coords_[i].get_d() * std::complex<double>(std::cos(angle), std::sin(angle));
  }
  return z;
}

std::uint64_t CycInt::content_hash() const {
  std::uint64_t h = 14695981039346656037ULL ^ static_cast<std::uint64_t>(k_);
  for (const auto& c : coords_) h = fnv(h, c);
  return h;
}

std::string CycInt::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    const BigInt& c = coords_[i];
    if (c == 0) continue;
    BigInt mag = abs(c);
    if (out.empty()) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i >= 1) out += "z";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CycInt eval_cyclotomic(const LaurentPoly& p, int k) {
  check_k(k);
  std::vector<BigInt> by_exponent(static_cast<std::size_t>(k));
  for (std::size_t i = 0; i < p.coeffs().size(); ++i) {
    long e = p.min_degree() + static_cast<long>(i);
    long r = ((e % k) + k) % k;
    by_exponent[static_cast<std::size_t>(r)] += p.coeffs()[i];
  }
  return CycInt(k, std::move(by_exponent));
}

CycMatrix CycMatrix::identity(int k) {
  return {{CycInt::integer(k, 1), CycInt(k), CycInt(k), CycInt::integer(k, 1)}};
}

CycMatrix operator*(const CycMatrix& x, const CycMatrix& y) {
  return {{x.e[0] * y.e[0] + x.e[1] * y.e[2], x.e[0] * y.e[1] + x.e[1] * y.e[3],
           x.e[2] * y.e[0] + x.e[3] * y.e[2], x.e[2] * y.e[1] + x.e[3] * y.e[3]}};
}

CycMatrix operator*(const CycInt& s, const CycMatrix& x) {
  return {{s * x.e[0], s * x.e[1], s * x.e[2], s * x.e[3]}};
}

std::uint64_t CycMatrix::content_hash() const {
  std::uint64_t h = 0;
  for (const auto& c : e) h = (h ^ c.content_hash()) * 1099511628211ULL;
  return h;
}

CycMatrix eval_cyclotomic(const QMatrix& m, int k) {
  return {{eval_cyclotomic(m.m11, k), eval_cyclotomic(m.m12, k), eval_cyclotomic(m.m21, k),
           eval_cyclotomic(m.m22, k)}};
}

CycMatrix closed_form_mu_zeta6(std::uint64_t length, std::uint64_t count_b) {
  if (count_b > length) throw std::invalid_argument("closed_form_mu_zeta6: count_b exceeds length");
  const BigInt n(static_cast<unsigned long>(length));
  const BigInt b(static_cast<unsigned long>(count_b));
  // zeta^(n+b) [ (n, -n-b; -b, -n) zeta + (b, n; n+b, -b) + I ]
  auto entry = [](const BigInt& constant, const BigInt& linear) {
    return CycInt(6, std::vector<BigInt>{constant, linear});
  };
  CycMatrix inner{{entry(b + 1, n), entry(n, -n - b), entry(n + b, -b), entry(1 - b, -n)}};
  return CycInt::zeta_power(6, static_cast<long>((length + count_b) % 6)) * inner;
}

CycInt entry12_zeta6(std::uint64_t length, std::uint64_t count_b) {
  if (count_b > length) throw std::invalid_argument("entry12_zeta6: count_b exceeds length");
  const BigInt n(static_cast<unsigned long>(length));
  const BigInt b(static_cast<unsigned long>(count_b));
  return CycInt::zeta_power(6, static_cast<long>((length + count_b) % 6)) *
         CycInt(6, std::vector<BigInt>{n, -n - b});
}

namespace {

// zeta_6^j in the basis {1, zeta_6}.
std::array<long, 2> zeta6_power_coords(int j) {
  static const std::array<std::array<long, 2>, 6> table = {{{1, 0}, {0, 1}, {-1, 1}, {-1, 0}, {0, -1}, {1, -1}}};
  return table[static_cast<std::size_t>(((j % 6) + 6) % 6)];
}

}  // namespace

std::optional<ConeIndex> cone_of(const CycInt& z) {
  if (z.k() != 6) throw std::domain_error("cone_of requires an element of Z[zeta_6]");
  if (z.is_zero()) return std::nullopt;
  const BigInt& x = z.coords()[0];
  const BigInt& y = z.coords()[1];
  for (int j = 0; j < 6; ++j) {
    auto u = zeta6_power_coords(j);
    auto v = zeta6_power_coords(j + 1);
    // Solve alpha u + beta v = (x, y); the basis is unimodular, det = +-1.
    long det = u[0] * v[1] - u[1] * v[0];
    BigInt alpha = (x * v[1] - y * v[0]) * det;
    BigInt beta = (u[0] * y - u[1] * x) * det;
    if (alpha >= 0 && beta > 0) return ConeIndex{((j - 4) % 6 + 6) % 6};
  }
  throw std::logic_error("cone_of: no cone accepted a nonzero point");
}

std::optional<LetterCounts> recover_counts(const CycInt& z) {
  if (z.k() != 6) throw std::domain_error("recover_counts requires an element of Z[zeta_6]");
  if (z.is_zero()) return LetterCounts{0, 0};
  auto cone = cone_of(z);
  const int r = cone->residue;
  // zeta^-r z must equal n - (n+b) zeta.
  CycInt y = CycInt::zeta_power(6, -r) * z;
  const BigInt& n = y.coords()[0];
  BigInt b = -y.coords()[1] - n;
  if (n <= 0 || b < 0 || b > n) return std::nullopt;
  BigInt s = n + b;
  if (mpz_fdiv_ui(s.get_mpz_t(), 6) != static_cast<unsigned long>(r)) return std::nullopt;
  if (!n.fits_ulong_p()) return std::nullopt;
  return LetterCounts{BigInt(n - b).get_ui(), b.get_ui()};
}

namespace {

struct CycMatrixHash {
  std::size_t operator()(const CycMatrix& m) const { return static_cast<std::size_t>(m.content_hash()); }
};

CycMatrix generator(int k, char letter, bool scaled) {
  CycMatrix g = eval_cyclotomic(letter == 'a' ? mu_q_a() : mu_q_b(), k);
  if (scaled) g = CycInt::zeta_power(k, letter == 'a' ? -1 : -2) * g;
  return g;
}

}  // namespace

ClosureResult monoid_closure(int k, bool scaled, std::size_t cap) {
  check_k(k);
  const std::array<CycMatrix, 2> gens = {generator(k, 'a', scaled), generator(k, 'b', scaled)};
  std::unordered_set<CycMatrix, CycMatrixHash> seen;
  std::vector<CycMatrix> frontier{CycMatrix::identity(k)};
  seen.insert(frontier.front());
  while (!frontier.empty()) {
    std::vector<CycMatrix> next;
    for (const auto& m : frontier) {
      for (const auto& g : gens) {
        CycMatrix p = m * g;
        if (seen.insert(p).second) {
          if (seen.size() > cap) return {ClosureResult::Status::exceeded_cap, seen.size()};
          next.push_back(std::move(p));
        }
      }
    }
    frontier = std::move(next);
  }
  return {ClosureResult::Status::finite, seen.size()};
}

namespace {

// Values mu_zeta_k(w)_12 may take when mu_1(w)_12 = residue (mod k).
std::vector<CycInt> predicted_values(int k, int residue) {
  auto z = [k](long e) { return CycInt::zeta_power(k, e); };
  const CycInt zero(k);
  switch (k) {
    case 2:
      if (residue == 0) return {zero};
      return {z(0), -z(0)};
    case 3:
      if (residue == 0) return {zero};
      if (residue == 1) return {z(0), z(1), z(2)};
      return {-z(0), -z(1), -z(2)};
    case 4:
      if (residue == 0) return {zero};
      if (residue % 2 == 1) return {z(0), z(1), z(2), z(3)};
      return {z(0) + z(1), z(0) - z(1), z(2) + z(1), z(2) - z(1)};
    default:
      return {};
  }
}

struct WordValue {
  int residue;
  CycInt value;
};

ResidueReport build_report(int k, std::size_t max_len, const std::vector<std::pair<Word, WordValue>>& data) {
  ResidueReport report;
  report.k = k;
  report.max_len = max_len;
  report.words_checked = data.size();
  std::map<int, std::set<CycInt>> classes;
  for (const auto& [w, wv] : data) {
    if (k != 5) {
      auto allowed = predicted_values(k, wv.residue);
      if (std::find(allowed.begin(), allowed.end(), wv.value) == allowed.end()) {
        report.violations.push_back("w=" + (w.empty() ? std::string("(empty)") : w.str()) +
                                    " mu1 mod " + std::to_string(k) + "=" + std::to_string(wv.residue) +
                                    " value=" + wv.value.to_string());
      }
    }
    classes[wv.residue].insert(wv.value);
  }
  // For k = 4 the value only separates 0, 2 and the odd residues.
  std::map<int, std::set<CycInt>> merged;
  for (auto& [r, values] : classes) {
    merged[k == 4 && r % 2 == 1 ? 1 : r].insert(values.begin(), values.end());
    report.classes[r] = std::vector<CycInt>(values.begin(), values.end());
  }
  std::set<CycInt> all;
  std::size_t total = 0;
  for (auto& [r, values] : merged) {
    total += values.size();
    all.insert(values.begin(), values.end());
  }
  report.distinct_values = all.size();
  report.residue_determined = (total == all.size());
  return report;
}

void check_residue_k(int k) {
  if (k < 2 || k > 5) throw std::domain_error("residue relations are defined for k in 2..5, got " + std::to_string(k));
}

// Parallel kernel: per length class, each word index is independent. The
// images of a and b are evaluated once; mu_1 is tracked modulo k.
std::vector<std::pair<Word, WordValue>> evaluate_words_parallel(int k, std::size_t max_len, int threads) {
  const std::array<CycMatrix, 2> gens = {eval_cyclotomic(mu_q_a(), k), eval_cyclotomic(mu_q_b(), k)};
  const std::array<std::array<long, 4>, 2> int_gens = {{{2, 1, 1, 1}, {5, 2, 2, 1}}};
  std::vector<std::pair<Word, WordValue>> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    const std::int64_t count = std::int64_t{1} << len;
    std::vector<std::pair<Word, WordValue>> layer(static_cast<std::size_t>(count));
#pragma omp parallel for schedule(static) num_threads(resolve_threads(threads))
    for (std::int64_t bits = 0; bits < count; ++bits) {
      Word w = Word::from_bits(static_cast<std::uint64_t>(bits), static_cast<int>(len));
      CycMatrix m = CycMatrix::identity(k);
      std::array<long, 4> im = {1, 0, 0, 1};
      for (char c : w) {
        const int g = c == 'a' ? 0 : 1;
        m = m * gens[static_cast<std::size_t>(g)];
        const auto& h = int_gens[static_cast<std::size_t>(g)];
        im = {(im[0] * h[0] + im[1] * h[2]) % k, (im[0] * h[1] + im[1] * h[3]) % k,
              (im[2] * h[0] + im[3] * h[2]) % k, (im[2] * h[1] + im[3] * h[3]) % k};
      }
      layer[static_cast<std::size_t>(bits)] = {std::move(w), WordValue{static_cast<int>(im[1]), m.m12()}};
    }
    std::move(layer.begin(), layer.end(), std::back_inserter(out));
  }
  return out;
}

}  // namespace

ResidueReport residue_relation_check(int k, std::size_t max_len, int threads) {
  check_residue_k(k);
  return build_report(k, max_len, evaluate_words_parallel(k, max_len, threads));
}

ResidueReport residue_relation_check_serial(int k, std::size_t max_len) {
  check_residue_k(k);
  std::vector<std::pair<Word, WordValue>> data;
  for (std::size_t len = 0; len <= max_len; ++len) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << len); ++bits) {
      Word w = Word::from_bits(bits, static_cast<int>(len));
      LaurentPoly p = mu_q12(w);
      BigInt at_one = p.eval_at_one();
      int residue = static_cast<int>(mpz_fdiv_ui(at_one.get_mpz_t(), static_cast<unsigned long>(k)));
      data.emplace_back(w, WordValue{residue, eval_cyclotomic(p, k)});
    }
  }
  return build_report(k, max_len, data);
}

std::vector<Figure2Point> figure2_points(std::size_t max_len, int threads) {
  ResidueReport report = residue_relation_check(5, max_len, threads);
  std::vector<Figure2Point> points;
  for (const auto& [r, values] : report.classes) {
    for (const auto& v : values) points.push_back({r, v});
  }
  return points;
}

}  // namespace qmarkoff
