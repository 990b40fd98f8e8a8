#include "qmarkoff/laurent.hpp"

#include <algorithm>
#include <sstream>

namespace qmarkoff {

LaurentPoly::LaurentPoly(long constant) : LaurentPoly(BigInt(constant)) {}

LaurentPoly::LaurentPoly(const BigInt& constant) {
  if (constant != 0) coeffs_.push_back(constant);
}

LaurentPoly::LaurentPoly(int min_degree, std::vector<BigInt> coeffs)
    : min_degree_(min_degree), coeffs_(std::move(coeffs)) {
  canonicalize();
}

LaurentPoly::LaurentPoly(int min_degree, std::initializer_list<long> coeffs) : min_degree_(min_degree) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  canonicalize();
}

LaurentPoly LaurentPoly::monomial(const BigInt& coeff, int degree) {
  return LaurentPoly(degree, std::vector<BigInt>{coeff});
}

void LaurentPoly::canonicalize() {
  auto last = std::find_if(coeffs_.rbegin(), coeffs_.rend(), [](const BigInt& c) { return c != 0; });
  coeffs_.erase(last.base(), coeffs_.end());
  auto first = std::find_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c != 0; });
  min_degree_ += static_cast<int>(first - coeffs_.begin());
  coeffs_.erase(coeffs_.begin(), first);
  if (coeffs_.empty()) min_degree_ = 0;
}

BigInt LaurentPoly::coeff(int degree) const {
  if (is_zero() || degree < min_degree_ || degree > max_degree()) return 0;
  return coeffs_[static_cast<std::size_t>(degree - min_degree_)];
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& r) {
  if (r.is_zero()) return *this;
  if (is_zero()) return *this = r;
  int lo = std::min(min_degree_, r.min_degree_);
  int hi = std::max(max_degree(), r.max_degree());
  if (lo < min_degree_) {
    coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_degree_ - lo), BigInt(0));
    min_degree_ = lo;
  }
  coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
  auto offset = static_cast<std::size_t>(r.min_degree_ - lo);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) coeffs_[offset + i] += r.coeffs_[i];
  canonicalize();
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& r) { return *this += -r; }

LaurentPoly operator*(const LaurentPoly& p, const LaurentPoly& r) {
  if (p.is_zero() || r.is_zero()) return {};
  std::vector<BigInt> out(p.coeffs_.size() + r.coeffs_.size() - 1);
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    if (p.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < r.coeffs_.size(); ++j) {
      mpz_addmul(out[i + j].get_mpz_t(), p.coeffs_[i].get_mpz_t(), r.coeffs_[j].get_mpz_t());
    }
  }
  return LaurentPoly(p.min_degree_ + r.min_degree_, std::move(out));
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& r) { return *this = *this * r; }

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r = *this;
  if (!r.is_zero()) r.min_degree_ += k;
  return r;
}

BigInt LaurentPoly::eval_at_one() const {
  BigInt s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

bool LaurentPoly::nonnegative_coefficients() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return c >= 0; });
}

namespace {

constexpr std::uint64_t kFnvOffset = 14695981039346656037ULL;
constexpr std::uint64_t kFnvPrime = 1099511628211ULL;

void fnv_mix(std::uint64_t& h, std::uint8_t byte) {
  h ^= byte;
  h *= kFnvPrime;
}

void fnv_mix_u64(std::uint64_t& h, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) fnv_mix(h, static_cast<std::uint8_t>(v >> (8 * i)));
}

}  // namespace

std::uint64_t LaurentPoly::content_hash() const {
  std::uint64_t h = kFnvOffset;
  fnv_mix_u64(h, static_cast<std::uint64_t>(static_cast<std::int64_t>(min_degree_)));
  fnv_mix_u64(h, coeffs_.size());
  std::vector<std::uint8_t> buf;
  for (const auto& c : coeffs_) {
    std::size_t nbytes = (mpz_sizeinbase(c.get_mpz_t(), 2) + 7) / 8;
    buf.resize(nbytes);
    std::size_t written = 0;
    mpz_export(buf.data(), &written, 1, 1, 1, 0, c.get_mpz_t());
    fnv_mix(h, static_cast<std::uint8_t>(sgn(c) + 1));
    fnv_mix_u64(h, written);
    for (std::size_t i = 0; i < written; ++i) fnv_mix(h, buf[i]);
  }
  return h;
}

std::string LaurentPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const BigInt& c = coeffs_[i];
    if (c == 0) continue;
    int e = min_degree_ + static_cast<int>(i);
    BigInt mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0 || mag != 1) os << mag.get_str();
    if (e != 0) {
      os << "q";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

bool operator==(const LaurentPoly& p, const LaurentPoly& r) {
  return p.min_degree_ == r.min_degree_ && p.coeffs_ == r.coeffs_;
}

std::strong_ordering operator<=>(const LaurentPoly& p, const LaurentPoly& r) {
  if (auto c = p.min_degree_ <=> r.min_degree_; c != 0) return c;
  if (auto c = p.coeffs_.size() <=> r.coeffs_.size(); c != 0) return c;
  for (std::size_t i = 0; i < p.coeffs_.size(); ++i) {
    int c = cmp(p.coeffs_[i], r.coeffs_[i]);
    if (c != 0) return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

}  // namespace qmarkoff
