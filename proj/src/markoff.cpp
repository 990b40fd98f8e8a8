#include "qmarkoff/markoff.hpp"

#include <algorithm>
#include <stdexcept>

namespace qmarkoff {

bool is_markoff_solution(const BigInt& x, const BigInt& y, const BigInt& z) {
  return x * x + y * y + z * z == 3 * x * y * z;
}

MarkoffTriple::MarkoffTriple(BigInt x, BigInt y, BigInt z) : x_(std::move(x)), y_(std::move(y)), z_(std::move(z)) {
  if (x_ <= 0 || y_ <= 0 || z_ <= 0) throw std::invalid_argument("Markoff triple entries must be positive");
  if (y_ < x_ || y_ < z_) throw std::invalid_argument("Markoff triple must have its maximum in the middle");
  if (!is_markoff_solution(x_, y_, z_)) {
    throw std::invalid_argument("(" + x_.get_str() + ", " + y_.get_str() + ", " + z_.get_str() +
                                ") does not satisfy x^2 + y^2 + z^2 = 3xyz");
  }
}

std::pair<MarkoffTriple, MarkoffTriple> MarkoffTriple::children() const {
  return {MarkoffTriple(x_, 3 * x_ * y_ - z_, y_), MarkoffTriple(y_, 3 * y_ * z_ - x_, z_)};
}

namespace {

void add_entries(const MarkoffTriple& t, std::vector<BigInt>& out) {
  out.push_back(t.x());
  out.push_back(t.y());
  out.push_back(t.z());
}

void sort_unique(std::vector<BigInt>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

}  // namespace

std::vector<BigInt> markoff_numbers(std::size_t depth) {
  std::vector<BigInt> out;
  std::vector<MarkoffTriple> level{markoff_root()};
  for (std::size_t d = 0;; ++d) {
    for (const auto& t : level) add_entries(t, out);
    if (d == depth) break;
    std::vector<MarkoffTriple> next;
    for (const auto& t : level) {
      auto [l, r] = t.children();
      next.push_back(std::move(l));
      next.push_back(std::move(r));
    }
    // (1,1,1) has two equal children; drop exact duplicates to avoid doubling work.
    next.erase(std::unique(next.begin(), next.end()), next.end());
    level = std::move(next);
  }
  sort_unique(out);
  return out;
}

std::vector<BigInt> markoff_numbers_up_to(const BigInt& bound) {
  std::vector<BigInt> out;
  if (bound < 1) return out;
  out.push_back(1);
  std::vector<MarkoffTriple> stack{MarkoffTriple(1, 2, 1)};
  while (!stack.empty()) {
    MarkoffTriple t = std::move(stack.back());
    stack.pop_back();
    if (t.y() > bound) continue;
    add_entries(t, out);
    auto [l, r] = t.children();
    stack.push_back(std::move(l));
    stack.push_back(std::move(r));
  }
  sort_unique(out);
  return out;
}

}  // namespace qmarkoff
