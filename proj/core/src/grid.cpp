#include "asmprism/grid.hpp"

#include "asmprism/error.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace asmprism {

std::string to_string(const GridCell& c) {
  std::ostringstream os;
  os << '(' << c.row << ',' << c.col << ')';
  return os.str();
}

namespace {

void check_size(int n) {
  if (n < 0 || n > GridSet::max_size) {
    throw ValidationError("grid size " + std::to_string(n) + " outside 0..8");
  }
}

}  // namespace

GridSet::GridSet(int n) : n_(n) { check_size(n); }

GridSet::GridSet(int n, std::uint64_t mask) : n_(n), mask_(mask) {
  check_size(n);
  if (n < 8) mask_ &= (std::uint64_t{1} << (n * n)) - 1;
}

GridSet::GridSet(int n, const std::vector<GridCell>& cells) : GridSet(n) {
  for (const auto& c : cells) insert(c);
}

GridSet GridSet::full(int n) {
  check_size(n);
  return GridSet(n, ~std::uint64_t{0});
}

int GridSet::count() const noexcept { return std::popcount(mask_); }

bool GridSet::contains(GridCell c) const {
  if (c.row < 1 || c.col < 1 || c.row > n_ || c.col > n_) return false;
  return (mask_ >> bit(c)) & 1U;
}

void GridSet::insert(GridCell c) {
  if (c.row < 1 || c.col < 1 || c.row > n_ || c.col > n_) {
    throw ValidationError("cell " + to_string(c) + " outside the " + std::to_string(n_) + "x" +
                          std::to_string(n_) + " grid");
  }
  mask_ |= std::uint64_t{1} << bit(c);
}

void GridSet::erase(GridCell c) {
  if (contains(c)) mask_ &= ~(std::uint64_t{1} << bit(c));
}

std::vector<GridCell> GridSet::cells() const {
  std::vector<GridCell> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    int b = std::countr_zero(m);
    out.push_back({b / n_ + 1, b % n_ + 1});
  }
  return out;
}

std::vector<int> GridSet::row_counts() const {
  std::vector<int> out(static_cast<std::size_t>(n_), 0);
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) ++out[static_cast<std::size_t>(std::countr_zero(m) / n_)];
  return out;
}

GridSet GridSet::complement() const { return GridSet(n_, ~mask_); }

GridSet GridSet::operator|(const GridSet& o) const { return GridSet(std::max(n_, o.n_), mask_ | o.mask_); }
GridSet GridSet::operator&(const GridSet& o) const { return GridSet(std::max(n_, o.n_), mask_ & o.mask_); }

std::string GridSet::render() const {
  std::string s;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) s += contains({i, j}) ? '+' : '.';
    s += '\n';
  }
  return s;
}

std::strong_ordering operator<=>(const GridSet& a, const GridSet& b) {
  if (a.n_ != b.n_) return a.n_ <=> b.n_;
  // Lexicographic on the ascending list of set bits. Below the lowest
  // differing bit the lists agree; the set holding that bit is smaller unless
  // the other list ends there (a proper prefix).
  std::uint64_t diff = a.mask_ ^ b.mask_;
  if (diff == 0) return std::strong_ordering::equal;
  std::uint64_t low = diff & (~diff + 1);
  std::uint64_t above = ~((low << 1) - 1);
  if (a.mask_ & low) return (b.mask_ & above) ? std::strong_ordering::less : std::strong_ordering::greater;
  return (a.mask_ & above) ? std::strong_ordering::greater : std::strong_ordering::less;
}

}  // namespace asmprism
