#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace asmprism {

// Matrix coordinates, 1-based.
struct GridCell {
  int row = 0;
  int col = 0;

  friend auto operator<=>(const GridCell&, const GridCell&) = default;
};

std::string to_string(const GridCell& c);

// A subset of the n x n grid stored as a 64-bit mask; bit (i-1)*n+(j-1)
// holds cell (i,j). Grids up to 8 x 8 are supported.
class GridSet {
 public:
  static constexpr int max_size = 8;

  GridSet() = default;
  explicit GridSet(int n);
  GridSet(int n, std::uint64_t mask);
  GridSet(int n, const std::vector<GridCell>& cells);

  static GridSet full(int n);

  int size() const noexcept { return n_; }
  std::uint64_t mask() const noexcept { return mask_; }
  int count() const noexcept;
  bool empty() const noexcept { return mask_ == 0; }

  bool contains(GridCell c) const;
  void insert(GridCell c);
  void erase(GridCell c);

  // Cells in row-major order.
  std::vector<GridCell> cells() const;

  // Number of cells in each row, index 0 is row 1.
  std::vector<int> row_counts() const;

  GridSet complement() const;
  bool is_subset_of(const GridSet& other) const noexcept { return (mask_ & ~other.mask_) == 0; }

  GridSet operator|(const GridSet& o) const;
  GridSet operator&(const GridSet& o) const;

  // n lines of '.'/'+'.
  std::string render() const;

  friend bool operator==(const GridSet&, const GridSet&) = default;
  // Lexicographic on the row-major cell list.
  friend std::strong_ordering operator<=>(const GridSet& a, const GridSet& b);

  int bit(GridCell c) const noexcept { return (c.row - 1) * n_ + (c.col - 1); }

 private:
  int n_ = 0;
  std::uint64_t mask_ = 0;
};

}  // namespace asmprism
