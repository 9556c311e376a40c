#pragma once

#include "asmprism/error.hpp"
#include "asmprism/grid.hpp"
#include "asmprism/partition.hpp"

#include <compare>
#include <functional>
#include <initializer_list>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace asmprism {

// Dense n x n integer matrix, 1-based accessors.
class IntMatrix {
 public:
  IntMatrix() = default;
  explicit IntMatrix(int n, int fill = 0);
  IntMatrix(std::initializer_list<std::initializer_list<int>> rows);
  // Throws ValidationError naming the first row of the wrong length.
  static IntMatrix from_rows(const std::vector<std::vector<int>>& rows);

  int size() const noexcept { return n_; }
  int operator()(int i, int j) const { return data_[index(i, j)]; }
  int& operator()(int i, int j) { return data_[index(i, j)]; }
  const std::vector<int>& data() const noexcept { return data_; }

  std::string to_string() const;

  friend auto operator<=>(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t index(int i, int j) const { return static_cast<std::size_t>((i - 1) * n_ + (j - 1)); }
  int n_ = 0;
  std::vector<int> data_;
};

class CornerSum;
struct MonotoneTriangle;

// Alternating sign matrix. Equality and ordering compare the minimal
// representatives under the block inclusion A -> diag(A, 1), so matrices of
// different declared sizes that represent the same class compare equal.
class Asm {
 public:
  Asm() = default;
  static Asm identity(int n);
  // One-line notation w(1..n), 1-based values.
  static Asm permutation_matrix(std::span<const int> one_line);

  int size() const noexcept { return m_.size(); }
  int operator()(int i, int j) const { return m_(i, j); }
  const IntMatrix& entries() const noexcept { return m_; }

  bool is_permutation() const;
  // Trailing diag(., 1) blocks stripped; size at least 1.
  Asm canonical() const;
  // Pad with trailing identity up to size N >= size().
  Asm embedded(int N) const;

  std::string to_string() const { return m_.to_string(); }

  friend bool operator==(const Asm& a, const Asm& b);
  friend std::strong_ordering operator<=>(const Asm& a, const Asm& b);

 private:
  friend Asm validate_asm(const IntMatrix& m);
  friend Asm asm_from_corner_sum(const CornerSum& r);
  friend Asm asm_from_triangle(const MonotoneTriangle& t);
  explicit Asm(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

// Partial ASM: entries in {-1,0,1}, every row/column has partial sums in
// {0,1}. Honest ASMs are the special case where every line sums to 1.
class PartialAsm {
 public:
  PartialAsm() = default;
  static PartialAsm from_asm(const Asm& a);

  int size() const noexcept { return m_.size(); }
  int operator()(int i, int j) const { return m_(i, j); }
  const IntMatrix& entries() const noexcept { return m_; }
  bool is_honest() const;

  std::string to_string() const { return m_.to_string(); }
  friend auto operator<=>(const PartialAsm&, const PartialAsm&) = default;

 private:
  friend PartialAsm validate_partial_asm(const IntMatrix& m);
  friend PartialAsm partial_asm_from_corner_sum(const CornerSum& r);
  explicit PartialAsm(IntMatrix m) : m_(std::move(m)) {}
  IntMatrix m_;
};

// r(i,j) = sum of the top-left i x j block, with r(0,j) = r(i,0) = 0
// answered without storage.
class CornerSum {
 public:
  CornerSum() = default;
  explicit CornerSum(IntMatrix values) : r_(std::move(values)) {}

  int size() const noexcept { return r_.size(); }
  int operator()(int i, int j) const { return (i == 0 || j == 0) ? 0 : r_(i, j); }
  const IntMatrix& values() const noexcept { return r_; }

  // Steps along rows and columns lie in {0,1} (R2).
  bool has_unit_steps() const;
  // r(i,n) = r(n,i) = i (R1).
  bool has_full_margins() const;

  CornerSum entrywise_min(const CornerSum& o) const;
  CornerSum entrywise_max(const CornerSum& o) const;
  // r >= o entrywise.
  bool dominates(const CornerSum& o) const;

  std::string to_string() const { return r_.to_string(); }
  friend auto operator<=>(const CornerSum&, const CornerSum&) = default;

 private:
  IntMatrix r_;
};

// Rows 1..n; row i holds i strictly increasing column indices.
struct MonotoneTriangle {
  std::vector<std::vector<int>> rows;

  int size() const noexcept { return static_cast<int>(rows.size()); }
  friend auto operator<=>(const MonotoneTriangle&, const MonotoneTriangle&) = default;
};

// --- validation and corner sums ------------------------------------------

// Throws ValidationError naming the offending row or column.
Asm validate_asm(const IntMatrix& m);
PartialAsm validate_partial_asm(const IntMatrix& m);

CornerSum corner_sum(const Asm& a);
CornerSum corner_sum(const PartialAsm& a);
// a_ij = r(i,j) - r(i,j-1) - r(i-1,j) + r(i-1,j-1). Requires R1 and R2.
Asm asm_from_corner_sum(const CornerSum& r);
// Requires R2 only.
PartialAsm partial_asm_from_corner_sum(const CornerSum& r);

// --- lattice ---------------------------------------------------------------

// A <= B iff r_A >= r_B entrywise; unequal sizes are compared after
// embedding both into the larger size.
bool asm_leq(const Asm& a, const Asm& b);
// Least upper bound: entrywise min of corner sums.
Asm asm_join(const Asm& a, const Asm& b);
// Greatest lower bound: entrywise max of corner sums.
Asm asm_meet(const Asm& a, const Asm& b);
// Join of a family inside ASM(n); the empty join is the identity.
Asm asm_join_all(std::span<const Asm> family, int n);

// --- diagrams ----------------------------------------------------------------

// Cells (i,j) with no 1 weight above in column j or left in row i.
std::vector<GridCell> inversions(const Asm& a);
inline std::vector<GridCell> rothe_diagram(const Asm& a) { return inversions(a); }
// Diagram cells whose south and east neighbours are outside the diagram.
std::vector<GridCell> essential_set(const Asm& a);
// The same set read off the corner sums:
// r(i,j) = r(i-1,j) = r(i,j-1) and r(i+1,j) = r(i,j+1) = r(i,j) + 1.
std::vector<GridCell> essential_set_by_rank(const Asm& a);

// --- monotone triangles ------------------------------------------------------

MonotoneTriangle monotone_triangle(const Asm& a);
// Inverse of monotone_triangle. Throws ValidationError on a malformed triangle.
Asm asm_from_triangle(const MonotoneTriangle& t);
// Corner sums rebuilt from the triangle: entry (i,k) is the k-th ascent of row i.
CornerSum corner_sum_from_triangle(const MonotoneTriangle& t);
// (m(l,l) - l, m(l,l-1) - (l-1), ..., m(l,1) - 1).
Partition lambda_row(const Asm& a, int row);

// --- enumeration -------------------------------------------------------------

// Every element of ASM(n) once, in lexicographic order of flattened
// monotone triangles.
void for_each_asm(int n, const std::function<void(const Asm&)>& visit);
std::vector<Asm> enumerate_asms(int n);
// prod_{j<n} (3j+1)! / (n+j)!
unsigned long long asm_count_formula(int n);

// --- inclusions, completion, rank conditions ---------------------------------

// diag(A, 1).
Asm embed(const Asm& a);
// Append a column for each zero-sum row (top to bottom), then a row for each
// zero-sum column (left to right). The result has size between n and 2n.
Asm canonical_completion(const PartialAsm& p);

// Rank bound matrix; std::nullopt means no condition at that cell.
using RankConditions = std::vector<std::vector<std::optional<int>>>;
// Join of the partial biGrassmannians [i,j,r_ij] over non-vacuous conditions
// (r_ij < min(i,j)); negative bounds are rejected.
PartialAsm asm_from_rank_conditions(const RankConditions& r);
// Corner sum of the partial biGrassmannian [i,j,r] restricted to n x n.
CornerSum partial_bigrassmannian_corner_sum(int i, int j, int r, int n);

}  // namespace asmprism
