#pragma once

#include "asmprism/asm.hpp"
#include "asmprism/partition.hpp"
#include "asmprism/polynomial.hpp"

#include <compare>
#include <functional>
#include <string>
#include <vector>

namespace asmprism {

// Reverse semistandard tableau of shape lambda with labels in [depth],
// placed in the grid so that grid row a holds lambda_{depth-a+1} cells.
// Rows weakly decrease left to right; columns strictly decrease bottom to top.
class Rssyt {
 public:
  Rssyt() = default;
  // rows[k] is the filling of partition row k+1, i.e. grid row depth-k.
  // Throws ValidationError if the filling is not reverse semistandard.
  Rssyt(Partition shape, int depth, std::vector<std::vector<int>> rows);

  const Partition& shape() const noexcept { return shape_; }
  int depth() const noexcept { return depth_; }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }

  bool occupies(int grid_row, int grid_col) const noexcept;
  // Label at a grid cell; the cell must be occupied.
  int at(int grid_row, int grid_col) const;
  // Occupied cells in row-major grid order.
  std::vector<GridCell> cells() const;

  // Would setting the cell to `label` keep the tableau reverse semistandard?
  bool accepts(int grid_row, int grid_col, int label) const;
  Rssyt with_label(int grid_row, int grid_col, int label) const;

  bool entrywise_leq(const Rssyt& o) const;

  friend auto operator<=>(const Rssyt&, const Rssyt&) = default;

 private:
  friend std::vector<Rssyt> enumerate_rssyt(const Partition& shape, int depth);
  struct Unchecked {};
  Rssyt(Unchecked, Partition shape, int depth, std::vector<std::vector<int>> rows)
      : shape_(std::move(shape)), depth_(depth), rows_(std::move(rows)) {}

  Partition shape_;
  int depth_ = 0;
  std::vector<std::vector<int>> rows_;
};

// (lambda^{(1)}, ..., lambda^{(k)}) with depths (d_1, ..., d_k),
// d_i >= length(lambda^{(i)}).
struct PrismShapeSpec {
  std::vector<Partition> lambdas;
  std::vector<int> depths;

  std::size_t num_components() const noexcept { return lambdas.size(); }
  // Throws ValidationError on a length mismatch or a too-short depth.
  void validate() const;
  // Smallest n with every lambda^{(i)} inside d_i x (n - d_i).
  int ambient_size() const;
  // "((3),(2,1),(1,1)) / (1,2,3)"
  std::string to_string() const;

  friend auto operator<=>(const PrismShapeSpec&, const PrismShapeSpec&) = default;
};

// One Rssyt per component; color i is component i (1-based).
struct PrismTableau {
  std::vector<Rssyt> components;

  bool entrywise_leq(const PrismTableau& o) const;
  // Per color, grid rows with their labels.
  std::string render() const;
  friend auto operator<=>(const PrismTableau&, const PrismTableau&) = default;
};

// How an unstable triple {l_c, l_d, l'_e} treats the colors c and d.
enum class TripleRule {
  distinct_colors,  // l must appear in two different colors
  any_colors,       // c = d allowed: a lone l_c next to a larger l' suffices
};

std::vector<Rssyt> enumerate_rssyt(const Partition& shape, int depth);
std::size_t count_rssyt(const Partition& shape, int depth);

// Cartesian product of the component RSSYT sets, first component slowest.
void for_each_prism_tableau(const PrismShapeSpec& spec, const std::function<void(const PrismTableau&)>& visit);
std::vector<PrismTableau> enumerate_all_prism(const PrismShapeSpec& spec);

// Cell (i,j) lies on antidiagonal i+j-1.
inline int antidiagonal_of(int grid_row, int grid_col) { return grid_row + grid_col - 1; }

// prod x_i^{n_i}, n_i = number of antidiagonals carrying label i in any color.
Monomial prism_weight(const PrismTableau& t);

bool has_unstable_triple(const PrismTableau& t, TripleRule rule = TripleRule::distinct_colors);

// Minimum total degree of prism_weight over AllPrism(spec).
unsigned prism_degree(const PrismShapeSpec& spec);

// Minimal tableaux without unstable triples.
std::vector<PrismTableau> prism_set(const PrismShapeSpec& spec, TripleRule rule = TripleRule::distinct_colors);
// Sum of weights over prism_set.
Polynomial asm_polynomial(const PrismShapeSpec& spec, TripleRule rule = TripleRule::distinct_colors);

// Rectangles (i - r) x (j - r) over the essential cells, depths i.
PrismShapeSpec bigrassmannian_model(const Asm& a);
// lambda^{(A,i)} over the distinct essential rows i, depths i.
PrismShapeSpec parabolic_model(const Asm& a);

// A_{spec} in ASM(n); n = 0 selects spec.ambient_size().
Asm asm_of_spec(const PrismShapeSpec& spec, int n = 0);

}  // namespace asmprism
