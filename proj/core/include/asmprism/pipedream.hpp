#pragma once

#include "asmprism/asm.hpp"
#include "asmprism/grid.hpp"
#include "asmprism/perm.hpp"
#include "asmprism/polynomial.hpp"
#include "asmprism/prism.hpp"

#include <optional>
#include <string>
#include <vector>

namespace asmprism {

// A plus diagram P, a subset of the n x n grid, identified with the subword
// of the square word Q_{n x n} at its cells. The face it names is Q - P.
using PlusDiagram = GridSet;

// Q_{n x n} = s_n ... s_1  s_{n+1} ... s_2  ...  s_{2n-1} ... s_n. Cell (i,j)
// carries s_{i+j-1}; the word reads rows top to bottom, each right to left.
class SquareWord {
 public:
  explicit SquareWord(int n);

  int size() const noexcept { return n_; }
  const Word& word() const noexcept { return word_; }
  // Grid cells in word order.
  const std::vector<GridCell>& reading_order() const noexcept { return order_; }
  int letter_at(GridCell c) const noexcept { return c.row + c.col - 1; }
  // Letters of P in reading order.
  Word subword(const PlusDiagram& p) const;

 private:
  int n_;
  Word word_;
  std::vector<GridCell> order_;
};

// Cached per n.
const SquareWord& square_word(int n);

Perm diagram_demazure(const PlusDiagram& p);
Perm diagram_product(const PlusDiagram& p);
bool diagram_is_reduced(const PlusDiagram& p);

// prod x_i^{#pluses in row i}
Monomial diagram_weight(const PlusDiagram& p);

// Reduced plus diagrams for w in the n x n grid, sorted. Generated by ladder
// moves from the bottom pipe dream.
std::vector<PlusDiagram> pipe_dreams_of(const Perm& w, int n);
Polynomial schubert_polynomial(const Perm& w, int n);
// Divided differences down from x_1^{m-1} x_2^{m-2} ... x_{m-1}, m = size of w.
Polynomial schubert_oracle(const Perm& w);
// (f - s_i f) / (x_i - x_{i+1}).
Polynomial divided_difference(const Polynomial& f, int i);

// Facets of Delta(Q_{n x n}, A): pipe dreams of each w in Perm(A). Each
// entry is the plus diagram P of the facet Q - P.
std::vector<PlusDiagram> delta_facets(const Asm& a);
// The codimension-zero facets: pipe dreams of MinPerm(A).
std::vector<PlusDiagram> delta_fmax(const Asm& a);
// Is Q - P a face of Delta(Q_{n x n}, A), i.e. delta(P) >= A?
bool is_face(const PlusDiagram& p, const Asm& a);

// Union of the per-component diagrams, a plus at (T_ij, i+j-T_ij) per label.
PlusDiagram phi(const PrismTableau& t, int n);

struct BijectionReport {
  bool passed = true;
  int ambient_size = 0;
  std::size_t all_prism = 0;
  std::size_t facets = 0;
  std::size_t facet_tableaux = 0;
  std::size_t stable_facet_tableaux = 0;
  std::size_t fmax = 0;
  std::size_t prism = 0;
  std::string failure;                        // first failed check
  std::optional<PrismTableau> counterexample;  // tableau witnessing it, if any

  std::string summary() const;
};

// Checks, for A = A_spec in ASM(n) (n = 0 selects spec.ambient_size()):
//  * every Phi(T) is a face of Delta_A and Phi preserves weight;
//  * every facet of Delta_A is hit by Phi;
//  * each facet fiber has exactly one tableau without unstable triples, and it
//    is the fiber maximum;
//  * Phi maps Prism(spec) bijectively onto F_max(Delta_A).
BijectionReport verify_bijection(const PrismShapeSpec& spec, int n = 0,
                                 TripleRule rule = TripleRule::distinct_colors);

}  // namespace asmprism
