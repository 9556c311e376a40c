#pragma once

#include "asmprism/asm.hpp"
#include "asmprism/grid.hpp"
#include "asmprism/polynomial.hpp"

#include <string>
#include <vector>

namespace asmprism {

// The minor of the generic matrix Z on the given rows and columns, taken
// inside the northwest block Z_{[i],[j]} at `region`.
struct MinorSpec {
  std::vector<int> rows;  // increasing, subset of [region.row]
  std::vector<int> cols;  // increasing, subset of [region.col]
  GridCell region;

  int order() const noexcept { return static_cast<int>(rows.size()); }
  // "|z[1][1] z[1][3]; z[2][1] z[2][3]|", or "z[1][2]" for a 1 x 1 minor.
  std::string to_string() const;
  friend auto operator<=>(const MinorSpec&, const MinorSpec&) = default;
};

// Product of the variables z_ij over `support`.
struct SquareFreeMonomial {
  GridSet support;

  std::string to_string() const;
  friend auto operator<=>(const SquareFreeMonomial&, const SquareFreeMonomial&) = default;
};

// Facets of a Stanley-Reisner complex, sorted.
struct SRComplexFacets {
  int n = 0;
  std::vector<GridSet> facets;
};

// (r_A(i,j)+1)-minors of Z_{[i],[j]} over (i,j) in Ess(A).
std::vector<MinorSpec> essential_generators(const Asm& a);
// The same over every cell (i,j) with r_A(i,j) < min(i,j).
std::vector<MinorSpec> defining_generators(const Asm& a);

// Antidiagonal term: rows ascending paired with columns descending.
SquareFreeMonomial antidiagonal_init(const MinorSpec& m, int n);
// Drop supports that contain another support; sorted and deduplicated.
std::vector<SquareFreeMonomial> minimalize(std::vector<SquareFreeMonomial> gens);
// Antidiagonals of the essential generators, minimalized.
std::vector<SquareFreeMonomial> initial_ideal(const Asm& a);
// Antidiagonals of the defining generators, minimalized.
std::vector<SquareFreeMonomial> initial_ideal_from_all_minors(const Asm& a);

// Complements of the minimal transversals of the generator supports.
SRComplexFacets stanley_reisner_facets(const std::vector<SquareFreeMonomial>& gens, int n);
// Facets of maximum cardinality.
std::vector<GridSet> max_dimensional(const SRComplexFacets& c);

// Sum over maximal-dimension facets f of prod_{(i,j) not in f} x_i.
Polynomial multidegree(const Asm& a);

}  // namespace asmprism
