#pragma once

#include <asmprism/asm.hpp>
#include <asmprism/prism.hpp>

namespace fixtures {

using namespace asmprism;

// 4x4 ASM with diagram {(1,1),(1,2),(1,3),(2,1),(3,2)}.
inline Asm diagram_example() { return validate_asm({{0, 0, 0, 1}, {0, 1, 0, 0}, {1, -1, 1, 0}, {0, 1, 0, 0}}); }

// 4x4 ASM with essential set {(1,2),(2,3)}, the join of 3124 and 1423.
inline Asm noneqi_example() { return validate_asm({{0, 0, 1, 0}, {1, 0, -1, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}}); }

// The ASM whose corner sums are given directly, deg 4 with a 5-cell diagram.
inline Asm deg_example() {
  return asm_from_corner_sum(CornerSum(IntMatrix{{0, 0, 1, 1}, {0, 1, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 4}}));
}

inline Asm triangle_example() { return validate_asm({{0, 0, 1, 0}, {1, 0, -1, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}}); }

inline PrismShapeSpec prism_example_spec() {
  return {{Partition{1}, Partition{3, 2}, Partition{2, 1, 1}}, {2, 5, 6}};
}

// Component fillings listed bottom row first.
inline PrismTableau prism_example_tableau() {
  return {{Rssyt(Partition{1}, 2, {{1}}), Rssyt(Partition{3, 2}, 5, {{3, 3, 2}, {1, 1}}),
           Rssyt(Partition{2, 1, 1}, 6, {{6, 3}, {2}, {1}})}};
}

}  // namespace fixtures
