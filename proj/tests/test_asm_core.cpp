#include "fixtures.hpp"
#include "oracles.hpp"

#include <asmprism/asm.hpp>
#include <asmprism/error.hpp>
#include <asmprism/perm.hpp>

#include <doctest.h>

#include <random>

using namespace asmprism;
using namespace fixtures;

namespace {

std::vector<GridCell> cells(std::initializer_list<GridCell> c) { return c; }

}  // namespace

TEST_CASE("validate_asm accepts ASMs") {
  CHECK_NOTHROW(validate_asm({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));
  CHECK_NOTHROW(diagram_example());
}

TEST_CASE("validate_asm reports the offending line") {
  try {
    validate_asm({{1, -1}, {-1, 1}});
    FAIL("accepted");
  } catch (const ValidationError& e) {
    CHECK(e.axis() == ValidationError::Axis::row);
    CHECK(e.index() == 1);
  }
  try {
    validate_asm({{1, 0, 0}, {0, 2, 0}, {0, 0, 1}});
    FAIL("accepted");
  } catch (const ValidationError& e) {
    CHECK(e.index() == 2);
  }
  try {
    // Column 2 holds two consecutive 1s.
    validate_asm({{0, 1, 0}, {1, 1, -1}, {0, -1, 1}});
    FAIL("accepted");
  } catch (const ValidationError& e) {
    CHECK(e.index() >= 1);
  }
  CHECK_THROWS_AS(IntMatrix::from_rows({{1, 0}, {0}}), ValidationError);
}

TEST_CASE("corner_sum") {
  CHECK(corner_sum(Asm::identity(2)).values() == IntMatrix{{1, 1}, {1, 2}});
  CHECK(corner_sum(diagram_example()).values() == IntMatrix{{0, 0, 0, 1}, {0, 1, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 4}});
  CHECK(corner_sum(deg_example()).values() == IntMatrix{{0, 0, 1, 1}, {0, 1, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 4}});
}

TEST_CASE("asm_from_corner_sum") {
  CHECK(asm_from_corner_sum(CornerSum(IntMatrix{{1, 1}, {1, 2}})) == Asm::identity(2));
  CHECK(asm_from_corner_sum(corner_sum(diagram_example())) == diagram_example());
  CHECK(asm_from_corner_sum(CornerSum(IntMatrix{{0, 0, 1, 1}, {0, 0, 1, 2}, {1, 1, 2, 3}, {1, 2, 3, 4}})) ==
        Perm{3, 4, 1, 2}.matrix());
  CHECK_THROWS_AS(asm_from_corner_sum(CornerSum(IntMatrix{{0, 1}, {1, 1}})), ValidationError);
  CHECK_THROWS_AS(asm_from_corner_sum(CornerSum(IntMatrix{{2, 2}, {2, 2}})), ValidationError);
}

TEST_CASE("asm_leq") {
  const Asm a = deg_example();
  CHECK(asm_leq(a, a));
  CHECK(asm_leq(a, Perm{3, 4, 1, 2}.matrix()));
  for (const auto& b : enumerate_asms(4)) CHECK(asm_leq(Asm::identity(4), b));
}

TEST_CASE("join and meet") {
  const Asm a = diagram_example();
  CHECK(asm_join(a, Asm::identity(4)) == a);
  CHECK(asm_join(a, a) == a);
  const Asm j = asm_join(Perm{3, 1, 2, 4}.matrix(), Perm{1, 4, 2, 3}.matrix());
  CHECK(j == noneqi_example());
  CHECK(inversions(j) == cells({{1, 1}, {1, 2}, {2, 3}}));
  auto universe = enumerate_asms(4);
  CHECK(oracle::join_by_search(universe, Perm{3, 1, 2, 4}.matrix(), Perm{1, 4, 2, 3}.matrix()) == j);
}

TEST_CASE("inversions and Rothe diagram") {
  CHECK(inversions(Asm::identity(3)).empty());
  CHECK(rothe_diagram(diagram_example()) == cells({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {3, 2}}));
  CHECK(inversions(Perm{3, 4, 1, 2}.matrix()) == cells({{1, 1}, {1, 2}, {2, 1}, {2, 2}}));
}

TEST_CASE("essential_set") {
  CHECK(essential_set(Asm::identity(4)).empty());
  CHECK(essential_set(diagram_example()) == cells({{1, 3}, {2, 1}, {3, 2}}));
  CHECK(essential_set(noneqi_example()) == cells({{1, 2}, {2, 3}}));
  const CornerSum r = corner_sum(diagram_example());
  CHECK(r(1, 3) == 0);
  CHECK(r(2, 1) == 0);
  CHECK(r(3, 2) == 1);
}

TEST_CASE("monotone_triangle") {
  using Rows = std::vector<std::vector<int>>;
  CHECK(monotone_triangle(triangle_example()).rows == Rows{{3}, {1, 4}, {1, 3, 4}, {1, 2, 3, 4}});
  CHECK(monotone_triangle(Asm::identity(3)).rows == Rows{{1}, {1, 2}, {1, 2, 3}});
  CHECK(monotone_triangle(diagram_example()).rows == Rows{{4}, {2, 4}, {1, 3, 4}, {1, 2, 3, 4}});
  CHECK_THROWS_AS(asm_from_triangle(MonotoneTriangle{{{2}, {3, 4}, {1, 2, 3}}}), ValidationError);
}

TEST_CASE("lambda_row") {
  for (int l = 1; l <= 4; ++l) CHECK(lambda_row(Asm::identity(4), l).empty());
  CHECK(lambda_row(diagram_example(), 1) == Partition{3});
  CHECK(lambda_row(diagram_example(), 2) == Partition{2, 1});
  CHECK(lambda_row(diagram_example(), 3) == Partition{1, 1});
}

TEST_CASE("enumerate_asms") {
  CHECK(enumerate_asms(1).size() == 1);
  CHECK(enumerate_asms(3).size() == 7);
  CHECK(enumerate_asms(4).size() == 42);
  for (int n = 1; n <= 5; ++n) CHECK(enumerate_asms(n).size() == asm_count_formula(n));
  CHECK(asm_count_formula(6) == 7436);
}

TEST_CASE("enumeration agrees with brute force over {-1,0,1} matrices") {
  for (int n = 1; n <= 3; ++n) {
    auto ours = enumerate_asms(n);
    std::sort(ours.begin(), ours.end());
    CHECK(ours == oracle::asms_by_brute_force(n));
  }
}

TEST_CASE("enumeration order is lexicographic on triangles") {
  auto all = enumerate_asms(4);
  for (std::size_t k = 1; k < all.size(); ++k) {
    std::vector<int> a, b;
    for (const auto& r : monotone_triangle(all[k - 1]).rows) a.insert(a.end(), r.begin(), r.end());
    for (const auto& r : monotone_triangle(all[k]).rows) b.insert(b.end(), r.begin(), r.end());
    CHECK(a < b);
  }
}

TEST_CASE("embed") {
  CHECK(embed(Asm::identity(2)).entries() == Asm::identity(3).entries());
  const Asm a = diagram_example();
  CHECK(inversions(embed(a)) == inversions(a));
  const CornerSum r = corner_sum(embed(a));
  for (int i = 1; i <= 5; ++i) CHECK(r(i, 5) == i);
  CHECK(embed(a) == a);
}

TEST_CASE("canonical_completion") {
  const Asm a = diagram_example();
  CHECK(canonical_completion(PartialAsm::from_asm(a)).entries() == a.entries());
  const PartialAsm p = validate_partial_asm({{0, 0, 0}, {0, 1, 0}, {1, -1, 0}});
  CHECK(canonical_completion(p).entries() ==
        IntMatrix{{0, 0, 0, 1, 0}, {0, 1, 0, 0, 0}, {1, -1, 0, 0, 1}, {0, 1, 0, 0, 0}, {0, 0, 1, 0, 0}});
  CHECK(canonical_completion(validate_partial_asm({{0}})).entries() == IntMatrix{{0, 1}, {1, 0}});
}

TEST_CASE("property: partial ASM order through completions matches corner sums") {
  std::vector<PartialAsm> partials;
  for (int code = 0; code < 19683; ++code) {
    int c = code;
    IntMatrix m(3);
    for (int k = 0; k < 9; ++k) {
      m(k / 3 + 1, k % 3 + 1) = c % 3 - 1;
      c /= 3;
    }
    try {
      partials.push_back(validate_partial_asm(m));
    } catch (const ValidationError&) {
    }
  }
  REQUIRE(partials.size() > 50);
  std::mt19937 rng(3);
  std::uniform_int_distribution<std::size_t> pick(0, partials.size() - 1);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& p = partials[pick(rng)];
    const auto& q = partials[pick(rng)];
    const Asm cp = canonical_completion(p);
    const Asm cq = canonical_completion(q);
    CHECK(cp.size() <= 6);
    CHECK(asm_leq(cp, cq) == corner_sum(p).dominates(corner_sum(q)));
  }
}

TEST_CASE("asm_from_rank_conditions") {
  RankConditions none(4, std::vector<std::optional<int>>(4));
  CHECK(asm_from_rank_conditions(none) == PartialAsm::from_asm(Asm::identity(4)));

  RankConditions one = none;
  one[0][1] = 0;
  CHECK(asm_from_rank_conditions(one) == PartialAsm::from_asm(Perm{3, 1, 2, 4}.matrix()));

  RankConditions two = one;
  two[1][2] = 1;
  CHECK(asm_from_rank_conditions(two) == PartialAsm::from_asm(noneqi_example()));

  RankConditions vacuous = none;
  vacuous[1][1] = 2;
  CHECK(asm_from_rank_conditions(vacuous) == PartialAsm::from_asm(Asm::identity(4)));
}

TEST_CASE("property: rank conditions and their canonical form cut out the same locus") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> bit(0, 3);
  std::uniform_int_distribution<int> where(1, 4), bound(0, 3);
  for (int trial = 0; trial < 30; ++trial) {
    RankConditions r(4, std::vector<std::optional<int>>(4));
    for (int k = 0; k < 3; ++k) r[static_cast<std::size_t>(where(rng) - 1)][static_cast<std::size_t>(where(rng) - 1)] = bound(rng);
    const CornerSum canon = corner_sum(asm_from_rank_conditions(r));
    for (int sample = 0; sample < 200; ++sample) {
      std::vector<std::vector<long long>> m(4, std::vector<long long>(4));
      for (auto& row : m) {
        for (auto& v : row) v = bit(rng) == 0 ? 1 : 0;
      }
      bool by_r = true;
      bool by_canon = true;
      for (int i = 1; i <= 4; ++i) {
        for (int j = 1; j <= 4; ++j) {
          const int rk = oracle::northwest_rank(m, i, j);
          const auto& v = r[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)];
          if (v && rk > *v) by_r = false;
          if (rk > canon(i, j)) by_canon = false;
        }
      }
      CHECK(by_r == by_canon);
    }
  }
}

TEST_CASE("property: corner sum round trip over ASM(4)") {
  for (const auto& a : enumerate_asms(4)) {
    const CornerSum r = corner_sum(a);
    CHECK(r.has_full_margins());
    CHECK(r.has_unit_steps());
    CHECK(asm_from_corner_sum(r) == a);
  }
}

TEST_CASE("property: lattice axioms on ASM(4)") {
  const auto all = enumerate_asms(4);
  for (const auto& a : all) {
    CHECK(asm_join(a, a) == a);
    CHECK(asm_meet(a, a) == a);
    for (const auto& b : all) {
      const Asm j = asm_join(a, b);
      const Asm m = asm_meet(a, b);
      CHECK(j == asm_join(b, a));
      CHECK(m == asm_meet(b, a));
      CHECK(asm_join(a, asm_meet(a, b)) == a);
      CHECK(asm_meet(a, asm_join(a, b)) == a);
      const CornerSum lo = corner_sum(a).entrywise_min(corner_sum(b));
      CHECK(lo.has_unit_steps());
      CHECK(lo.has_full_margins());
    }
  }
  std::mt19937 rng(1);
  std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
  for (int t = 0; t < 500; ++t) {
    const auto& a = all[pick(rng)];
    const auto& b = all[pick(rng)];
    const auto& c = all[pick(rng)];
    CHECK(asm_join(asm_join(a, b), c) == asm_join(a, asm_join(b, c)));
    CHECK(asm_meet(asm_meet(a, b), c) == asm_meet(a, asm_meet(b, c)));
  }
}

TEST_CASE("property: join agrees with the least upper bound found by search on ASM(3)") {
  const auto all = enumerate_asms(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      CHECK(oracle::join_by_search(all, a, b) == asm_join(a, b));
      CHECK(oracle::meet_by_search(all, {a, b}) == asm_meet(a, b));
    }
  }
}

TEST_CASE("property: diagram and essential set characterizations on ASM(4)") {
  for (const auto& a : enumerate_asms(4)) {
    CHECK(essential_set(a) == essential_set_by_rank(a));
    const CornerSum r = corner_sum(a);
    GridSet d(4, inversions(a));
    for (int i = 1; i <= 4; ++i) {
      for (int j = 1; j <= 4; ++j) {
        const bool by_rank = r(i, j) == r(i - 1, j) && r(i, j) == r(i, j - 1);
        CHECK(d.contains({i, j}) == by_rank);
      }
    }
  }
}

TEST_CASE("property: monotone triangles determine corner sums on ASM(4)") {
  for (const auto& a : enumerate_asms(4)) {
    const auto t = monotone_triangle(a);
    CHECK(corner_sum_from_triangle(t) == corner_sum(a));
    CHECK(asm_from_triangle(t) == a);
  }
}

TEST_CASE("property: embed is an order embedding on ASM(3)") {
  const auto all = enumerate_asms(3);
  for (const auto& a : all) {
    for (const auto& b : all) {
      CHECK(asm_leq(a, b) == asm_leq(embed(a), embed(b)));
      CHECK(asm_leq(a, b) == asm_leq(a.embedded(3), b.embedded(3)));
      CHECK(corner_sum(embed(a)).dominates(corner_sum(embed(b))) == asm_leq(a, b));
    }
  }
}
