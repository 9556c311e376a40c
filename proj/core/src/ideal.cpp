#include "asmprism/ideal.hpp"

#include "asmprism/error.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

namespace asmprism {

std::string MinorSpec::to_string() const {
  std::ostringstream os;
  auto var = [&](int r, int c) { os << "z[" << r << "][" << c << "]"; };
  if (order() == 1) {
    var(rows.front(), cols.front());
    return os.str();
  }
  os << '|';
  for (std::size_t a = 0; a < rows.size(); ++a) {
    if (a > 0) os << "; ";
    for (std::size_t b = 0; b < cols.size(); ++b) {
      if (b > 0) os << ' ';
      var(rows[a], cols[b]);
    }
  }
  os << '|';
  return os.str();
}

std::string SquareFreeMonomial::to_string() const {
  if (support.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const auto& c : support.cells()) {
    os << (first ? "" : "*") << "z[" << c.row << "][" << c.col << "]";
    first = false;
  }
  return os.str();
}

namespace {

// k-subsets of [m] in lexicographic order.
std::vector<std::vector<int>> subsets(int m, int k) {
  std::vector<std::vector<int>> out;
  if (k < 0 || k > m) return out;
  std::vector<int> cur(static_cast<std::size_t>(k));
  for (int t = 0; t < k; ++t) cur[static_cast<std::size_t>(t)] = t + 1;
  for (;;) {
    out.push_back(cur);
    int t = k - 1;
    while (t >= 0 && cur[static_cast<std::size_t>(t)] == m - k + t + 1) --t;
    if (t < 0) break;
    ++cur[static_cast<std::size_t>(t)];
    for (int u = t + 1; u < k; ++u) cur[static_cast<std::size_t>(u)] = cur[static_cast<std::size_t>(u - 1)] + 1;
  }
  return out;
}

void append_minors(std::vector<MinorSpec>& out, GridCell region, int order) {
  for (const auto& r : subsets(region.row, order)) {
    for (const auto& c : subsets(region.col, order)) out.push_back({r, c, region});
  }
}

}  // namespace

std::vector<MinorSpec> essential_generators(const Asm& a) {
  const CornerSum r = corner_sum(a);
  std::vector<MinorSpec> out;
  for (const auto& c : essential_set(a)) append_minors(out, c, r(c.row, c.col) + 1);
  return out;
}

std::vector<MinorSpec> defining_generators(const Asm& a) {
  const CornerSum r = corner_sum(a);
  std::vector<MinorSpec> out;
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= a.size(); ++j) {
      if (r(i, j) < std::min(i, j)) append_minors(out, {i, j}, r(i, j) + 1);
    }
  }
  return out;
}

SquareFreeMonomial antidiagonal_init(const MinorSpec& m, int n) {
  if (m.rows.size() != m.cols.size() || m.rows.empty()) throw ValidationError("minor must be square and nonempty");
  GridSet s(n);
  const std::size_t k = m.rows.size();
  for (std::size_t t = 0; t < k; ++t) s.insert({m.rows[t], m.cols[k - 1 - t]});
  return {s};
}

std::vector<SquareFreeMonomial> minimalize(std::vector<SquareFreeMonomial> gens) {
  std::sort(gens.begin(), gens.end(), [](const SquareFreeMonomial& x, const SquareFreeMonomial& y) {
    if (x.support.count() != y.support.count()) return x.support.count() < y.support.count();
    return x < y;
  });
  std::vector<SquareFreeMonomial> kept;
  for (const auto& g : gens) {
    bool redundant = std::any_of(kept.begin(), kept.end(),
                                 [&](const SquareFreeMonomial& h) { return h.support.is_subset_of(g.support); });
    if (!redundant) kept.push_back(g);
  }
  std::sort(kept.begin(), kept.end());
  return kept;
}

namespace {

std::vector<SquareFreeMonomial> antidiagonals(const std::vector<MinorSpec>& minors, int n) {
  std::vector<SquareFreeMonomial> out;
  out.reserve(minors.size());
  for (const auto& m : minors) out.push_back(antidiagonal_init(m, n));
  return minimalize(std::move(out));
}

// Minimal transversals of a family of edges (bitmasks), by branching on the
// first edge the partial transversal misses. A branch is cut as soon as some
// chosen element has no private edge among the edges hit so far, since
// private edges are only ever lost as the set grows.
class TransversalSearch {
 public:
  explicit TransversalSearch(std::vector<std::uint64_t> edges) : edges_(std::move(edges)) {}

  std::set<std::uint64_t> run() {
    if (std::any_of(edges_.begin(), edges_.end(), [](std::uint64_t e) { return e == 0; })) return {};
    branch(0);
    return found_;
  }

 private:
  bool all_private(std::uint64_t h) const {
    for (std::uint64_t m = h; m != 0; m &= m - 1) {
      const std::uint64_t x = m & (~m + 1);
      bool has = false;
      for (std::uint64_t e : edges_) {
        if ((e & h) == x) {
          has = true;
          break;
        }
      }
      if (!has) return false;
    }
    return true;
  }

  void branch(std::uint64_t h) {
    auto missed = std::find_if(edges_.begin(), edges_.end(), [&](std::uint64_t e) { return (e & h) == 0; });
    if (missed == edges_.end()) {
      found_.insert(h);
      return;
    }
    for (std::uint64_t m = *missed; m != 0; m &= m - 1) {
      const std::uint64_t next = h | (m & (~m + 1));
      if (all_private(next)) branch(next);
    }
  }

  std::vector<std::uint64_t> edges_;
  std::set<std::uint64_t> found_;
};

}  // namespace

std::vector<SquareFreeMonomial> initial_ideal(const Asm& a) {
  return antidiagonals(essential_generators(a), a.size());
}

std::vector<SquareFreeMonomial> initial_ideal_from_all_minors(const Asm& a) {
  return antidiagonals(defining_generators(a), a.size());
}

SRComplexFacets stanley_reisner_facets(const std::vector<SquareFreeMonomial>& gens, int n) {
  std::vector<std::uint64_t> edges;
  for (const auto& g : gens) {
    if (g.support.size() != n) throw ValidationError("generator lives on a different grid size");
    edges.push_back(g.support.mask());
  }
  SRComplexFacets out;
  out.n = n;
  const GridSet full = GridSet::full(n);
  for (std::uint64_t t : TransversalSearch(std::move(edges)).run()) out.facets.push_back(GridSet(n, full.mask() & ~t));
  std::sort(out.facets.begin(), out.facets.end());
  return out;
}

std::vector<GridSet> max_dimensional(const SRComplexFacets& c) {
  int best = -1;
  for (const auto& f : c.facets) best = std::max(best, f.count());
  std::vector<GridSet> out;
  for (const auto& f : c.facets) {
    if (f.count() == best) out.push_back(f);
  }
  return out;
}

Polynomial multidegree(const Asm& a) {
  const auto facets = stanley_reisner_facets(initial_ideal(a), a.size());
  Polynomial p;
  for (const auto& f : max_dimensional(facets)) {
    std::vector<unsigned> e;
    for (int c : f.complement().row_counts()) e.push_back(static_cast<unsigned>(c));
    p.add_term(Monomial(std::move(e)), 1);
  }
  return p;
}

}  // namespace asmprism
