#include "asmprism/prism.hpp"

#include "asmprism/error.hpp"
#include "asmprism/perm.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <sstream>

namespace asmprism {

// --- Rssyt -------------------------------------------------------------------------

namespace {

// Partition row (1-based) held by grid row a, or 0 when a is outside.
int partition_row(int depth, int grid_row) { return depth - grid_row + 1; }

void check_depth(const Partition& shape, int depth) {
  if (depth < 1 || shape.length() > depth) {
    throw ValidationError("depth " + std::to_string(depth) + " is too small for " + shape.to_string());
  }
}

}  // namespace

Rssyt::Rssyt(Partition shape, int depth, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), depth_(depth), rows_(std::move(rows)) {
  check_depth(shape_, depth_);
  if (static_cast<int>(rows_.size()) != shape_.length()) throw ValidationError("filling has the wrong number of rows");
  for (int k = 0; k < shape_.length(); ++k) {
    const auto& row = rows_[static_cast<std::size_t>(k)];
    if (static_cast<int>(row.size()) != shape_.part(k + 1)) {
      throw ValidationError("filling row " + std::to_string(k + 1) + " has the wrong length", ValidationError::Axis::row,
                            k + 1);
    }
    for (std::size_t b = 0; b < row.size(); ++b) {
      if (row[b] < 1 || row[b] > depth_) {
        throw ValidationError("label " + std::to_string(row[b]) + " outside [" + std::to_string(depth_) + "]",
                              ValidationError::Axis::row, k + 1);
      }
      if (b > 0 && row[b] > row[b - 1]) {
        throw ValidationError("rows must weakly decrease left to right", ValidationError::Axis::row, k + 1);
      }
      if (k > 0 && row[b] >= rows_[static_cast<std::size_t>(k - 1)][b]) {
        throw ValidationError("columns must strictly decrease bottom to top", ValidationError::Axis::column,
                              static_cast<int>(b) + 1);
      }
    }
  }
}

bool Rssyt::occupies(int grid_row, int grid_col) const noexcept {
  int p = partition_row(depth_, grid_row);
  return grid_row >= 1 && grid_col >= 1 && p >= 1 && grid_col <= shape_.part(p);
}

int Rssyt::at(int grid_row, int grid_col) const {
  if (!occupies(grid_row, grid_col)) throw std::out_of_range("cell not in tableau");
  return rows_[static_cast<std::size_t>(partition_row(depth_, grid_row) - 1)][static_cast<std::size_t>(grid_col - 1)];
}

std::vector<GridCell> Rssyt::cells() const {
  std::vector<GridCell> out;
  for (int a = depth_ - shape_.length() + 1; a <= depth_; ++a) {
    for (int b = 1; b <= shape_.part(partition_row(depth_, a)); ++b) out.push_back({a, b});
  }
  return out;
}

bool Rssyt::accepts(int grid_row, int grid_col, int label) const {
  if (!occupies(grid_row, grid_col) || label < 1 || label > depth_) return false;
  if (occupies(grid_row, grid_col - 1) && at(grid_row, grid_col - 1) < label) return false;
  if (occupies(grid_row, grid_col + 1) && at(grid_row, grid_col + 1) > label) return false;
  if (occupies(grid_row + 1, grid_col) && at(grid_row + 1, grid_col) <= label) return false;
  if (occupies(grid_row - 1, grid_col) && at(grid_row - 1, grid_col) >= label) return false;
  return true;
}

Rssyt Rssyt::with_label(int grid_row, int grid_col, int label) const {
  if (!accepts(grid_row, grid_col, label)) throw ValidationError("replacement breaks the reverse semistandard conditions");
  Rssyt r = *this;
  r.rows_[static_cast<std::size_t>(partition_row(depth_, grid_row) - 1)][static_cast<std::size_t>(grid_col - 1)] = label;
  return r;
}

bool Rssyt::entrywise_leq(const Rssyt& o) const {
  if (shape_ != o.shape_ || depth_ != o.depth_) return false;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    for (std::size_t b = 0; b < rows_[k].size(); ++b) {
      if (rows_[k][b] > o.rows_[k][b]) return false;
    }
  }
  return true;
}

std::vector<Rssyt> enumerate_rssyt(const Partition& shape, int depth) {
  check_depth(shape, depth);
  const int len = shape.length();
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(len));
  for (int k = 0; k < len; ++k) rows[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(shape.part(k + 1)), 0);
  // Column heights, for the smallest label that still leaves room above.
  std::vector<int> height(static_cast<std::size_t>(shape.part(1)), 0);
  for (int k = 1; k <= len; ++k) {
    for (int b = 0; b < shape.part(k); ++b) height[static_cast<std::size_t>(b)] = k;
  }

  std::vector<Rssyt> out;
  // Cells in order: partition row 1 (bottom) first, left to right.
  auto fill = [&](auto&& self, int k, int b) -> void {
    if (k == len) {
      out.push_back(Rssyt(Rssyt::Unchecked{}, shape, depth, rows));
      return;
    }
    if (b == shape.part(k + 1)) {
      self(self, k + 1, 0);
      return;
    }
    auto& row = rows[static_cast<std::size_t>(k)];
    int hi = depth;
    if (b > 0) hi = std::min(hi, row[static_cast<std::size_t>(b - 1)]);
    if (k > 0) hi = std::min(hi, rows[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(b)] - 1);
    int lo = height[static_cast<std::size_t>(b)] - k;
    for (int v = lo; v <= hi; ++v) {
      row[static_cast<std::size_t>(b)] = v;
      self(self, k, b + 1);
    }
  };
  fill(fill, 0, 0);
  return out;
}

std::size_t count_rssyt(const Partition& shape, int depth) { return enumerate_rssyt(shape, depth).size(); }

// --- shapes and tableaux -----------------------------------------------------------

void PrismShapeSpec::validate() const {
  if (lambdas.size() != depths.size()) throw ValidationError("shape tuple and depth tuple differ in length");
  for (std::size_t k = 0; k < lambdas.size(); ++k) check_depth(lambdas[k], depths[k]);
}

int PrismShapeSpec::ambient_size() const { return minimal_ambient_size(lambdas, depths); }

std::string PrismShapeSpec::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < lambdas.size(); ++k) os << (k ? "," : "") << lambdas[k].to_string();
  os << ") / (";
  for (std::size_t k = 0; k < depths.size(); ++k) os << (k ? "," : "") << depths[k];
  os << ')';
  return os.str();
}

bool PrismTableau::entrywise_leq(const PrismTableau& o) const {
  if (components.size() != o.components.size()) return false;
  for (std::size_t k = 0; k < components.size(); ++k) {
    if (!components[k].entrywise_leq(o.components[k])) return false;
  }
  return true;
}

std::string PrismTableau::render() const {
  std::ostringstream os;
  for (std::size_t k = 0; k < components.size(); ++k) {
    const auto& c = components[k];
    os << "color " << (k + 1) << ' ' << c.shape().to_string() << " d=" << c.depth() << '\n';
    for (int p = c.shape().length(); p >= 1; --p) {
      os << "  row " << (c.depth() - p + 1) << ':';
      for (int v : c.rows()[static_cast<std::size_t>(p - 1)]) os << ' ' << v;
      os << '\n';
    }
  }
  return os.str();
}

void for_each_prism_tableau(const PrismShapeSpec& spec, const std::function<void(const PrismTableau&)>& visit) {
  spec.validate();
  const std::size_t k = spec.num_components();
  std::vector<std::vector<Rssyt>> options;
  for (std::size_t c = 0; c < k; ++c) {
    options.push_back(enumerate_rssyt(spec.lambdas[c], spec.depths[c]));
    if (options.back().empty()) return;
  }
  std::vector<std::size_t> idx(k, 0);
  PrismTableau t;
  t.components.reserve(k);
  for (;;) {
    t.components.clear();
    for (std::size_t c = 0; c < k; ++c) t.components.push_back(options[c][idx[c]]);
    visit(t);
    std::size_t c = k;
    while (c > 0) {
      --c;
      if (++idx[c] < options[c].size()) break;
      idx[c] = 0;
      if (c == 0) return;
    }
    if (k == 0) return;
  }
}

std::vector<PrismTableau> enumerate_all_prism(const PrismShapeSpec& spec) {
  std::vector<PrismTableau> out;
  for_each_prism_tableau(spec, [&](const PrismTableau& t) { out.push_back(t); });
  return out;
}

// --- weights and triples -----------------------------------------------------------

namespace {

// Label sets per antidiagonal, as bitmasks (bit l for label l).
std::map<int, std::uint64_t> antidiagonal_labels(const PrismTableau& t) {
  std::map<int, std::uint64_t> labels;
  for (const auto& comp : t.components) {
    if (comp.depth() >= 64) throw ValidationError("labels above 63 are not supported");
    for (const auto& c : comp.cells()) labels[antidiagonal_of(c.row, c.col)] |= std::uint64_t{1} << comp.at(c.row, c.col);
  }
  return labels;
}

}  // namespace

Monomial prism_weight(const PrismTableau& t) {
  std::vector<unsigned> e;
  for (const auto& [diag, mask] : antidiagonal_labels(t)) {
    for (std::uint64_t m = mask; m != 0; m &= m - 1) {
      auto l = static_cast<std::size_t>(std::countr_zero(m));
      if (e.size() < l) e.resize(l, 0);
      ++e[l - 1];
    }
  }
  return Monomial(std::move(e));
}

bool has_unstable_triple(const PrismTableau& t, TripleRule rule) {
  struct Entry {
    std::size_t color;
    GridCell cell;
    int label;
  };
  std::map<int, std::vector<Entry>> diagonals;
  for (std::size_t k = 0; k < t.components.size(); ++k) {
    const auto& comp = t.components[k];
    for (const auto& c : comp.cells()) diagonals[antidiagonal_of(c.row, c.col)].push_back({k, c, comp.at(c.row, c.col)});
  }
  for (const auto& [diag, entries] : diagonals) {
    for (const auto& low : entries) {
      bool repeated = false;
      for (const auto& other : entries) repeated = repeated || (other.color != low.color && other.label == low.label);
      if (rule == TripleRule::distinct_colors && !repeated) continue;
      const auto& comp = t.components[low.color];
      for (const auto& high : entries) {
        if (high.label > low.label && comp.accepts(low.cell.row, low.cell.col, high.label)) return true;
      }
    }
  }
  return false;
}

unsigned prism_degree(const PrismShapeSpec& spec) {
  unsigned best = std::numeric_limits<unsigned>::max();
  for_each_prism_tableau(spec, [&](const PrismTableau& t) { best = std::min(best, prism_weight(t).total_degree()); });
  if (best == std::numeric_limits<unsigned>::max()) throw ValidationError("prism shape has no fillings");
  return best;
}

std::vector<PrismTableau> prism_set(const PrismShapeSpec& spec, TripleRule rule) {
  std::vector<std::pair<PrismTableau, unsigned>> all;
  unsigned best = std::numeric_limits<unsigned>::max();
  for_each_prism_tableau(spec, [&](const PrismTableau& t) {
    unsigned d = prism_weight(t).total_degree();
    best = std::min(best, d);
    all.emplace_back(t, d);
  });
  std::vector<PrismTableau> out;
  for (auto& [t, d] : all) {
    if (d == best && !has_unstable_triple(t, rule)) out.push_back(std::move(t));
  }
  return out;
}

Polynomial asm_polynomial(const PrismShapeSpec& spec, TripleRule rule) {
  Polynomial p;
  for (const auto& t : prism_set(spec, rule)) p.add_term(prism_weight(t), 1);
  return p;
}

// --- models ----------------------------------------------------------------------------

PrismShapeSpec bigrassmannian_model(const Asm& a) {
  const CornerSum r = corner_sum(a);
  PrismShapeSpec spec;
  for (const auto& c : essential_set(a)) {
    const int rank = r(c.row, c.col);
    spec.lambdas.push_back(Partition::rectangle(c.row - rank, c.col - rank));
    spec.depths.push_back(c.row);
  }
  return spec;
}

PrismShapeSpec parabolic_model(const Asm& a) {
  std::vector<int> rows;
  for (const auto& c : essential_set(a)) rows.push_back(c.row);
  std::sort(rows.begin(), rows.end());
  rows.erase(std::unique(rows.begin(), rows.end()), rows.end());
  PrismShapeSpec spec;
  for (int i : rows) {
    spec.lambdas.push_back(lambda_row(a, i));
    spec.depths.push_back(i);
  }
  return spec;
}

Asm asm_of_spec(const PrismShapeSpec& spec, int n) {
  spec.validate();
  return asm_from_shape_tuple(spec.lambdas, spec.depths, n == 0 ? spec.ambient_size() : n);
}

}  // namespace asmprism
