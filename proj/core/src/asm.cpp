#include "asmprism/asm.hpp"

#include "asmprism/error.hpp"
#include "asmprism/perm.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <sstream>

namespace asmprism {

// --- IntMatrix ---------------------------------------------------------------

IntMatrix::IntMatrix(int n, int fill) : n_(n), data_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), fill) {
  if (n < 0) throw ValidationError("negative matrix size");
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::vector<std::vector<int>> v;
  for (const auto& r : rows) v.emplace_back(r);
  *this = from_rows(v);
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<int>>& rows) {
  const int n = static_cast<int>(rows.size());
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw ValidationError("row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                                " entries, expected " + std::to_string(n) + " (matrix must be square)",
                            ValidationError::Axis::row, i);
    }
    for (int j = 1; j <= n; ++j) m(i, j) = row[static_cast<std::size_t>(j - 1)];
  }
  return m;
}

std::string IntMatrix::to_string() const {
  std::ostringstream os;
  for (int i = 1; i <= n_; ++i) {
    for (int j = 1; j <= n_; ++j) os << (j > 1 ? " " : "") << (*this)(i, j);
    os << '\n';
  }
  return os.str();
}

// --- validation ----------------------------------------------------------------

namespace {

using Axis = ValidationError::Axis;

const char* axis_name(Axis a) { return a == Axis::row ? "row" : "column"; }

int line_entry(const IntMatrix& m, Axis axis, int line, int k) { return axis == Axis::row ? m(line, k) : m(k, line); }

// Entries in {-1,0,1}.
void check_entries(const IntMatrix& m) {
  for (int i = 1; i <= m.size(); ++i) {
    for (int j = 1; j <= m.size(); ++j) {
      int v = m(i, j);
      if (v < -1 || v > 1) {
        throw ValidationError("entry " + std::to_string(v) + " at row " + std::to_string(i) + ", column " +
                                  std::to_string(j) + " is outside {-1,0,1}",
                              Axis::row, i);
      }
    }
  }
}

// Alternation of nonzero signs along a line, starting with +1 when
// `first_positive` is set. Returns the line sum.
int check_line(const IntMatrix& m, Axis axis, int line, bool first_positive) {
  int prev = 0;
  int sum = 0;
  for (int k = 1; k <= m.size(); ++k) {
    int v = line_entry(m, axis, line, k);
    if (v == 0) continue;
    if (prev == 0 && first_positive && v != 1) {
      throw ValidationError(std::string(axis_name(axis)) + " " + std::to_string(line) +
                                ": first nonzero entry must be 1",
                            axis, line);
    }
    if (prev != 0 && v == prev) {
      throw ValidationError(std::string("A1 violated in ") + axis_name(axis) + " " + std::to_string(line) +
                                ": nonzero entries do not alternate in sign",
                            axis, line);
    }
    prev = v;
    sum += v;
  }
  return sum;
}

}  // namespace

Asm validate_asm(const IntMatrix& m) {
  if (m.size() < 1) throw ValidationError("empty matrix");
  check_entries(m);
  for (Axis axis : {Axis::row, Axis::column}) {
    for (int line = 1; line <= m.size(); ++line) {
      int sum = check_line(m, axis, line, false);
      if (sum != 1) {
        throw ValidationError(std::string("A2 violated: ") + axis_name(axis) + " " + std::to_string(line) +
                                  " sums to " + std::to_string(sum),
                              axis, line);
      }
    }
  }
  return Asm(m);
}

PartialAsm validate_partial_asm(const IntMatrix& m) {
  if (m.size() < 1) throw ValidationError("empty matrix");
  check_entries(m);
  for (Axis axis : {Axis::row, Axis::column}) {
    for (int line = 1; line <= m.size(); ++line) {
      int sum = check_line(m, axis, line, true);
      if (sum != 0 && sum != 1) {
        throw ValidationError(std::string(axis_name(axis)) + " " + std::to_string(line) + " sums to " +
                                  std::to_string(sum) + ", expected 0 or 1",
                              axis, line);
      }
    }
  }
  return PartialAsm(m);
}

// --- Asm -----------------------------------------------------------------------

Asm Asm::identity(int n) {
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) m(i, i) = 1;
  return Asm(std::move(m));
}

Asm Asm::permutation_matrix(std::span<const int> one_line) {
  const int n = static_cast<int>(one_line.size());
  IntMatrix m(n);
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int v = one_line[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("not a permutation of 1.." + std::to_string(n), Axis::row, i);
    }
    seen[static_cast<std::size_t>(v)] = true;
    m(i, v) = 1;
  }
  return Asm(std::move(m));
}

bool Asm::is_permutation() const {
  return std::none_of(m_.data().begin(), m_.data().end(), [](int v) { return v < 0; });
}

Asm Asm::canonical() const {
  int n = size();
  auto trailing_one = [&](int k) {
    if (m_(k, k) != 1) return false;
    for (int t = 1; t < k; ++t) {
      if (m_(k, t) != 0 || m_(t, k) != 0) return false;
    }
    return true;
  };
  while (n > 1 && trailing_one(n)) --n;
  if (n == size()) return *this;
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m(i, j) = m_(i, j);
  }
  return Asm(std::move(m));
}

Asm Asm::embedded(int N) const {
  if (N < size()) throw ValidationError("cannot embed a size " + std::to_string(size()) + " ASM into size " + std::to_string(N));
  IntMatrix m(N);
  for (int i = 1; i <= N; ++i) {
    for (int j = 1; j <= N; ++j) m(i, j) = (i <= size() && j <= size()) ? m_(i, j) : (i == j ? 1 : 0);
  }
  return Asm(std::move(m));
}

bool operator==(const Asm& a, const Asm& b) { return a.canonical().m_ == b.canonical().m_; }

std::strong_ordering operator<=>(const Asm& a, const Asm& b) {
  const IntMatrix ca = a.canonical().m_;
  const IntMatrix cb = b.canonical().m_;
  if (auto c = ca.size() <=> cb.size(); c != 0) return c;
  return ca.data() <=> cb.data();
}

Asm embed(const Asm& a) { return a.embedded(a.size() + 1); }

// --- PartialAsm ----------------------------------------------------------------

PartialAsm PartialAsm::from_asm(const Asm& a) { return PartialAsm(a.entries()); }

bool PartialAsm::is_honest() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    int rs = 0;
    int cs = 0;
    for (int j = 1; j <= n; ++j) {
      rs += m_(i, j);
      cs += m_(j, i);
    }
    if (rs != 1 || cs != 1) return false;
  }
  return true;
}

// --- corner sums -----------------------------------------------------------------

namespace {

CornerSum prefix_sums(const IntMatrix& a) {
  const int n = a.size();
  IntMatrix r(n);
  auto at = [&](int i, int j) { return (i == 0 || j == 0) ? 0 : r(i, j); };
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) r(i, j) = a(i, j) + at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
  }
  return CornerSum(std::move(r));
}

IntMatrix difference(const CornerSum& r) {
  const int n = r.size();
  IntMatrix a(n);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) a(i, j) = r(i, j) - r(i, j - 1) - r(i - 1, j) + r(i - 1, j - 1);
  }
  return a;
}

void require_same_size(int a, int b) {
  if (a != b) throw ValidationError("size mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

}  // namespace

bool CornerSum::has_unit_steps() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      int down = (*this)(i, j) - (*this)(i - 1, j);
      int right = (*this)(i, j) - (*this)(i, j - 1);
      if (down < 0 || down > 1 || right < 0 || right > 1) return false;
    }
  }
  return true;
}

bool CornerSum::has_full_margins() const {
  const int n = size();
  for (int i = 1; i <= n; ++i) {
    if ((*this)(i, n) != i || (*this)(n, i) != i) return false;
  }
  return true;
}

CornerSum CornerSum::entrywise_min(const CornerSum& o) const {
  require_same_size(size(), o.size());
  IntMatrix m(size());
  for (int i = 1; i <= size(); ++i) {
    for (int j = 1; j <= size(); ++j) m(i, j) = std::min((*this)(i, j), o(i, j));
  }
  return CornerSum(std::move(m));
}

CornerSum CornerSum::entrywise_max(const CornerSum& o) const {
  require_same_size(size(), o.size());
  IntMatrix m(size());
  for (int i = 1; i <= size(); ++i) {
    for (int j = 1; j <= size(); ++j) m(i, j) = std::max((*this)(i, j), o(i, j));
  }
  return CornerSum(std::move(m));
}

bool CornerSum::dominates(const CornerSum& o) const {
  require_same_size(size(), o.size());
  const auto& a = r_.data();
  const auto& b = o.r_.data();
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] < b[k]) return false;
  }
  return true;
}

CornerSum corner_sum(const Asm& a) { return prefix_sums(a.entries()); }
CornerSum corner_sum(const PartialAsm& a) { return prefix_sums(a.entries()); }

Asm asm_from_corner_sum(const CornerSum& r) {
  if (r.size() < 1) throw ValidationError("empty corner sum");
  if (!r.has_unit_steps()) throw ValidationError("R2 violated: corner sum steps must lie in {0,1}");
  if (!r.has_full_margins()) throw ValidationError("R1 violated: r(i,n) = r(n,i) = i fails");
  return validate_asm(difference(r));
}

PartialAsm partial_asm_from_corner_sum(const CornerSum& r) {
  if (r.size() < 1) throw ValidationError("empty corner sum");
  if (!r.has_unit_steps()) throw ValidationError("R2 violated: corner sum steps must lie in {0,1}");
  return validate_partial_asm(difference(r));
}

// --- lattice ------------------------------------------------------------------------

namespace {

std::pair<CornerSum, CornerSum> common_corner_sums(const Asm& a, const Asm& b) {
  const int n = std::max(a.size(), b.size());
  return {corner_sum(a.embedded(n)), corner_sum(b.embedded(n))};
}

}  // namespace

bool asm_leq(const Asm& a, const Asm& b) {
  auto [ra, rb] = common_corner_sums(a, b);
  return ra.dominates(rb);
}

Asm asm_join(const Asm& a, const Asm& b) {
  auto [ra, rb] = common_corner_sums(a, b);
  return asm_from_corner_sum(ra.entrywise_min(rb));
}

Asm asm_meet(const Asm& a, const Asm& b) {
  auto [ra, rb] = common_corner_sums(a, b);
  return asm_from_corner_sum(ra.entrywise_max(rb));
}

Asm asm_join_all(std::span<const Asm> family, int n) {
  CornerSum r = corner_sum(Asm::identity(n));
  for (const auto& a : family) r = r.entrywise_min(corner_sum(a.embedded(n)));
  return asm_from_corner_sum(r);
}

// --- diagrams -------------------------------------------------------------------------

std::vector<GridCell> inversions(const Asm& a) {
  const int n = a.size();
  std::vector<int> col_sum(static_cast<std::size_t>(n) + 1, 0);
  std::vector<GridCell> out;
  for (int i = 1; i <= n; ++i) {
    int row_sum = 0;
    for (int j = 1; j <= n; ++j) {
      col_sum[static_cast<std::size_t>(j)] += a(i, j);
      row_sum += a(i, j);
      if ((1 - col_sum[static_cast<std::size_t>(j)]) * (1 - row_sum) == 1) out.push_back({i, j});
    }
  }
  return out;
}

std::vector<GridCell> essential_set(const Asm& a) {
  const auto d = inversions(a);
  GridSet in(a.size(), d);
  std::vector<GridCell> out;
  for (const auto& c : d) {
    if (!in.contains({c.row + 1, c.col}) && !in.contains({c.row, c.col + 1})) out.push_back(c);
  }
  return out;
}

std::vector<GridCell> essential_set_by_rank(const Asm& a) {
  const CornerSum r = corner_sum(a);
  std::vector<GridCell> out;
  for (int i = 1; i < a.size(); ++i) {
    for (int j = 1; j < a.size(); ++j) {
      int v = r(i, j);
      if (r(i - 1, j) == v && r(i, j - 1) == v && r(i + 1, j) == v + 1 && r(i, j + 1) == v + 1) out.push_back({i, j});
    }
  }
  return out;
}

// --- monotone triangles ------------------------------------------------------------

MonotoneTriangle monotone_triangle(const Asm& a) {
  const int n = a.size();
  MonotoneTriangle t;
  std::vector<int> col_sum(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= n; ++i) {
    std::vector<int> row;
    for (int j = 1; j <= n; ++j) {
      col_sum[static_cast<std::size_t>(j)] += a(i, j);
      if (col_sum[static_cast<std::size_t>(j)] == 1) row.push_back(j);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

namespace {

// a_ij = [j in row i] - [j in row i-1].
IntMatrix matrix_of_triangle(const MonotoneTriangle& t) {
  const int n = t.size();
  IntMatrix m(n);
  for (int i = 1; i <= n; ++i) {
    for (int j : t.rows[static_cast<std::size_t>(i - 1)]) m(i, j) += 1;
    if (i > 1) {
      for (int j : t.rows[static_cast<std::size_t>(i - 2)]) m(i, j) -= 1;
    }
  }
  return m;
}

void check_triangle(const MonotoneTriangle& t) {
  const int n = t.size();
  if (n < 1) throw ValidationError("empty monotone triangle");
  for (int i = 1; i <= n; ++i) {
    const auto& row = t.rows[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != i) {
      throw ValidationError("triangle row " + std::to_string(i) + " must have " + std::to_string(i) + " entries",
                            Axis::row, i);
    }
    for (std::size_t k = 0; k < row.size(); ++k) {
      if (row[k] < 1 || row[k] > n || (k > 0 && row[k] <= row[k - 1])) {
        throw ValidationError("triangle row " + std::to_string(i) + " is not strictly increasing in [n]", Axis::row, i);
      }
    }
    if (i > 1) {
      const auto& up = t.rows[static_cast<std::size_t>(i - 2)];
      for (std::size_t k = 0; k < up.size(); ++k) {
        if (row[k] > up[k] || up[k] > row[k + 1]) {
          throw ValidationError("triangle rows " + std::to_string(i - 1) + " and " + std::to_string(i) +
                                    " do not interlace",
                                Axis::row, i);
        }
      }
    }
  }
}

}  // namespace

Asm asm_from_triangle(const MonotoneTriangle& t) {
  check_triangle(t);
  return Asm(matrix_of_triangle(t));
}

CornerSum corner_sum_from_triangle(const MonotoneTriangle& t) {
  const int n = t.size();
  IntMatrix r(n);
  for (int i = 1; i <= n; ++i) {
    const auto& row = t.rows[static_cast<std::size_t>(i - 1)];
    for (int j = 1; j <= n; ++j) {
      r(i, j) = static_cast<int>(std::upper_bound(row.begin(), row.end(), j) - row.begin());
    }
  }
  return CornerSum(std::move(r));
}

Partition lambda_row(const Asm& a, int row) {
  if (row < 1 || row > a.size()) throw ValidationError("row index out of range", Axis::row, row);
  const int n = a.size();
  std::vector<int> col_sum(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i <= row; ++i) {
    for (int j = 1; j <= n; ++j) col_sum[static_cast<std::size_t>(j)] += a(i, j);
  }
  std::vector<int> parts;
  int k = 0;
  for (int j = 1; j <= n; ++j) {
    if (col_sum[static_cast<std::size_t>(j)] == 1) parts.push_back(j - ++k);
  }
  std::reverse(parts.begin(), parts.end());
  return Partition(std::move(parts));
}

// --- enumeration ----------------------------------------------------------------------

namespace {

struct TriangleWalker {
  int n;
  const std::function<void(const Asm&)>& visit;
  MonotoneTriangle t;

  // Fill row `i` (1-based) position `k` (0-based) given the row above.
  void fill(int i, std::size_t k, std::vector<int>& row) {
    if (static_cast<int>(k) == i) {
      t.rows.push_back(row);
      if (i == n) {
        visit(asm_from_triangle(t));
      } else {
        std::vector<int> next(static_cast<std::size_t>(i) + 1);
        fill(i + 1, 0, next);
      }
      t.rows.pop_back();
      return;
    }
    const std::vector<int>* up = i > 1 ? &t.rows.back() : nullptr;
    int lo = 1;
    int hi = n;
    if (k > 0) lo = row[k - 1] + 1;
    if (up != nullptr) {
      if (k > 0) lo = std::max(lo, (*up)[k - 1]);
      if (k < up->size()) hi = std::min(hi, (*up)[k]);
    }
    // Leave room for the remaining strictly increasing entries.
    hi = std::min(hi, n - (i - 1 - static_cast<int>(k)));
    for (int v = lo; v <= hi; ++v) {
      row[k] = v;
      fill(i, k + 1, row);
    }
  }
};

}  // namespace

void for_each_asm(int n, const std::function<void(const Asm&)>& visit) {
  if (n < 1) throw ValidationError("ASM size must be positive");
  TriangleWalker w{n, visit, {}};
  std::vector<int> first(1);
  w.fill(1, 0, first);
}

std::vector<Asm> enumerate_asms(int n) {
  std::vector<Asm> out;
  for_each_asm(n, [&](const Asm& a) { out.push_back(a); });
  return out;
}

unsigned long long asm_count_formula(int n) {
  using boost::multiprecision::cpp_int;
  auto fact = [](int k) {
    cpp_int f = 1;
    for (int t = 2; t <= k; ++t) f *= t;
    return f;
  };
  cpp_int num = 1;
  cpp_int den = 1;
  for (int j = 0; j < n; ++j) {
    num *= fact(3 * j + 1);
    den *= fact(n + j);
  }
  return static_cast<unsigned long long>(num / den);
}

// --- completion and rank conditions ---------------------------------------------------

Asm canonical_completion(const PartialAsm& p) {
  const int n = p.size();
  std::vector<int> zero_rows;
  std::vector<int> zero_cols;
  for (int i = 1; i <= n; ++i) {
    int rs = 0;
    int cs = 0;
    for (int j = 1; j <= n; ++j) {
      rs += p(i, j);
      cs += p(j, i);
    }
    if (rs == 0) zero_rows.push_back(i);
    if (cs == 0) zero_cols.push_back(i);
  }
  const int N = n + static_cast<int>(zero_rows.size());
  IntMatrix m(N);
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) m(i, j) = p(i, j);
  }
  for (std::size_t k = 0; k < zero_rows.size(); ++k) m(zero_rows[k], n + 1 + static_cast<int>(k)) = 1;
  for (std::size_t k = 0; k < zero_cols.size(); ++k) m(n + 1 + static_cast<int>(k), zero_cols[k]) = 1;
  return validate_asm(m);
}

CornerSum partial_bigrassmannian_corner_sum(int i, int j, int r, int n) {
  const int N = std::max(n, i + j - r);
  const CornerSum full = corner_sum(bigrassmannian_encode(i, j, r, N).matrix(N));
  IntMatrix out(n);
  for (int a = 1; a <= n; ++a) {
    for (int b = 1; b <= n; ++b) out(a, b) = full(a, b);
  }
  return CornerSum(std::move(out));
}

PartialAsm asm_from_rank_conditions(const RankConditions& r) {
  const int n = static_cast<int>(r.size());
  if (n < 1) throw ValidationError("empty rank condition matrix");
  CornerSum acc = corner_sum(Asm::identity(n));
  for (int i = 1; i <= n; ++i) {
    const auto& row = r[static_cast<std::size_t>(i - 1)];
    if (static_cast<int>(row.size()) != n) {
      throw ValidationError("rank condition row " + std::to_string(i) + " has the wrong length", Axis::row, i);
    }
    for (int j = 1; j <= n; ++j) {
      const auto& v = row[static_cast<std::size_t>(j - 1)];
      if (!v) continue;
      if (*v < 0) throw ValidationError("negative rank bound at row " + std::to_string(i), Axis::row, i);
      if (*v >= std::min(i, j)) continue;
      acc = acc.entrywise_min(partial_bigrassmannian_corner_sum(i, j, *v, n));
    }
  }
  return partial_asm_from_corner_sum(acc);
}

}  // namespace asmprism
