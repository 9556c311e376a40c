#include "asmprism/perm.hpp"

#include "asmprism/error.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <sstream>

namespace asmprism {

Perm::Perm(std::vector<int> one_line) : w_(std::move(one_line)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int i = 1; i <= n; ++i) {
    int v = w_[static_cast<std::size_t>(i - 1)];
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)]) {
      throw ValidationError("not a permutation of 1.." + std::to_string(n) + " (position " + std::to_string(i) + ")",
                            ValidationError::Axis::column, i);
    }
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Perm::Perm(std::initializer_list<int> one_line) : Perm(std::vector<int>(one_line)) {}

Perm Perm::identity(int n) {
  std::vector<int> w(static_cast<std::size_t>(std::max(n, 0)));
  std::iota(w.begin(), w.end(), 1);
  return Perm(std::move(w));
}

Perm Perm::from_matrix(const Asm& a) {
  if (!a.is_permutation()) throw ValidationError("matrix has a -1 entry; not a permutation");
  std::vector<int> w(static_cast<std::size_t>(a.size()));
  for (int i = 1; i <= a.size(); ++i) {
    for (int j = 1; j <= a.size(); ++j) {
      if (a(i, j) == 1) w[static_cast<std::size_t>(i - 1)] = j;
    }
  }
  return Perm(std::move(w));
}

Perm Perm::canonical() const {
  std::vector<int> w = w_;
  while (!w.empty() && w.back() == static_cast<int>(w.size())) w.pop_back();
  Perm p;
  p.w_ = std::move(w);
  return p;
}

Perm Perm::embedded(int N) const {
  if (N < size()) {
    Perm c = canonical();
    if (N < c.size()) throw ValidationError("permutation does not fit in S_" + std::to_string(N));
    return c.embedded(N);
  }
  Perm p = *this;
  for (int k = size() + 1; k <= N; ++k) p.w_.push_back(k);
  return p;
}

Perm Perm::inverse() const {
  std::vector<int> inv(w_.size());
  for (int i = 1; i <= size(); ++i) inv[static_cast<std::size_t>((*this)(i)-1)] = i;
  Perm p;
  p.w_ = std::move(inv);
  return p;
}

Perm Perm::times_simple(int k) const {
  Perm p = embedded(std::max(size(), k + 1));
  std::swap(p.w_[static_cast<std::size_t>(k - 1)], p.w_[static_cast<std::size_t>(k)]);
  return p;
}

std::vector<int> Perm::descents() const {
  std::vector<int> d;
  for (int i = 1; i < size(); ++i) {
    if ((*this)(i) > (*this)(i + 1)) d.push_back(i);
  }
  return d;
}

std::vector<int> Perm::code() const {
  std::vector<int> c(w_.size(), 0);
  for (int i = 1; i <= size(); ++i) {
    for (int j = i + 1; j <= size(); ++j) {
      if ((*this)(j) < (*this)(i)) ++c[static_cast<std::size_t>(i - 1)];
    }
  }
  return c;
}

std::string Perm::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < w_.size(); ++i) os << (i ? " " : "") << w_[i];
  return os.str();
}

std::string Perm::compact() const {
  if (size() > 9) return to_string();
  std::string s;
  for (int v : w_) s += static_cast<char>('0' + v);
  return s;
}

bool operator==(const Perm& a, const Perm& b) { return a.canonical().w_ == b.canonical().w_; }

std::strong_ordering operator<=>(const Perm& a, const Perm& b) { return a.canonical().w_ <=> b.canonical().w_; }

int Word::max_letter() const noexcept {
  return letters.empty() ? 0 : *std::max_element(letters.begin(), letters.end());
}

std::string Word::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < letters.size(); ++i) os << (i ? "," : "") << letters[i];
  return os.str();
}

int length(const Perm& w) {
  int inv = 0;
  for (int i = 1; i <= w.size(); ++i) {
    for (int j = i + 1; j <= w.size(); ++j) inv += w(i) > w(j) ? 1 : 0;
  }
  return inv;
}

namespace {

void check_letters(const Word& q) {
  for (int k : q.letters) {
    if (k < 1) throw ValidationError("simple transposition index must be positive");
  }
}

}  // namespace

Perm word_product(const Word& q) {
  check_letters(q);
  Perm w = Perm::identity(q.max_letter() + 1);
  for (int k : q.letters) w = w.times_simple(k);
  return w;
}

bool is_reduced(const Word& q) { return length(word_product(q)) == static_cast<int>(q.size()); }

Perm demazure_product(const Word& q) {
  check_letters(q);
  Perm w = Perm::identity(q.max_letter() + 1);
  for (int k : q.letters) {
    if (w(k) < w(k + 1)) w = w.times_simple(k);
  }
  return w;
}

Word reduced_word(const Perm& w) {
  Word out;
  Perm v = w;
  for (;;) {
    auto d = v.descents();
    if (d.empty()) break;
    out.letters.push_back(d.front());
    v = v.times_simple(d.front());
  }
  std::reverse(out.letters.begin(), out.letters.end());
  return out;
}

bool bruhat_leq(const Perm& v, const Perm& w) {
  const int n = std::max({v.size(), w.size(), 1});
  return asm_leq(v.matrix(n), w.matrix(n));
}

bool is_grassmannian(const Perm& w) { return w.descents().size() <= 1; }

bool is_bigrassmannian(const Perm& w) { return is_grassmannian(w) && is_grassmannian(w.inverse()); }

Perm grassmannian_encode(const Partition& lambda, int d, int n) {
  if (d < 1 || d > n) throw ValidationError("descent " + std::to_string(d) + " outside 1.." + std::to_string(n));
  if (!lambda.fits_in(d, n - d)) {
    throw ValidationError("partition " + lambda.to_string() + " does not fit in " + std::to_string(d) + "x" +
                          std::to_string(n - d));
  }
  if (lambda.empty()) return Perm::identity(n);
  std::vector<int> w;
  std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
  for (int k = 1; k <= d; ++k) {
    int v = lambda.part(d - k + 1) + k;
    w.push_back(v);
    used[static_cast<std::size_t>(v)] = true;
  }
  for (int v = 1; v <= n; ++v) {
    if (!used[static_cast<std::size_t>(v)]) w.push_back(v);
  }
  return Perm(std::move(w));
}

PartitionDescentPair grassmannian_decode(const Perm& u) {
  auto d = u.descents();
  if (d.size() > 1) throw ValidationError("permutation " + u.to_string() + " is not Grassmannian");
  if (d.empty()) return {Partition{}, 0};
  const int des = d.front();
  std::vector<int> parts;
  for (int i = 1; i <= des; ++i) parts.push_back(u(des - i + 1) - (des - i + 1));
  return {Partition(std::move(parts)), des};
}

Perm bigrassmannian_encode(int i, int j, int r, int n) {
  if (i < 1 || j < 1) throw ValidationError("biGrassmannian indices must be positive");
  if (r < 0 || r > std::min(i, j)) throw ValidationError("biGrassmannian rank must satisfy 0 <= r <= min(i,j)");
  if (r == std::min(i, j)) return Perm::identity(n);
  if (i + j - r > n) {
    throw ValidationError("[" + std::to_string(i) + "," + std::to_string(j) + "," + std::to_string(r) +
                          "]_b needs size " + std::to_string(i + j - r) + " > " + std::to_string(n));
  }
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  for (int t = 1; t <= i - r; ++t) w[static_cast<std::size_t>(r + t - 1)] = j + t;
  for (int t = 1; t <= j - r; ++t) w[static_cast<std::size_t>(i + t - 1)] = r + t;
  return Perm(std::move(w));
}

std::vector<Perm> bigrassmannians(int n) {
  std::vector<Perm> out;
  for (int i = 1; i <= n; ++i) {
    for (int j = 1; j <= n; ++j) {
      for (int r = 0; r < std::min(i, j); ++r) {
        if (i + j - r <= n) out.push_back(bigrassmannian_encode(i, j, r, n));
      }
    }
  }
  return out;
}

int minimal_ambient_size(std::span<const Partition> lambdas, std::span<const int> ds) {
  if (lambdas.size() != ds.size()) throw ValidationError("shape tuple and depth tuple differ in length");
  int n = 1;
  for (std::size_t k = 0; k < ds.size(); ++k) n = std::max(n, ds[k] + lambdas[k].part(1));
  return n;
}

Asm asm_from_shape_tuple(std::span<const Partition> lambdas, std::span<const int> ds, int n) {
  if (lambdas.size() != ds.size()) throw ValidationError("shape tuple and depth tuple differ in length");
  for (std::size_t k = 0; k < ds.size(); ++k) {
    if (ds[k] < 1 || ds[k] < lambdas[k].length()) {
      throw ValidationError("depth " + std::to_string(ds[k]) + " is shorter than partition " +
                            lambdas[k].to_string());
    }
  }
  if (n == 0) n = minimal_ambient_size(lambdas, ds);
  std::vector<Asm> family;
  for (std::size_t k = 0; k < ds.size(); ++k) family.push_back(grassmannian_encode(lambdas[k], ds[k], n).matrix(n));
  return asm_join_all(family, n);
}

std::vector<Perm> bigr_of(const Asm& a) {
  const CornerSum r = corner_sum(a);
  std::vector<Perm> out;
  for (const auto& c : essential_set(a)) {
    const int rank = r(c.row, c.col);
    out.push_back(bigrassmannian_encode(c.row, c.col, rank, std::max(a.size(), c.row + c.col - rank)));
  }
  return out;
}

void for_each_permutation(int n, const std::function<void(const Perm&)>& visit) {
  std::vector<int> w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  do {
    visit(Perm(w));
  } while (std::next_permutation(w.begin(), w.end()));
}

std::vector<Perm> perm_set(const Asm& a) {
  const int n = a.size();
  const CornerSum ra = corner_sum(a);
  std::vector<Perm> above;
  std::vector<CornerSum> sums;
  for_each_permutation(n, [&](const Perm& w) {
    CornerSum rw = corner_sum(w.matrix(n));
    if (ra.dominates(rw)) {
      above.push_back(w);
      sums.push_back(std::move(rw));
    }
  });
  std::vector<Perm> out;
  for (std::size_t k = 0; k < above.size(); ++k) {
    bool minimal = true;
    for (std::size_t t = 0; t < above.size() && minimal; ++t) {
      // above[t] < above[k] strictly
      if (t != k && sums[t].dominates(sums[k]) && sums[t] != sums[k]) minimal = false;
    }
    if (minimal) out.push_back(above[k]);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Perm> min_perm_set(const Asm& a) {
  auto all = perm_set(a);
  int best = std::numeric_limits<int>::max();
  for (const auto& w : all) best = std::min(best, length(w));
  std::vector<Perm> out;
  for (const auto& w : all) {
    if (length(w) == best) out.push_back(w);
  }
  return out;
}

int deg(const Asm& a) {
  int best = std::numeric_limits<int>::max();
  for (const auto& w : perm_set(a)) best = std::min(best, length(w));
  return best;
}

}  // namespace asmprism
