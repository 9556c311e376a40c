#pragma once

#include "asmprism/asm.hpp"
#include "asmprism/partition.hpp"

#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace asmprism {

// Permutation in one-line notation. Like Asm, equality and ordering are on
// the representative with trailing fixed points removed, so 2134 in S_4 and
// 21 in S_2 are the same element of S_infinity.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> one_line);
  Perm(std::initializer_list<int> one_line);

  static Perm identity(int n);
  // Inverse of permutation_matrix; throws ValidationError if `a` has a -1
  // or is otherwise not a permutation matrix.
  static Perm from_matrix(const Asm& a);

  int size() const noexcept { return static_cast<int>(w_.size()); }
  // w(i) for 1-based i; positions past size() are fixed.
  int operator()(int i) const noexcept { return i <= size() ? w_[static_cast<std::size_t>(i - 1)] : i; }
  const std::vector<int>& one_line() const noexcept { return w_; }

  Perm canonical() const;
  Perm embedded(int N) const;
  Perm inverse() const;
  Asm matrix() const { return Asm::permutation_matrix(w_); }
  Asm matrix(int n) const { return embedded(n).matrix(); }

  // Right multiplication by s_k swaps positions k and k+1; grows if needed.
  Perm times_simple(int k) const;

  // Descent positions i with w(i) > w(i+1).
  std::vector<int> descents() const;
  // Lehmer code c_i = #{j > i : w(j) < w(i)}.
  std::vector<int> code() const;

  // "3 4 1 2"
  std::string to_string() const;
  // "3412" when every value is a single digit, otherwise to_string().
  std::string compact() const;

  friend bool operator==(const Perm& a, const Perm& b);
  friend std::strong_ordering operator<=>(const Perm& a, const Perm& b);

 private:
  std::vector<int> w_;
};

// Sequence of simple transposition indices; letter i is s_i = (i, i+1).
struct Word {
  std::vector<int> letters;

  std::size_t size() const noexcept { return letters.size(); }
  int max_letter() const noexcept;
  // "3,2,1"
  std::string to_string() const;
  friend auto operator<=>(const Word&, const Word&) = default;
};

struct PartitionDescentPair {
  Partition shape;
  int descent = 0;
  friend auto operator<=>(const PartitionDescentPair&, const PartitionDescentPair&) = default;
};

// Number of inversions.
int length(const Perm& w);

// Ordinary product s_{q1} s_{q2} ... as a permutation.
Perm word_product(const Word& q);
bool is_reduced(const Word& q);
// e_{q1} e_{q2} ... in the 0-Hecke monoid.
Perm demazure_product(const Word& q);
// A reduced word for w, built by peeling off right descents.
Word reduced_word(const Perm& w);

// Corner-sum comparison of the permutation matrices.
bool bruhat_leq(const Perm& v, const Perm& w);

bool is_grassmannian(const Perm& w);
bool is_bigrassmannian(const Perm& w);
// [lambda, d]_g in S_n. Throws ValidationError unless lambda fits in
// d x (n - d). The empty partition gives the identity.
Perm grassmannian_encode(const Partition& lambda, int d, int n);
// (lambda^{(u)}, des(u)); requires u Grassmannian.
PartitionDescentPair grassmannian_decode(const Perm& u);
// [i,j,r]_b in S_n; the identity when r = min(i,j). Throws ValidationError
// when (B1)-(B3) fail.
Perm bigrassmannian_encode(int i, int j, int r, int n);
// All biGrassmannians of S_n, indexed by (i,j,r) triples in lexicographic order.
std::vector<Perm> bigrassmannians(int n);

// Join of the Grassmannian permutations [lambda_k, d_k]_g in ASM(n). When n
// is 0 the smallest n that fits every shape is used.
Asm asm_from_shape_tuple(std::span<const Partition> lambdas, std::span<const int> ds, int n = 0);
// Smallest n with lambda_k inside d_k x (n - d_k) for all k (at least 1).
int minimal_ambient_size(std::span<const Partition> lambdas, std::span<const int> ds);

// {[i,j,r_A(i,j)]_b : (i,j) in Ess(A)}, in essential-set order.
std::vector<Perm> bigr_of(const Asm& a);

void for_each_permutation(int n, const std::function<void(const Perm&)>& visit);
// Bruhat-minimal permutations w in S_n with w >= A, sorted.
std::vector<Perm> perm_set(const Asm& a);
// Elements of perm_set(a) of minimum length.
std::vector<Perm> min_perm_set(const Asm& a);
// Minimum length of a permutation above A.
int deg(const Asm& a);

}  // namespace asmprism
