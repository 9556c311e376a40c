#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace asmprism {

// Weakly decreasing sequence of positive parts; zeros are dropped on
// construction so (2,1,0) and (2,1) are the same partition.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts);

  // a x b: a rows of length b.
  static Partition rectangle(int rows, int cols);

  int length() const noexcept { return static_cast<int>(parts_.size()); }
  // 1-based; parts past the length are 0.
  int part(int i) const noexcept;
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  const std::vector<int>& parts() const noexcept { return parts_; }

  bool fits_in(int rows, int cols) const noexcept;
  bool contained_in(const Partition& other) const noexcept;

  // "(3,2,1)"; the empty partition renders as "()".
  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

}  // namespace asmprism
