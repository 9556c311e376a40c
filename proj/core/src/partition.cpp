#include "asmprism/partition.hpp"

#include "asmprism/error.hpp"

#include <numeric>
#include <sstream>

namespace asmprism {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 0) throw ValidationError("negative part in partition");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw ValidationError("partition parts must weakly decrease");
  }
  while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition::Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

Partition Partition::rectangle(int rows, int cols) {
  if (rows <= 0 || cols <= 0) return {};
  return Partition(std::vector<int>(static_cast<std::size_t>(rows), cols));
}

int Partition::part(int i) const noexcept {
  return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
}

int Partition::size() const noexcept { return std::accumulate(parts_.begin(), parts_.end(), 0); }

bool Partition::fits_in(int rows, int cols) const noexcept {
  return length() <= rows && (empty() || parts_.front() <= cols);
}

bool Partition::contained_in(const Partition& other) const noexcept {
  if (length() > other.length()) return false;
  for (int i = 1; i <= length(); ++i) {
    if (part(i) > other.part(i)) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ')';
  return os.str();
}

}  // namespace asmprism
