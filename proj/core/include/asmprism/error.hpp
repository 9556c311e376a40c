#pragma once

#include <stdexcept>
#include <string>

namespace asmprism {

// Raised when an input object violates the axioms of its type. `index` is the
// 1-based row or column at fault, or 0 when the failure is not positional.
class ValidationError : public std::invalid_argument {
 public:
  enum class Axis { none, row, column };

  ValidationError(const std::string& what, Axis axis = Axis::none, int index = 0)
      : std::invalid_argument(what), axis_(axis), index_(index) {}

  Axis axis() const noexcept { return axis_; }
  int index() const noexcept { return index_; }

 private:
  Axis axis_;
  int index_;
};

}  // namespace asmprism
