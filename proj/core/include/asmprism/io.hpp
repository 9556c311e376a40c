#pragma once

#include "asmprism/asm.hpp"
#include "asmprism/error.hpp"
#include "asmprism/perm.hpp"

#include <istream>
#include <string>
#include <string_view>

namespace asmprism {

// Malformed text input. Positions are 1-based; column counts characters.
class ParseError : public ValidationError {
 public:
  ParseError(const std::string& what, int line, int column);
  int line() const noexcept { return line_; }
  int column() const noexcept { return column_; }

 private:
  int line_;
  int column_;
};

// Whitespace-separated integer rows, one per line. Blank lines and lines
// starting with '#' are skipped. No validation beyond squareness.
IntMatrix parse_matrix(std::istream& in);
IntMatrix parse_matrix(std::string_view text);

Asm parse_asm(std::istream& in);
Asm parse_asm(std::string_view text);
PartialAsm parse_partial_asm(std::istream& in);
PartialAsm parse_partial_asm(std::string_view text);

// "3 4 1 2" or "3412".
Perm parse_perm(std::string_view text);

}  // namespace asmprism
