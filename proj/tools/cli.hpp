#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace asmprism::cli {

enum ExitCode : int { ok = 0, invalid_input = 1, verification_failed = 2 };

// args excludes the program name. Matrices are read from --asm FILE, or from
// `in` when no file is given.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace asmprism::cli
