#pragma once

#include <string>

namespace asmprism::cli {

struct VerifyResult {
  bool passed = true;
  std::size_t checked = 0;
  std::size_t total = 0;
  std::string message;  // "OK: ..." or "FAIL: ..."
};

// Exhaustive checks over ASM(n) (schur: over shapes in an n x n box with at
// most n rows). `jobs` bounds the number of worker threads; results do not
// depend on it.
VerifyResult verify_theorem1(int n, int jobs);
VerifyResult verify_bijection_all(int n, int jobs);
VerifyResult verify_groebner(int n, int jobs);
VerifyResult verify_lattice(int n, int jobs);
VerifyResult verify_schur(int n, int jobs);

}  // namespace asmprism::cli
