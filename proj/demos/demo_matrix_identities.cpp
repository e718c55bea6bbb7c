// Walks the generic-element method on a few matrix algebras: build
// X = sum theta_b b, take powers, and read identities off the zero pattern.
#include <cstdio>

#include "superali/antisym.hpp"

using namespace superali;

int main() {
  for (const char* name : {"gl(2)", "gl(3)", "sp(4)", "osp(1|2)", "q(2)"}) {
    auto spec = MatrixAlgebraSpec::parse(name);
    GeneratorTable tab;
    auto ge = generic_element(spec, tab);
    std::printf("%s (dim %zu):", name, ge.basis_elements.size());
    SuperMatrix P = ge.X;
    for (std::uint32_t k = 2; k <= 8; ++k) {
      P = P * ge.X;
      if (P.is_zero()) {
        std::printf(" X^%u = 0\n", k);
        break;
      }
      std::printf(" X^%u != 0,", k);
      if (k == 8) std::printf(" ...\n");
    }
  }
  auto rep = span_scan(MatrixAlgebraSpec::parse("sp(4)"), 10);
  std::printf("sp(4) in-algebra nonvanishing:");
  for (auto k : rep.nonvanishing) std::printf(" a_%u", k);
  std::printf("\n");
  return 0;
}
