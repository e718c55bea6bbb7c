// The vect(2) story: D^6 is a vector field, D^7 dies, and the 5-commutator
// of Hamiltonian fields follows a single 5x5 determinant.
#include <cstdio>

#include "superali/vectorial.hpp"

using namespace superali;

int main() {
  auto rep = critical_scan(VectorialSpec{VectorialFamily::vect, 2, 2}, 2, 7);
  std::printf("vect(2) at degree cap %u:\n", rep.degree);
  for (const auto& item : rep.items)
    std::printf("  D^%u -> %s (order %d)\n", item.N, power_class_name(item.classification),
                item.order);

  SuperDomain dom(2, 0);
  auto p = dom.coordinate(dom.even_coord(0));
  auto q = dom.coordinate(dom.even_coord(1));
  std::vector<SuperScalar> fs = {p, q, p * p, q * q, p * q * q};
  std::vector<DiffOp> fields;
  for (const auto& f : fs) fields.push_back(hamiltonian_field(dom, f));
  auto a5 = n_commutator(fields, 5);
  auto det = h5_determinant(dom, fs);
  std::printf("h(2): a_5(X_f) = -3 X_det holds: %s\n",
              a5 == rat(-3) * hamiltonian_field(dom, det) ? "yes" : "no");
  return 0;
}
