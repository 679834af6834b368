// Builds the Kronecker quiver with three arrows, evaluates the path-algebra
// formula and confirms it with the oracle.

#include <iostream>

#include "hochschild/hochschild.hpp"

int main() {
  using namespace hochschild;
  Quiver q({"1", "2"}, {{"a", "1", "2"}, {"b", "1", "2"}, {"c", "1", "2"}});
  auto   p = AlgebraPresentation::path_algebra(q);

  H1Report report = classify_and_compute(p);
  std::cout << "method: " << report.method << '\n';
  for (auto const& [name, value] : report.intermediates) {
    std::cout << "  " << name << " = " << value << '\n';
  }
  std::cout << "formula: " << report.dim_h1 << '\n';
  std::cout << "oracle:  " << h1_oracle(build_algebra(p)) << '\n';
}
