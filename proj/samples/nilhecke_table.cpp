// Graded dimensions of cyclotomic nilHecke algebras, and the same numbers read
// off the general pair formula for a one-node Cartan matrix.

#include <iostream>

#include "klr/dims.hpp"

int main() {
  using namespace klr;
  const CartanData c = validate_cartan({{2}});
  for (long long level = 1; level <= 4; ++level) {
    for (long long n = 0; n <= level; ++n) {
      const IndexTuple nu(std::vector<Index>(static_cast<std::size_t>(n), 0));
      const LaurentPoly g = graded_dim(c, Weight({level}), nu, nu);
      std::cout << "l=" << level << " n=" << n << "  dim " << nilhecke_dim(level, n) << "  " << g.to_string() << "\n";
    }
  }
}
