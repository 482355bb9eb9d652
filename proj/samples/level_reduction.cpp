// Splits Lambda = Lambda_1 + 2 Lambda_2 for affine A1 into fundamental pieces
// and compares the reduced block dimensions with the direct ones.

#include <iostream>

#include "klr/levelred.hpp"

int main() {
  using namespace klr;
  const CartanData c = builtin_cartan("A1~");
  const Weight lambda({1, 2});
  LevelSplit split;
  split.parts = {Weight({1, 0}), Weight({0, 1}), Weight({0, 1})};
  split.validate(c, lambda);

  for (long long n = 1; n <= 3; ++n) {
    for (const auto& beta : roots_of_height(c.rank(), n)) {
      std::cout << "beta=(" << beta[0] << "," << beta[1] << ")  direct " << block_dim(c, lambda, beta)
                << "  reduced " << reduce_block_dim(c, beta, split) << "\n";
    }
  }
  // The graded version of the same sum is not an identity.
  const CartanData nil = validate_cartan({{2}});
  LevelSplit two;
  two.parts = {Weight({1}), Weight({1})};
  std::cout << "nilHecke l=2, n=1: " << reduce_block_graded_sum(nil, RootElement({1}), two).to_string() << " vs "
            << block_graded_dim(nil, Weight({2}), RootElement({1})).to_string() << "\n";
}
