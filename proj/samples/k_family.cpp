// Prints K(m) in gap notation with its sumset/difference-set sizes.

#include <iostream>

#include "mstd/mstd.hpp"

int main() {
  for (mstd::Element m = 9; m <= 15; ++m) {
    const auto k = mstd::k_set(m);
    const auto c = mstd::classify(k);
    std::cout << "m=" << m << ' ' << mstd::format_gap_notation(k)
              << " |A+A|=" << c.sum_card << " |A-A|=" << c.diff_card
              << " excess=" << c.excess << '\n';
  }
}
