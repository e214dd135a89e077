// Splits {1, ..., 124+m} into three sum-dominant sets.

#include <cstdlib>
#include <iostream>

#include "mstd/mstd.hpp"

int main(int argc, char** argv) {
  const mstd::Element m = argc > 1 ? std::atol(argv[1]) : 21;
  const auto spec = mstd::default_blocks(m);
  const auto parts = mstd::partition3(spec);
  std::cout << "M1 = " << mstd::format_set_literal(spec.m1) << '\n'
            << "M2 = " << mstd::format_set_literal(spec.m2) << '\n';
  for (const auto* p : {&parts.a1, &parts.a2, &parts.s}) {
    std::cout << mstd::format_set_literal(*p)
              << "  excess=" << mstd::classify(*p).excess << '\n';
  }
}
