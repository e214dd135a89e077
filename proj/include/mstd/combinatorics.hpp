#pragma once

#include <cstdint>
#include <limits>
#include <numeric>
#include <vector>

#include "mstd/error.hpp"

namespace mstd::comb {

/// C(n, k); throws InvalidParameter on 64-bit overflow.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    // r * num / i is exact at every step; divide first where possible.
    const std::uint64_t g = std::gcd(r, i);
    const std::uint64_t rr = r / g, ii = i / g;
    const std::uint64_t nn = num / ii;
    if (nn != 0 && rr > std::numeric_limits<std::uint64_t>::max() / nn) {
      throw Error(ErrorCode::InvalidParameter, "binomial overflow");
    }
    r = rr * nn;
  }
  return r;
}

/// The `rank`-th k-subset of {0, ..., n-1} in lexicographic order.
inline std::vector<int> unrank_combination(int n, int k, std::uint64_t rank) {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(k));
  int next = 0;
  for (int slot = 0; slot < k; ++slot) {
    for (int x = next;; ++x) {
      const std::uint64_t below =
          binomial(static_cast<std::uint64_t>(n - x - 1),
                   static_cast<std::uint64_t>(k - slot - 1));
      if (rank < below) {
        out.push_back(x);
        next = x + 1;
        break;
      }
      rank -= below;
    }
  }
  return out;
}

/// Advances `c` (a k-subset of {0..n-1}, sorted) to its lexicographic
/// successor; returns false after the last one.
inline bool next_combination(std::vector<int>& c, int n) {
  const int k = static_cast<int>(c.size());
  int i = k - 1;
  while (i >= 0 && c[i] == n - k + i) --i;
  if (i < 0) return false;
  ++c[i];
  for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
  return true;
}

}  // namespace mstd::comb
