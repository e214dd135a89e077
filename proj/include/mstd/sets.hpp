#pragma once

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "mstd/error.hpp"
#include "mstd/int_set.hpp"
#include "mstd/kernel.hpp"

namespace mstd {

enum class Kind { SumDominant, Balanced, DifferenceDominant };

inline const char* to_string(Kind k) {
  switch (k) {
    case Kind::SumDominant: return "sum-dominant";
    case Kind::Balanced: return "balanced";
    case Kind::DifferenceDominant: return "difference-dominant";
  }
  return "unknown";
}

struct Classification {
  Kind kind = Kind::Balanced;
  std::int64_t sum_card = 0;
  std::int64_t diff_card = 0;
  std::int64_t excess = 0;

  friend bool operator==(const Classification&,
                         const Classification&) = default;
};

inline Kind kind_of_excess(std::int64_t excess) {
  if (excess > 0) return Kind::SumDominant;
  if (excess < 0) return Kind::DifferenceDominant;
  return Kind::Balanced;
}

inline Classification make_classification(std::int64_t sum_card,
                                          std::int64_t diff_card) {
  const std::int64_t excess = sum_card - diff_card;
  return {kind_of_excess(excess), sum_card, diff_card, excess};
}

namespace detail {

inline void require_nonempty(const IntSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "set is empty");
}

// Pairwise loops beat shift-OR once the set is sparse in its universe.
inline bool prefer_pairwise(const IntSet& a) {
  const auto n = static_cast<std::uint64_t>(a.size());
  const auto words = static_cast<std::uint64_t>(a.max()) / 64 + 1;
  return n * n < 8 * n * words;
}

}  // namespace detail

/// A+A.
inline IntSet sumset(const IntSet& a) {
  detail::require_nonempty(a);
  const std::size_t bits = 2 * static_cast<std::size_t>(a.max()) + 1;
  std::vector<kernel::Word> out((bits + 63) / 64, 0);
  if (detail::prefer_pairwise(a)) {
    const auto e = a.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i; j < e.size(); ++j) {
        const auto s = static_cast<std::size_t>(e[i] + e[j]);
        out[s / 64] |= kernel::Word{1} << (s % 64);
      }
  } else {
    const auto bits_in = a.to_bits();
    kernel::sumset_bits(bits_in, out);
  }
  return IntSet::from_bits(out);
}

struct DiffSet {
  IntSet magnitudes;        // {|x-y|}, always contains 0
  std::int64_t cardinality;  // |A-A| counted with sign
};

/// A-A stored as nonnegative magnitudes plus the signed cardinality.
inline DiffSet diffset(const IntSet& a) {
  detail::require_nonempty(a);
  const auto bits_in = a.to_bits();
  std::vector<kernel::Word> out(bits_in.size(), 0);
  if (detail::prefer_pairwise(a)) {
    const auto e = a.elements();
    for (std::size_t i = 0; i < e.size(); ++i)
      for (std::size_t j = i; j < e.size(); ++j) {
        const auto d = static_cast<std::size_t>(e[j] - e[i]);
        out[d / 64] |= kernel::Word{1} << (d % 64);
      }
  } else {
    kernel::diff_magnitude_bits(bits_in, out);
  }
  IntSet mags = IntSet::from_bits(out);
  const auto card = 2 * static_cast<std::int64_t>(mags.size() - 1) + 1;
  return {std::move(mags), card};
}

inline Classification classify(const IntSet& a) {
  detail::require_nonempty(a);
  const auto sums = static_cast<std::int64_t>(sumset(a).size());
  return make_classification(sums, diffset(a).cardinality);
}

/// The c with c - A = A, if any. Only min+max can qualify.
inline std::optional<Element> symmetry_center(const IntSet& a) {
  detail::require_nonempty(a);
  const Element c = a.min() + a.max();
  const auto e = a.elements();
  for (std::size_t i = 0, j = e.size() - 1; i <= j; ++i, --j) {
    if (e[i] + e[j] != c) return std::nullopt;
    if (j == 0) break;
  }
  return c;
}

/// Translate to min 0, then divide by the gcd of the gaps.
inline IntSet normalize_affine(const IntSet& a) {
  if (a.size() < 2) {
    throw Error(ErrorCode::DegenerateSet,
                "affine normalization needs at least two elements");
  }
  Element g = 0;
  for (Element gap : a.gaps()) g = std::gcd(g, gap);
  const Element lo = a.min();
  std::vector<Element> out;
  out.reserve(a.size());
  for (Element x : a) out.push_back((x - lo) / g);
  return IntSet(std::move(out));
}

}  // namespace mstd
