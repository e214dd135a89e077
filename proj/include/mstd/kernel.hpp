#pragma once

// Word-parallel sumset / difference-set kernels.
//
// A set is a little-endian bit vector: bit i of word i/64 marks element i.
// A+A is the OR of the vector shifted left by each element; the nonnegative
// half of A-A is the OR of the vector shifted right by each element.

#include <array>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <type_traits>
#include <vector>

namespace mstd::kernel {

using Word = std::uint64_t;

inline void or_shifted_left(std::span<const Word> src, std::span<Word> dst,
                            std::size_t shift) {
  const std::size_t q = shift / 64;
  const unsigned r = shift % 64;
  for (std::size_t i = 0; i < src.size() && i + q < dst.size(); ++i) {
    const Word w = src[i];
    if (w == 0) continue;
    dst[i + q] |= w << r;
    if (r != 0 && i + q + 1 < dst.size()) dst[i + q + 1] |= w >> (64 - r);
  }
}

inline void or_shifted_right(std::span<const Word> src, std::span<Word> dst,
                             std::size_t shift) {
  const std::size_t q = shift / 64;
  const unsigned r = shift % 64;
  for (std::size_t i = q; i < src.size(); ++i) {
    const Word w = src[i];
    if (w == 0) continue;
    const std::size_t j = i - q;
    if (j < dst.size()) dst[j] |= w >> r;
    if (r != 0 && j >= 1 && j - 1 < dst.size()) dst[j - 1] |= w << (64 - r);
  }
}

inline std::size_t popcount(std::span<const Word> words) {
  std::size_t n = 0;
  for (Word w : words) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

template <typename F>
inline void for_each_bit(std::span<const Word> words, F&& f) {
  for (std::size_t i = 0; i < words.size(); ++i) {
    Word w = words[i];
    while (w != 0) {
      f(i * 64 + static_cast<std::size_t>(std::countr_zero(w)));
      w &= w - 1;
    }
  }
}

/// Sumset bits of `set` into `out`, which must hold 2*max+1 bits.
inline void sumset_bits(std::span<const Word> set, std::span<Word> out) {
  for (auto& w : out) w = 0;
  for_each_bit(set, [&](std::size_t e) { or_shifted_left(set, out, e); });
}

/// Difference magnitudes {|x-y|} of `set` into `out` (same width as `set`).
inline void diff_magnitude_bits(std::span<const Word> set,
                                std::span<Word> out) {
  for (auto& w : out) w = 0;
  for_each_bit(set, [&](std::size_t e) { or_shifted_right(set, out, e); });
}

struct Counts {
  std::size_t sum_card = 0;
  std::size_t diff_card = 0;  // signed |A-A|
  std::ptrdiff_t excess() const {
    return static_cast<std::ptrdiff_t>(sum_card) -
           static_cast<std::ptrdiff_t>(diff_card);
  }
};

/// Fixed-width bit set for hot search loops; holds elements below 64*W.
template <std::size_t W>
struct SmallBits {
  std::array<Word, W> words{};

  void set(std::size_t i) { words[i / 64] |= Word{1} << (i % 64); }
  void reset(std::size_t i) { words[i / 64] &= ~(Word{1} << (i % 64)); }
  bool test(std::size_t i) const { return (words[i / 64] >> (i % 64)) & 1U; }
  bool none() const {
    for (Word w : words)
      if (w != 0) return false;
    return true;
  }
};

template <std::size_t W>
inline Counts count(const SmallBits<W>& set) {
  std::array<Word, 2 * W> sums{};
  std::array<Word, W> diffs{};
  for_each_bit(set.words, [&](std::size_t e) {
    or_shifted_left(set.words, sums, e);
    or_shifted_right(set.words, diffs, e);
  });
  Counts c;
  c.sum_card = popcount(sums);
  const std::size_t magnitudes = popcount(diffs);
  c.diff_card = magnitudes == 0 ? 0 : 2 * (magnitudes - 1) + 1;
  return c;
}

/// Counts for a dense vector of any width.
inline Counts count(std::span<const Word> set) {
  std::vector<Word> sums(2 * set.size() + 1, 0);
  std::vector<Word> diffs(set.size(), 0);
  for_each_bit(set, [&](std::size_t e) {
    or_shifted_left(set, sums, e);
    or_shifted_right(set, diffs, e);
  });
  Counts c;
  c.sum_card = popcount(sums);
  const std::size_t magnitudes = popcount(diffs);
  c.diff_card = magnitudes == 0 ? 0 : 2 * (magnitudes - 1) + 1;
  return c;
}

/// Calls `f(std::integral_constant<size_t, W>)` with the smallest W in 1..4
/// that holds elements up to `max_element`; returns false if none fits.
template <typename F>
inline bool with_width(std::size_t max_element, F&& f) {
  const std::size_t words = max_element / 64 + 1;
  switch (words) {
    case 1: f(std::integral_constant<std::size_t, 1>{}); return true;
    case 2: f(std::integral_constant<std::size_t, 2>{}); return true;
    case 3: f(std::integral_constant<std::size_t, 3>{}); return true;
    case 4: f(std::integral_constant<std::size_t, 4>{}); return true;
    default: return false;
  }
}

}  // namespace mstd::kernel
