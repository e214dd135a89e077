#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mstd/error.hpp"

namespace mstd {

using Element = std::int64_t;

/// Every element of an IntSet must be strictly below this cap.
inline constexpr Element kUniverseCap = Element{1} << 24;

/// Finite set of nonnegative integers, kept sorted and duplicate free.
class IntSet {
 public:
  using const_iterator = std::vector<Element>::const_iterator;

  IntSet() = default;

  explicit IntSet(std::vector<Element> elements) : elems_(std::move(elements)) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (!elems_.empty()) {
      if (elems_.front() < 0) {
        throw Error(ErrorCode::InvalidParameter,
                    "negative element " + std::to_string(elems_.front()));
      }
      if (elems_.back() >= kUniverseCap) {
        throw Error(ErrorCode::UniverseOverflow,
                    "element " + std::to_string(elems_.back()) +
                        " exceeds the universe cap 2^24");
      }
    }
  }

  IntSet(std::initializer_list<Element> elements)
      : IntSet(std::vector<Element>(elements)) {}

  /// Builds the set of indices whose bit is set in `words`.
  static IntSet from_bits(std::span<const std::uint64_t> words) {
    std::vector<Element> out;
    for (std::size_t i = 0; i < words.size(); ++i) {
      std::uint64_t w = words[i];
      while (w != 0) {
        const int bit = __builtin_ctzll(w);
        out.push_back(static_cast<Element>(i * 64 + bit));
        w &= w - 1;
      }
    }
    IntSet s;
    s.elems_ = std::move(out);
    return s;
  }

  std::span<const Element> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  const_iterator begin() const noexcept { return elems_.begin(); }
  const_iterator end() const noexcept { return elems_.end(); }

  Element min() const {
    require_nonempty();
    return elems_.front();
  }
  Element max() const {
    require_nonempty();
    return elems_.back();
  }

  bool contains(Element x) const {
    return std::binary_search(elems_.begin(), elems_.end(), x);
  }

  /// Consecutive differences m2-m1, m3-m2, ...
  std::vector<Element> gaps() const {
    std::vector<Element> out;
    for (std::size_t i = 1; i < elems_.size(); ++i) {
      out.push_back(elems_[i] - elems_[i - 1]);
    }
    return out;
  }

  IntSet translated(Element by) const {
    std::vector<Element> out(elems_);
    for (auto& x : out) x += by;
    return IntSet(std::move(out));
  }

  IntSet scaled(Element factor) const {
    std::vector<Element> out(elems_);
    for (auto& x : out) x *= factor;
    return IntSet(std::move(out));
  }

  IntSet united(const IntSet& other) const {
    std::vector<Element> out;
    out.reserve(size() + other.size());
    std::set_union(begin(), end(), other.begin(), other.end(),
                   std::back_inserter(out));
    IntSet s;
    s.elems_ = std::move(out);
    return s;
  }

  IntSet intersected(const IntSet& other) const {
    std::vector<Element> out;
    std::set_intersection(begin(), end(), other.begin(), other.end(),
                          std::back_inserter(out));
    IntSet s;
    s.elems_ = std::move(out);
    return s;
  }

  IntSet without(const IntSet& other) const {
    std::vector<Element> out;
    std::set_difference(begin(), end(), other.begin(), other.end(),
                        std::back_inserter(out));
    IntSet s;
    s.elems_ = std::move(out);
    return s;
  }

  /// Dense bit-vector image with at least `min_bits` bits.
  std::vector<std::uint64_t> to_bits(std::size_t min_bits = 0) const {
    const std::size_t bits =
        std::max<std::size_t>(min_bits, empty() ? 0 : elems_.back() + 1);
    std::vector<std::uint64_t> words((bits + 63) / 64, 0);
    for (Element x : elems_) words[x / 64] |= std::uint64_t{1} << (x % 64);
    return words;
  }

  friend bool operator==(const IntSet&, const IntSet&) = default;
  friend auto operator<=>(const IntSet& a, const IntSet& b) {
    return std::lexicographical_compare_three_way(a.begin(), a.end(),
                                                  b.begin(), b.end());
  }

 private:
  void require_nonempty() const {
    if (elems_.empty()) throw Error(ErrorCode::EmptySet, "set is empty");
  }

  std::vector<Element> elems_;
};

/// {0,1,2,...} form, no spaces.
inline std::string format_set_literal(const IntSet& a) {
  std::string out = "{";
  bool first = true;
  for (Element x : a) {
    if (!first) out += ',';
    out += std::to_string(x);
    first = false;
  }
  out += '}';
  return out;
}

namespace detail {

inline bool is_space(char c) {
  return c == ' ' || c == '\t' || c == '\n' || c == '\r';
}

inline std::size_t skip_space(std::string_view text, std::size_t pos) {
  while (pos < text.size() && is_space(text[pos])) ++pos;
  return pos;
}

/// Reads an optionally signed decimal integer at `pos`; advances `pos`.
inline std::optional<Element> read_integer(std::string_view text,
                                           std::size_t& pos) {
  std::size_t p = pos;
  bool negative = false;
  if (p < text.size() && (text[p] == '-' || text[p] == '+')) {
    negative = text[p] == '-';
    ++p;
  }
  const std::size_t digits_begin = p;
  Element value = 0;
  while (p < text.size() && text[p] >= '0' && text[p] <= '9') {
    value = value * 10 + (text[p] - '0');
    if (value > (Element{1} << 40)) {
      throw ParseError(digits_begin, "integer too large");
    }
    ++p;
  }
  if (p == digits_begin) return std::nullopt;
  pos = p;
  return negative ? -value : value;
}

}  // namespace detail

/// Accepts `{n1,n2,...}` or a bare comma/whitespace separated list.
/// Duplicates collapse; order is irrelevant.
inline IntSet parse_set_literal(std::string_view text) {
  std::size_t pos = detail::skip_space(text, 0);
  const bool braced = pos < text.size() && text[pos] == '{';
  if (braced) ++pos;

  std::vector<Element> values;
  bool expect_value = true;
  bool closed = false;
  while (true) {
    pos = detail::skip_space(text, pos);
    if (pos >= text.size()) break;
    const char c = text[pos];
    if (braced && c == '}') {
      if (expect_value && !values.empty()) {
        throw ParseError(pos, "dangling comma");
      }
      closed = true;
      ++pos;
      break;
    }
    if (c == ',') {
      if (expect_value) throw ParseError(pos, "unexpected comma");
      expect_value = true;
      ++pos;
      continue;
    }
    const std::size_t start = pos;
    auto value = detail::read_integer(text, pos);
    if (!value) throw ParseError(start, "malformed token");
    if (*value < 0) throw ParseError(start, "negative element");
    if (*value >= kUniverseCap) {
      throw Error(ErrorCode::UniverseOverflow,
                  "element " + std::to_string(*value) +
                      " exceeds the universe cap 2^24");
    }
    if (pos < text.size() && !detail::is_space(text[pos]) &&
        text[pos] != ',' && text[pos] != '}') {
      throw ParseError(pos, "malformed token");
    }
    values.push_back(*value);
    expect_value = false;
  }
  if (braced && !closed) throw ParseError(text.size(), "missing '}'");
  pos = detail::skip_space(text, pos);
  if (pos != text.size()) throw ParseError(pos, "trailing characters");
  if (!braced && expect_value && !values.empty()) {
    throw ParseError(text.size(), "dangling comma");
  }
  return IntSet(std::move(values));
}

}  // namespace mstd
