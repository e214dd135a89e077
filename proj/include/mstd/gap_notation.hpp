#pragma once

// Gap notation (m1 | a1, ..., a_{n-1}): the minimum followed by the
// consecutive differences of the sorted elements.

#include <string>
#include <string_view>
#include <vector>

#include "mstd/error.hpp"
#include "mstd/int_set.hpp"

namespace mstd {

struct GapNotation {
  Element origin = 0;
  std::vector<Element> gaps;  // each >= 1

  static GapNotation of(const IntSet& a) {
    if (a.empty()) throw Error(ErrorCode::EmptySet, "set is empty");
    return {a.min(), a.gaps()};
  }

  IntSet to_set() const {
    if (origin < 0) {
      throw Error(ErrorCode::InvalidParameter,
                  "origin " + std::to_string(origin) + " is negative");
    }
    std::vector<Element> out{origin};
    Element x = origin;
    for (Element g : gaps) {
      x += g;
      if (x >= kUniverseCap) {
        throw Error(ErrorCode::UniverseOverflow,
                    "element exceeds the universe cap 2^24");
      }
      out.push_back(x);
    }
    return IntSet(std::move(out));
  }

  friend bool operator==(const GapNotation&, const GapNotation&) = default;
};

inline std::string format_gap_notation(const GapNotation& g) {
  std::string out = "(" + std::to_string(g.origin) + " |";
  for (std::size_t i = 0; i < g.gaps.size(); ++i) {
    out += i == 0 ? " " : ", ";
    out += std::to_string(g.gaps[i]);
  }
  out += ')';
  return out;
}

inline std::string format_gap_notation(const IntSet& a) {
  return format_gap_notation(GapNotation::of(a));
}

/// Parses `(INT | POSINT, POSINT, ...)`; `(INT |)` is a singleton.
inline GapNotation parse_gap_notation(std::string_view text) {
  using detail::skip_space;
  std::size_t pos = skip_space(text, 0);
  if (pos >= text.size() || text[pos] != '(') {
    throw ParseError(pos, "expected '('");
  }
  pos = skip_space(text, pos + 1);

  GapNotation out;
  const std::size_t origin_at = pos;
  auto origin = detail::read_integer(text, pos);
  if (!origin) throw ParseError(origin_at, "expected origin integer");
  out.origin = *origin;

  pos = skip_space(text, pos);
  if (pos >= text.size() || text[pos] != '|') {
    throw ParseError(pos, "expected '|'");
  }
  pos = skip_space(text, pos + 1);

  bool expect_gap = false;
  while (true) {
    if (pos >= text.size()) throw ParseError(pos, "unbalanced parentheses");
    if (text[pos] == ')') {
      if (expect_gap) throw ParseError(pos, "dangling comma");
      ++pos;
      break;
    }
    if (!out.gaps.empty() && !expect_gap) {
      if (text[pos] != ',') throw ParseError(pos, "expected ',' or ')'");
      expect_gap = true;
      pos = skip_space(text, pos + 1);
      continue;
    }
    const std::size_t gap_at = pos;
    auto gap = detail::read_integer(text, pos);
    if (!gap) throw ParseError(gap_at, "malformed gap");
    if (*gap <= 0) throw ParseError(gap_at, "gaps must be positive");
    out.gaps.push_back(*gap);
    expect_gap = false;
    pos = skip_space(text, pos);
  }
  pos = skip_space(text, pos);
  if (pos != text.size()) {
    throw ParseError(pos, text[pos] == ')' ? "unbalanced parentheses"
                                           : "trailing characters");
  }
  return out;
}

/// Either notation: `(` selects gap notation, anything else a set literal.
inline IntSet parse_any_set(std::string_view text) {
  const std::size_t pos = detail::skip_space(text, 0);
  if (pos < text.size() && text[pos] == '(') {
    return parse_gap_notation(text).to_set();
  }
  return parse_set_literal(text);
}

}  // namespace mstd
