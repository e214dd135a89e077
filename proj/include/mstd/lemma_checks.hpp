#pragma once

// Decidable sufficient conditions for a set not being sum-dominant, plus
// arithmetic progression recognition.

#include <optional>
#include <string>
#include <vector>

#include "mstd/error.hpp"
#include "mstd/int_set.hpp"
#include "mstd/sets.hpp"

namespace mstd {

/// {start, start+diff, ..., start+(len-1)*diff}.
struct ArithProg {
  Element start = 0;
  Element diff = 1;
  Element len = 1;

  Element min() const { return start; }
  Element max() const { return start + (len - 1) * diff; }

  void validate() const {
    if (start < 0) {
      throw Error(ErrorCode::InvalidParameter, "progression start < 0");
    }
    if (diff < 1) {
      throw Error(ErrorCode::InvalidParameter, "progression diff < 1");
    }
    if (len < 1) {
      throw Error(ErrorCode::InvalidParameter, "progression len < 1");
    }
    if (max() >= kUniverseCap) {
      throw Error(ErrorCode::UniverseOverflow,
                  "progression exceeds the universe cap 2^24");
    }
  }

  IntSet expand() const {
    validate();
    std::vector<Element> out;
    out.reserve(static_cast<std::size_t>(len));
    for (Element i = 0; i < len; ++i) out.push_back(start + i * diff);
    return IntSet(std::move(out));
  }

  friend bool operator==(const ArithProg&, const ArithProg&) = default;
};

inline std::optional<ArithProg> is_arithmetic_progression(const IntSet& a) {
  if (a.empty()) throw Error(ErrorCode::EmptySet, "set is empty");
  if (a.size() == 1) return ArithProg{a.min(), 1, 1};
  const auto gaps = a.gaps();
  for (Element g : gaps)
    if (g != gaps.front()) return std::nullopt;
  return ArithProg{a.min(), gaps.front(), static_cast<Element>(a.size())};
}

enum class Guarantee { NotSumDominant };

struct LemmaVerdict {
  bool applies = false;
  std::optional<Guarantee> guarantee;

  static LemmaVerdict holds() { return {true, Guarantee::NotSumDominant}; }
  static LemmaVerdict fails() { return {}; }

  friend bool operator==(const LemmaVerdict&, const LemmaVerdict&) = default;
};

namespace detail {

inline void require_two(const IntSet& a) {
  if (a.size() < 2) {
    throw Error(ErrorCode::DegenerateSet,
                "lemma conditions need at least two elements");
  }
}

}  // namespace detail

/// Every consecutive gap is at most 2.
inline LemmaVerdict ms_condition1(const IntSet& a) {
  detail::require_two(a);
  for (Element g : a.gaps())
    if (g > 2) return LemmaVerdict::fails();
  return LemmaVerdict::holds();
}

/// Gaps lie in {1, m}, and the first and last maximal runs of 1-gaps each
/// have length at least m-1. A set with no 1-gap is an AP of difference m
/// and passes vacuously.
inline LemmaVerdict ms_condition2(const IntSet& a, Element m) {
  if (m < 2) {
    throw Error(ErrorCode::InvalidParameter,
                "m must be at least 2, got " + std::to_string(m));
  }
  detail::require_two(a);
  const auto gaps = a.gaps();
  std::vector<Element> runs;  // lengths of maximal runs of 1-gaps
  Element run = 0;
  for (Element g : gaps) {
    if (g != 1 && g != m) return LemmaVerdict::fails();
    if (g == 1) {
      ++run;
    } else if (run > 0) {
      runs.push_back(run);
      run = 0;
    }
  }
  if (run > 0) runs.push_back(run);
  if (runs.empty()) return LemmaVerdict::holds();
  if (runs.front() < m - 1 || runs.back() < m - 1) return LemmaVerdict::fails();
  return LemmaVerdict::holds();
}

/// The unique gap value other than 1, when exactly one such value occurs.
inline std::optional<Element> infer_ms_parameter(const IntSet& a) {
  std::optional<Element> found;
  for (Element g : a.gaps()) {
    if (g == 1) continue;
    if (found && *found != g) return std::nullopt;
    found = g;
  }
  return found;
}

/// |(B ∪ {x}) + (B ∪ {x})| - |B + B|.
inline std::int64_t new_sums_on_extend(const IntSet& base,
                                       Element extension_point) {
  if (base.empty()) throw Error(ErrorCode::EmptySet, "base set is empty");
  if (extension_point < 0) {
    throw Error(ErrorCode::InvalidParameter, "extension point is negative");
  }
  if (base.contains(extension_point)) {
    throw Error(ErrorCode::InvalidParameter,
                "extension point " + std::to_string(extension_point) +
                    " already in the base set");
  }
  const IntSet extended = base.united(IntSet{extension_point});
  return static_cast<std::int64_t>(sumset(extended).size()) -
         static_cast<std::int64_t>(sumset(base).size());
}

}  // namespace mstd
