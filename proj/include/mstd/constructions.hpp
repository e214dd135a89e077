#pragma once

// Explicit set families: progressions and their unions, the K(m) family,
// the three-progression family {0,2} ∪ {3,7,...,4k-1} ∪ {4k,4k+2}, and the
// three-way partition of {1,...,124+m} into sum-dominant parts.

#include <cassert>
#include <string>
#include <vector>

#include "mstd/error.hpp"
#include "mstd/int_set.hpp"
#include "mstd/lemma_checks.hpp"

namespace mstd {

inline IntSet ap(Element start, Element diff, Element len) {
  if (len < 1) throw Error(ErrorCode::InvalidParameter, "len must be >= 1");
  return ArithProg{start, diff, len}.expand();
}

inline IntSet union_two_aps(const ArithProg& p1, const ArithProg& p2) {
  const IntSet a = p1.expand();
  const IntSet b = p2.expand();
  IntSet u = a.united(b);
  assert(p1.diff != p2.diff || a.intersected(b).empty() ||
         is_arithmetic_progression(u).has_value());
  return u;
}

/// {0,1,2,4} ∪ {7,...,m} ∪ {m+4, m+6, m+7}; sum-dominant with excess 1.
inline IntSet k_set(Element m) {
  if (m < 9) {
    throw Error(ErrorCode::InvalidParameter,
                "k_set needs m >= 9, got " + std::to_string(m));
  }
  if (m + 7 >= kUniverseCap) {
    throw Error(ErrorCode::UniverseOverflow, "k_set exceeds the universe cap");
  }
  std::vector<Element> out{0, 1, 2, 4};
  for (Element x = 7; x <= m; ++x) out.push_back(x);
  out.insert(out.end(), {m + 4, m + 6, m + 7});
  return IntSet(std::move(out));
}

inline IntSet nathanson_set(Element k) {
  if (k < 5) {
    throw Error(ErrorCode::InvalidParameter,
                "nathanson_set needs k >= 5, got " + std::to_string(k));
  }
  if (4 * k + 2 >= kUniverseCap) {
    throw Error(ErrorCode::UniverseOverflow,
                "nathanson_set exceeds the universe cap");
  }
  std::vector<Element> out{0, 2};
  for (Element x = 3; x <= 4 * k - 1; x += 4) out.push_back(x);
  out.insert(out.end(), {4 * k, 4 * k + 2});
  return IntSet(std::move(out));
}

// ---------------------------------------------------------------------------
// Three-way partition of {1, ..., 124+m}.

namespace partition_blocks {

inline const IntSet kL1{1, 2, 3, 4, 8, 9, 11, 13, 14, 15, 20};
inline const IntSet kR1{21, 26, 27, 28, 31, 33, 37, 38, 39, 40};
inline const IntSet kL2{5, 6, 7, 10, 12, 16, 17, 18, 19};
inline const IntSet kR2{22, 23, 24, 25, 29, 30, 32, 34, 35, 36};
/// The fixed sum-dominant third part.
inline const IntSet kS{66, 68, 69, 70, 73, 77, 78, 80};

inline constexpr Element kMinM = 21;

inline IntSet range(Element lo, Element hi, Element step = 1) {
  std::vector<Element> out;
  for (Element x = lo; x <= hi; x += step) out.push_back(x);
  return IntSet(std::move(out));
}

inline IntSet o11() { return IntSet{24, 62}.united(range(25, 61, 2)); }
inline IntSet o12(Element m) {
  return IntSet{63 + m, 101 + m}.united(range(64 + m, 100 + m, 2));
}
inline IntSet o21() {
  return IntSet{21, 22, 23, 63, 64, 65}.united(range(26, 60, 2));
}
inline IntSet o22(Element m) {
  return IntSet{60 + m, 61 + m, 62 + m, 102 + m, 103 + m, 104 + m}.united(
      range(65 + m, 99 + m, 2));
}

/// {66, ..., 59+m} minus the fixed part S; M1 and M2 split this window.
inline IntSet middle_window(Element m) {
  if (m < 7) return IntSet{};
  return range(66, 59 + m).without(kS);
}

}  // namespace partition_blocks

struct Partition3Spec {
  Element m = partition_blocks::kMinM;
  IntSet m1;
  IntSet m2;

  friend bool operator==(const Partition3Spec&,
                         const Partition3Spec&) = default;
};

struct Partition3Result {
  IntSet a1;
  IntSet a2;
  IntSet s;
  Element span = 0;  // 124 + m
};

struct ConstraintViolation {
  std::string constraint;
  std::vector<Element> positions;
  std::string message;
};

namespace detail {

struct ChainRule {
  const char* name;
  Element width;      // 2 for pairs, 3 for triplets
  Element max_apart;  // between starts of consecutive blocks
  Element first_lo, first_hi;
  Element last_lo, last_hi;
};

// Looks for a sequence of disjoint blocks of `width` consecutive integers in
// `set`, successive starts at most `max_apart` apart, beginning with a block
// inside [first_lo, first_hi] and ending with one inside [last_lo, last_hi].
inline std::optional<ConstraintViolation> check_chain(const IntSet& set,
                                                      const ChainRule& rule) {
  std::vector<Element> starts;
  for (Element x : set) {
    bool full = true;
    for (Element i = 1; i < rule.width && full; ++i) full = set.contains(x + i);
    if (full) starts.push_back(x);
  }
  const auto inside = [&](Element s, Element lo, Element hi) {
    return s >= lo && s + rule.width - 1 <= hi;
  };
  if (starts.empty()) {
    return ConstraintViolation{
        rule.name, {},
        "no block of " + std::to_string(rule.width) + " consecutive elements"};
  }
  std::vector<bool> reachable(starts.size(), false);
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (inside(starts[i], rule.first_lo, rule.first_hi)) {
      reachable[i] = true;
      continue;
    }
    for (std::size_t j = 0; j < i && !reachable[i]; ++j) {
      const Element apart = starts[i] - starts[j];
      reachable[i] = reachable[j] && apart >= rule.width &&
                     apart <= rule.max_apart;
    }
  }
  for (std::size_t i = 0; i < starts.size(); ++i) {
    if (reachable[i] && inside(starts[i], rule.last_lo, rule.last_hi)) {
      return std::nullopt;
    }
  }
  return ConstraintViolation{
      rule.name, starts,
      "no chain of blocks from [" + std::to_string(rule.first_lo) + ", " +
          std::to_string(rule.first_hi) + "] to [" +
          std::to_string(rule.last_lo) + ", " + std::to_string(rule.last_hi) +
          "] with steps <= " + std::to_string(rule.max_apart)};
}

}  // namespace detail

/// Every violated Partition3Spec invariant; empty means the spec is valid.
inline std::vector<ConstraintViolation> validate_partition_spec(
    const Partition3Spec& spec) {
  using namespace partition_blocks;
  std::vector<ConstraintViolation> out;
  if (spec.m < kMinM) {
    out.push_back({"m-range", {spec.m}, "m must be at least 21"});
    return out;
  }
  const Element m = spec.m;
  const IntSet window = middle_window(m);

  const IntSet both = spec.m1.intersected(spec.m2);
  if (!both.empty()) {
    out.push_back({"disjointness",
                   {both.begin(), both.end()},
                   "elements assigned to both M1 and M2"});
  }
  const IntSet all = spec.m1.united(spec.m2);
  const IntSet missing = window.without(all);
  if (!missing.empty()) {
    out.push_back({"coverage-missing",
                   {missing.begin(), missing.end()},
                   "window elements assigned to neither M1 nor M2"});
  }
  const IntSet extra = all.without(window);
  if (!extra.empty()) {
    out.push_back({"coverage-extra",
                   {extra.begin(), extra.end()},
                   "elements outside {66..59+m} \\ S"});
  }
  if (auto v = detail::check_chain(
          spec.m1, {"pair-chain", 2, 39, 66, 101, 24 + m, 59 + m})) {
    out.push_back(std::move(*v));
  }
  if (auto v = detail::check_chain(
          spec.m2, {"triplet-chain", 3, 40, 66, 105, 20 + m, 59 + m})) {
    out.push_back(std::move(*v));
  }
  return out;
}

class ConstraintViolationError : public Error {
 public:
  explicit ConstraintViolationError(std::vector<ConstraintViolation> v)
      : Error(ErrorCode::ConstraintViolation, summarize(v)),
        violations_(std::move(v)) {}

  const std::vector<ConstraintViolation>& violations() const noexcept {
    return violations_;
  }

 private:
  static std::string summarize(const std::vector<ConstraintViolation>& v) {
    std::string s = "invalid partition spec:";
    for (const auto& x : v) s += " " + x.constraint + " (" + x.message + ");";
    return s;
  }

  std::vector<ConstraintViolation> violations_;
};

/// A'1 = L1 ∪ O11 ∪ M1 ∪ O12 ∪ R'1, A'2 = L2 ∪ O21 ∪ M2 ∪ O22 ∪ R'2, with
/// R'i = Ri + m + 84; together with S they partition {1, ..., 124+m}.
inline Partition3Result partition3(const Partition3Spec& spec) {
  using namespace partition_blocks;
  auto violations = validate_partition_spec(spec);
  if (!violations.empty()) throw ConstraintViolationError(std::move(violations));
  const Element m = spec.m;
  Partition3Result r;
  r.a1 = kL1.united(o11()).united(spec.m1).united(o12(m)).united(
      kR1.translated(m + 84));
  r.a2 = kL2.united(o21()).united(spec.m2).united(o22(m)).united(
      kR2.translated(m + 84));
  r.s = kS;
  r.span = 124 + m;
  return r;
}

/// Deterministic valid spec for any m >= 21. M1 is a chain of pairs starting
/// at {71,72} and stepping by 30 until a pair lands in [24+m, 59+m]; M2 is
/// the rest of the window. At m = 21 this yields M1 = {71,72},
/// M2 = {67,74,75,76,79}.
inline Partition3Spec default_blocks(Element m) {
  using namespace partition_blocks;
  if (m < kMinM) {
    throw Error(ErrorCode::InvalidParameter,
                "default_blocks needs m >= 21, got " + std::to_string(m));
  }
  if (124 + m >= kUniverseCap) {
    throw Error(ErrorCode::UniverseOverflow, "partition exceeds the universe");
  }
  std::vector<Element> pairs;
  for (Element start = 71;; start += 30) {
    pairs.insert(pairs.end(), {start, start + 1});
    if (start >= 24 + m) break;
  }
  Partition3Spec spec;
  spec.m = m;
  spec.m1 = IntSet(std::move(pairs));
  spec.m2 = middle_window(m).without(spec.m1);
  return spec;
}

}  // namespace mstd
