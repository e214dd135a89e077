#include "mstd/sets.hpp"

#include <gtest/gtest.h>

#include <random>

#include "mstd/constructions.hpp"
#include "oracle.hpp"

namespace mstd {
namespace {

IntSet interval_without(Element lo, Element hi, std::vector<Element> holes) {
  std::vector<Element> out;
  for (Element x = lo; x <= hi; ++x)
    if (std::find(holes.begin(), holes.end(), x) == holes.end())
      out.push_back(x);
  return IntSet(out);
}

TEST(SumsetTest, SmallestTwoElementCase) {
  EXPECT_EQ(sumset(IntSet{0, 1}), (IntSet{0, 1, 2}));
}

TEST(SumsetTest, KNineFillsAllButOne) {
  // K+K = {0..2m+14} \ {2m+9} at m = 9.
  EXPECT_EQ(sumset(k_set(9)), interval_without(0, 32, {27}));
}

TEST(SumsetTest, HegartySetCardinality) {
  EXPECT_EQ(sumset(IntSet{0, 2, 3, 4, 7, 11, 12, 14}).size(), 26U);
}

TEST(SumsetTest, EndpointsDouble) {
  const IntSet a{5, 9, 40, 41};
  const IntSet s = sumset(a);
  EXPECT_EQ(s.min(), 10);
  EXPECT_EQ(s.max(), 82);
}

TEST(SumsetTest, EmptyIsAnError) {
  try {
    sumset(IntSet{});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::EmptySet);
  }
}

TEST(DiffsetTest, TwoElements) {
  const auto d = diffset(IntSet{0, 5});
  EXPECT_EQ(d.magnitudes, (IntSet{0, 5}));
  EXPECT_EQ(d.cardinality, 3);
}

TEST(DiffsetTest, KNineMissesOnlyMPlusOne) {
  const auto d = diffset(k_set(9));
  EXPECT_EQ(d.magnitudes, interval_without(0, 16, {10}));
  EXPECT_EQ(d.cardinality, 31);
}

TEST(DiffsetTest, HegartySetCardinality) {
  EXPECT_EQ(diffset(IntSet{0, 2, 3, 4, 7, 11, 12, 14}).cardinality, 25);
}

TEST(DiffsetTest, EmptyIsAnError) { EXPECT_THROW(diffset(IntSet{}), Error); }

TEST(ClassifyTest, ProgressionIsBalanced) {
  const auto c = classify(IntSet{3, 5, 7, 9, 11});
  EXPECT_EQ(c.kind, Kind::Balanced);
  EXPECT_EQ(c.excess, 0);
}

TEST(ClassifyTest, KNineHasExcessOne) {
  const auto c = classify(k_set(9));
  EXPECT_EQ(c.kind, Kind::SumDominant);
  EXPECT_EQ(c.excess, 1);
}

TEST(ClassifyTest, DifferenceDominant) {
  const auto c = classify(IntSet{0, 1, 3});
  EXPECT_EQ(c.kind, Kind::DifferenceDominant);
  EXPECT_EQ(c.sum_card, 6);
  EXPECT_EQ(c.diff_card, 7);
}

TEST(ClassifyTest, KindMatchesExcessSign) {
  EXPECT_EQ(kind_of_excess(3), Kind::SumDominant);
  EXPECT_EQ(kind_of_excess(0), Kind::Balanced);
  EXPECT_EQ(kind_of_excess(-1), Kind::DifferenceDominant);
}

TEST(SymmetryCenterTest, Examples) {
  EXPECT_EQ(symmetry_center(IntSet{3, 5, 7, 9, 11}), 14);
  EXPECT_EQ(symmetry_center(IntSet{5}), 10);
  EXPECT_EQ(symmetry_center(IntSet{0, 2, 3, 4, 7, 11, 12, 14}), std::nullopt);
  EXPECT_EQ(symmetry_center(IntSet{0, 1, 3, 4}), 4);
}

TEST(NormalizeAffineTest, Examples) {
  EXPECT_EQ(normalize_affine(IntSet{10, 12, 14}), (IntSet{0, 1, 2}));
  EXPECT_EQ(normalize_affine(IntSet{2, 3, 9, 10, 15}),
            (IntSet{0, 1, 7, 8, 13}));
  const IntSet moved = k_set(9).scaled(3).translated(100);
  EXPECT_EQ(normalize_affine(moved), k_set(9));
  EXPECT_EQ(classify(moved).excess, 1);
}

TEST(NormalizeAffineTest, DegenerateInputs) {
  for (const IntSet& a : {IntSet{}, IntSet{4}}) {
    try {
      normalize_affine(a);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.code(), ErrorCode::DegenerateSet);
    }
  }
}

// Property: kernel counts equal the naive double loop, both on random sets
// (both storage paths get exercised) and on every subset of {0..11}.
TEST(SetsPropertyTest, KernelMatchesNaiveOracle) {
  std::mt19937_64 rng(0x5eed);
  for (int trial = 0; trial < 3000; ++trial) {
    const int max_el = 1 + static_cast<int>(rng() % 200);
    const int n = 1 + static_cast<int>(rng() % 40);
    std::vector<Element> v;
    for (int i = 0; i < n; ++i) v.push_back(rng() % (max_el + 1));
    const IntSet a(v);
    const auto expect = oracle::counts(a);
    const auto got = classify(a);
    ASSERT_EQ(got.sum_card, expect.sums) << format_set_literal(a);
    ASSERT_EQ(got.diff_card, expect.diffs) << format_set_literal(a);
    const auto s = sumset(a);
    ASSERT_EQ(std::set<Element>(s.begin(), s.end()), oracle::sumset(a));
  }
  for (std::uint64_t mask = 1; mask < (1U << 12); ++mask) {
    const auto v = oracle::from_mask(mask);
    const IntSet a(std::vector<Element>(v.begin(), v.end()));
    const auto expect = oracle::counts(v);
    const auto got = classify(a);
    ASSERT_EQ(got.sum_card, expect.sums);
    ASSERT_EQ(got.diff_card, expect.diffs);
  }
}

TEST(SetsPropertyTest, CardinalityBounds) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Element> v;
    const int n = 1 + static_cast<int>(rng() % 30);
    for (int i = 0; i < n; ++i) v.push_back(rng() % 1000);
    const IntSet a(v);
    const auto k = static_cast<std::int64_t>(a.size());
    const auto c = classify(a);
    EXPECT_LE(c.sum_card, k * (k + 1) / 2);
    EXPECT_LE(c.diff_card, k * (k - 1) + 1);
    EXPECT_GE(c.sum_card, 2 * k - 1);
  }
}

TEST(SetsPropertyTest, SymmetricImpliesBalanced) {
  for (std::uint64_t mask = 1; mask < (1U << 14); ++mask) {
    const auto v = oracle::from_mask(mask);
    const IntSet a(std::vector<Element>(v.begin(), v.end()));
    if (symmetry_center(a)) {
      ASSERT_EQ(classify(a).kind, Kind::Balanced);
    }
  }
}

TEST(SetsPropertyTest, NormalizationPreservesClassification) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    std::vector<Element> v;
    const int n = 2 + static_cast<int>(rng() % 12);
    const Element scale = 1 + rng() % 50;
    const Element shift = rng() % 500;
    for (int i = 0; i < n; ++i) v.push_back(shift + scale * (rng() % 180));
    const IntSet a(v);
    if (a.size() < 2) continue;
    const IntSet norm = normalize_affine(a);
    EXPECT_EQ(classify(norm), classify(a));
    EXPECT_EQ(norm.min(), 0);
    Element g = 0;
    for (Element gap : norm.gaps()) g = std::gcd(g, gap);
    EXPECT_EQ(g, 1);
  }
}

TEST(SetsPropertyTest, ProgressionsAreBalanced) {
  for (Element start : {0, 3, 17})
    for (Element d = 1; d <= 6; ++d)
      for (Element len = 1; len <= 25; ++len)
        EXPECT_EQ(classify(ap(start, d, len)).kind, Kind::Balanced);
}

TEST(SetsTest, LargeUniverseStaysExact) {
  const IntSet a{0, 1, 3, kUniverseCap - 1};
  const auto expect = oracle::counts(a);
  const auto c = classify(a);
  EXPECT_EQ(c.sum_card, expect.sums);
  EXPECT_EQ(c.diff_card, expect.diffs);
}

}  // namespace
}  // namespace mstd
