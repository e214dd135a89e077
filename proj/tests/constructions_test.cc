#include "mstd/constructions.hpp"

#include <gtest/gtest.h>

#include "mstd/sets.hpp"
#include "oracle.hpp"

namespace mstd {
namespace {

using partition_blocks::kS;

bool has_violation(const std::vector<ConstraintViolation>& v,
                   const std::string& name) {
  for (const auto& x : v)
    if (x.constraint == name) return true;
  return false;
}

TEST(ApTest, Expansion) {
  EXPECT_EQ(ap(3, 2, 5), (IntSet{3, 5, 7, 9, 11}));
  EXPECT_EQ(ap(0, 1, 1), IntSet{0});
  EXPECT_EQ(ap(7, 4, 5), (IntSet{7, 11, 15, 19, 23}));
  try {
    ap(0, 1, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
  }
}

TEST(UnionTwoApsTest, Examples) {
  EXPECT_EQ(union_two_aps({0, 1, 3}, {1, 1, 3}), (IntSet{0, 1, 2, 3}));
  EXPECT_EQ(union_two_aps({0, 1, 4}, {10, 1, 2}),
            (IntSet{0, 1, 2, 3, 10, 11}));
}

TEST(UnionTwoApsTest, OverlappingSameDifferenceIsAProgression) {
  for (Element d = 1; d <= 4; ++d)
    for (Element a = 0; a <= 12; ++a)
      for (Element la = 1; la <= 6; ++la)
        for (Element b = 0; b <= 12; ++b)
          for (Element lb = 1; lb <= 6; ++lb) {
            const ArithProg p{a, d, la}, q{b, d, lb};
            if (p.expand().intersected(q.expand()).empty()) continue;
            const IntSet u = union_two_aps(p, q);
            ASSERT_TRUE(is_arithmetic_progression(u).has_value());
            ASSERT_EQ(classify(u).kind, Kind::Balanced);
          }
}

TEST(KSetTest, MNine) {
  EXPECT_EQ(k_set(9), (IntSet{0, 1, 2, 4, 7, 8, 9, 13, 15, 16}));
  EXPECT_EQ(classify(k_set(9)).excess, 1);
}

TEST(KSetTest, MatchesComplementDescription) {
  // {0..m+7} \ {3,5,6,m+1,m+2,m+3,m+5}
  for (Element m = 9; m <= 40; ++m) {
    const IntSet full = ap(0, 1, m + 8);
    const IntSet holes{3, 5, 6, m + 1, m + 2, m + 3, m + 5};
    EXPECT_EQ(k_set(m), full.without(holes));
    EXPECT_EQ(k_set(m).size(), static_cast<std::size_t>(m + 1));
  }
}

TEST(KSetTest, ExcessOneThroughTwoHundred) {
  EXPECT_EQ(oracle::counts(k_set(100)).excess(), 1);
  for (Element m = 9; m <= 200; ++m) {
    const auto c = classify(k_set(m));
    ASSERT_EQ(c.kind, Kind::SumDominant) << m;
    ASSERT_EQ(c.excess, 1) << m;
  }
}

TEST(KSetTest, RejectsSmallM) {
  try {
    k_set(8);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InvalidParameter);
  }
}

TEST(NathansonSetTest, Shape) {
  EXPECT_EQ(nathanson_set(5), (IntSet{0, 2, 3, 7, 11, 15, 19, 20, 22}));
  EXPECT_THROW(nathanson_set(4), Error);
}

// The family as written is symmetric about 4k+2, so it is balanced; the
// three-progression set {0,2,4} ∪ {3,7,...,4k-1} ∪ {4k,4k+2} is the one
// with excess +1.
TEST(NathansonSetTest, AsWrittenIsSymmetricAndBalanced) {
  for (Element k = 5; k <= 100; ++k) {
    const IntSet a = nathanson_set(k);
    ASSERT_EQ(symmetry_center(a), 4 * k + 2);
    ASSERT_EQ(oracle::counts(a).excess(), 0) << k;
    ASSERT_EQ(classify(a).kind, Kind::Balanced) << k;
    ASSERT_EQ(classify(a.united(IntSet{4})).excess, 1) << k;
  }
}

TEST(PartitionSpecTest, ExampleIsValid) {
  const Partition3Spec spec{21, {71, 72}, {67, 74, 75, 76, 79}};
  EXPECT_TRUE(validate_partition_spec(spec).empty());
}

TEST(PartitionSpecTest, Disjointness) {
  const Partition3Spec spec{21, {71, 72}, {71, 74, 75, 76, 79}};
  const auto v = validate_partition_spec(spec);
  ASSERT_TRUE(has_violation(v, "disjointness"));
  for (const auto& x : v) {
    if (x.constraint == "disjointness") {
      EXPECT_EQ(x.positions, std::vector<Element>{71});
    }
  }
  EXPECT_TRUE(has_violation(v, "coverage-missing"));  // 67 dropped
}

TEST(PartitionSpecTest, MovingSixtySevenKeepsBothChains) {
  // {74,75,76} is still a consecutive triplet inside M2.
  const Partition3Spec spec{21, {67, 71, 72}, {74, 75, 76, 79}};
  EXPECT_TRUE(validate_partition_spec(spec).empty());
  const auto r = partition3(spec);
  EXPECT_EQ(oracle::counts(r.a1).excess(), 2);
  EXPECT_EQ(oracle::counts(r.a2).excess(), 2);
}

TEST(PartitionSpecTest, TripletChainViolation) {
  const Partition3Spec spec{21, {71, 72, 74}, {67, 75, 76, 79}};
  const auto v = validate_partition_spec(spec);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].constraint, "triplet-chain");
}

TEST(PartitionSpecTest, PairChainViolation) {
  const Partition3Spec spec{21, {67, 71}, {72, 74, 75, 76, 79}};
  const auto v = validate_partition_spec(spec);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].constraint, "pair-chain");
}

TEST(PartitionSpecTest, PairsMoreThanThirtyNineApartBreakTheChain) {
  // m = 80: window {66..139}; last pair must sit in [104, 139].
  const Element m = 80;
  const IntSet window = partition_blocks::middle_window(m);
  Partition3Spec ok{m, {71, 72, 110, 111}, {}};
  ok.m2 = window.without(ok.m1);
  EXPECT_TRUE(validate_partition_spec(ok).empty());
  Partition3Spec far{m, {71, 72, 111, 112}, {}};  // 40 apart
  far.m2 = window.without(far.m1);
  const auto v = validate_partition_spec(far);
  ASSERT_EQ(v.size(), 1U);
  EXPECT_EQ(v[0].constraint, "pair-chain");
}

TEST(PartitionSpecTest, ReservedElementsAndSmallM) {
  Partition3Spec spec{21, {66, 71, 72}, {67, 74, 75, 76, 79}};
  const auto v = validate_partition_spec(spec);
  ASSERT_TRUE(has_violation(v, "coverage-extra"));
  EXPECT_TRUE(has_violation(validate_partition_spec({20, {}, {}}), "m-range"));
}

TEST(Partition3Test, ReproducesWorkedExample) {
  const auto r = partition3({21, {71, 72}, {67, 74, 75, 76, 79}});
  IntSet a1 = IntSet{1, 2, 3, 4, 8, 9, 11, 13, 14, 15, 20, 24}
                  .united(ap(25, 2, 19))
                  .united(IntSet{62, 71, 72, 84})
                  .united(ap(85, 2, 19))
                  .united(IntSet{122, 126, 131, 132, 133, 136, 138, 142, 143,
                                 144, 145});
  IntSet a2 = IntSet{5, 6, 7, 10, 12, 16, 17, 18, 19, 21, 22, 23}
                  .united(ap(26, 2, 18))
                  .united(IntSet{63, 64, 65, 67, 74, 75, 76, 79, 81, 82, 83})
                  .united(ap(86, 2, 18))
                  .united(IntSet{123, 124, 125})
                  .united(IntSet{127, 128, 129, 130, 134, 135, 137, 139, 140,
                                 141});
  EXPECT_EQ(r.a1, a1);
  EXPECT_EQ(r.a2, a2);
  EXPECT_EQ(r.s, kS);
  EXPECT_EQ(r.span, 145);
  EXPECT_EQ(classify(r.a1).excess, 2);
  EXPECT_EQ(classify(r.a2).excess, 2);
  EXPECT_EQ(classify(r.s).excess, 1);
}

TEST(Partition3Test, InvalidSpecThrowsWithViolations) {
  try {
    partition3({21, {71, 72}, {71, 74, 75, 76, 79}});
    FAIL();
  } catch (const ConstraintViolationError& e) {
    EXPECT_EQ(e.code(), ErrorCode::ConstraintViolation);
    EXPECT_TRUE(has_violation(e.violations(), "disjointness"));
  }
}

TEST(DefaultBlocksTest, MTwentyOneIsTheWorkedExample) {
  const auto spec = default_blocks(21);
  EXPECT_EQ(spec.m1, (IntSet{71, 72}));
  EXPECT_EQ(spec.m2, (IntSet{67, 74, 75, 76, 79}));
}

TEST(DefaultBlocksTest, ValidAndSumDominantForManyM) {
  for (Element m = 21; m <= 200; ++m) {
    const auto spec = default_blocks(m);
    ASSERT_TRUE(validate_partition_spec(spec).empty()) << m;
    const auto r = partition3(spec);
    ASSERT_EQ(r.a1.size() + r.a2.size() + r.s.size(),
              static_cast<std::size_t>(124 + m));
    ASSERT_EQ(r.a1.united(r.a2).united(r.s), ap(1, 1, 124 + m)) << m;
    ASSERT_TRUE(r.a1.intersected(r.a2).empty());
    for (const IntSet* p : {&r.a1, &r.a2, &r.s})
      ASSERT_EQ(classify(*p).kind, Kind::SumDominant) << m;
  }
  EXPECT_THROW(default_blocks(20), Error);
}

TEST(DefaultBlocksTest, OracleAgreesAtSixty) {
  const auto r = partition3(default_blocks(60));
  for (const IntSet* p : {&r.a1, &r.a2, &r.s})
    EXPECT_GT(oracle::counts(*p).excess(), 0);
}

}  // namespace
}  // namespace mstd
