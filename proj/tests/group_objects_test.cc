// Copyright 2026 The wreathrep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "wreathrep/group_objects.h"

#include <gtest/gtest.h>

#include <random>
#include <set>

namespace wreathrep {
namespace {

GroupedObject Matching(std::vector<std::vector<int>> one_based) {
  for (auto& b : one_based) {
    for (int& p : b) --p;
  }
  return GroupedObject(FamilyKind::kC, std::move(one_based));
}

Permutation RandomPermutation(int size, std::mt19937& rng) {
  std::vector<int> image(static_cast<std::size_t>(size));
  std::iota(image.begin(), image.end(), 0);
  std::shuffle(image.begin(), image.end(), rng);
  return Permutation(image);
}

TEST(GroupObjectsTest, SubgroupOrders) {
  EXPECT_EQ(SubgroupOrder(Family{FamilyKind::kC, 2, 3}), 48);
  EXPECT_EQ(SubgroupOrder(Family{FamilyKind::kD, 3, 2}), 18);
  EXPECT_EQ(SubgroupOrder(Family{FamilyKind::kC, 3, 2}), 72);
  // C_{2,n} = D_{2,n} = B_n, order 2^n n!.
  for (int n = 1; n <= 6; ++n) {
    const BigInt b = boost::multiprecision::pow(BigInt(2), n) * Factorial(n);
    EXPECT_EQ(SubgroupOrder(Family{FamilyKind::kC, 2, n}), b);
    EXPECT_EQ(SubgroupOrder(Family{FamilyKind::kD, 2, n}), b);
  }
  EXPECT_THROW(SubgroupOrder(Family{FamilyKind::kC, 1, 3}), Error);
}

TEST(GroupObjectsTest, EnumerateExamples) {
  const auto matchings = EnumerateObjects(Family{FamilyKind::kC, 2, 2});
  ASSERT_EQ(matchings.size(), 3u);
  EXPECT_EQ(matchings[0].ToString(), "12|34");
  EXPECT_EQ(matchings[1].ToString(), "13|24");
  EXPECT_EQ(matchings[2].ToString(), "14|23");
  // 6!/72 = 10 = binomial(6,3)/2.
  EXPECT_EQ(EnumerateObjects(Family{FamilyKind::kC, 3, 2}).size(), 10u);
  EXPECT_EQ(EnumerateObjects(Family{FamilyKind::kD, 3, 2}).size(), 40u);
}

TEST(GroupObjectsTest, OrbitStabilizer) {
  for (const Family f : {Family{FamilyKind::kC, 2, 4}, Family{FamilyKind::kC, 3, 3},
                         Family{FamilyKind::kC, 4, 2}, Family{FamilyKind::kD, 3, 3},
                         Family{FamilyKind::kD, 4, 2}, Family{FamilyKind::kD, 2, 3}}) {
    const auto objects = EnumerateObjects(f);
    EXPECT_EQ(BigInt(objects.size()) * SubgroupOrder(f), Factorial(f.degree()));
    const std::set<GroupedObject> distinct(objects.begin(), objects.end());
    EXPECT_EQ(distinct.size(), objects.size());
  }
}

TEST(GroupObjectsTest, EnumerationCap) {
  try {
    EnumerateObjects(Family{FamilyKind::kC, 3, 4}, 1000);
    FAIL();
  } catch (const TooLargeError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kTooLarge);
    EXPECT_EQ(e.count(), 15400);
  }
}

TEST(GroupObjectsTest, CycleDecompositionsAreDirected) {
  const GroupedObject a(FamilyKind::kD, {{0, 1, 2}, {3, 4, 5}});
  const GroupedObject rotated(FamilyKind::kD, {{4, 5, 3}, {1, 2, 0}});
  const GroupedObject reversed(FamilyKind::kD, {{0, 2, 1}, {3, 4, 5}});
  EXPECT_EQ(a, rotated);
  EXPECT_NE(a, reversed);
  const GroupedObject block(FamilyKind::kC, {{2, 1, 0}, {5, 3, 4}});
  EXPECT_EQ(block.Blocks(), (std::vector<std::vector<int>>{{0, 1, 2}, {3, 4, 5}}));
  EXPECT_THROW(GroupedObject(FamilyKind::kC, {{0, 1}, {1, 2}}), Error);
}

TEST(GroupObjectsTest, ActExamples) {
  const GroupedObject x = Matching({{1, 3}, {2, 4}});
  EXPECT_EQ(Act(Permutation::Identity(4), x), x);
  EXPECT_EQ(Act(Permutation::FromCycles(4, {{1, 2}}), Matching({{1, 2}, {3, 4}})),
            Matching({{1, 2}, {3, 4}}));
  // (1 2 3 4): {1,3} -> {2,4}, {2,4} -> {3,1}.
  EXPECT_EQ(Act(Permutation::FromCycles(4, {{1, 2, 3, 4}}), x), x);
  EXPECT_EQ(Act(Permutation::FromCycles(4, {{1, 2, 3, 4}}), Matching({{1, 2}, {3, 4}})),
            Matching({{1, 4}, {2, 3}}));
  try {
    Act(Permutation::Identity(5), x);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSizeMismatch);
  }
}

TEST(GroupObjectsTest, ActIsAGroupAction) {
  std::mt19937 rng(7);
  for (const Family f : {Family{FamilyKind::kC, 3, 3}, Family{FamilyKind::kD, 3, 3},
                         Family{FamilyKind::kD, 4, 2}}) {
    const auto objects = EnumerateObjects(f);
    std::uniform_int_distribution<std::size_t> pick(0, objects.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const Permutation g = RandomPermutation(f.degree(), rng);
      const Permutation h = RandomPermutation(f.degree(), rng);
      const GroupedObject& x = objects[pick(rng)];
      EXPECT_EQ(Act(g * h, x), Act(g, Act(h, x)));
      EXPECT_EQ(Act(g.Inverse(), Act(g, x)), x);
    }
  }
}

TEST(GroupObjectsTest, PermutationCharacterEnumExamples) {
  const Family b2{FamilyKind::kC, 2, 2};
  const ClassFunction chi = PermutationCharacterEnum(b2);
  EXPECT_EQ(chi.at({2, 1, 1}), 1);
  EXPECT_EQ(chi.at({4}), 1);
  EXPECT_EQ(chi.at({1, 1, 1, 1}), 3);
  for (const Family f : {Family{FamilyKind::kC, 3, 2}, Family{FamilyKind::kD, 3, 2},
                         Family{FamilyKind::kC, 4, 2}}) {
    const Partition identity(std::vector<int>(static_cast<std::size_t>(f.degree()), 1));
    EXPECT_EQ(PermutationCharacterEnum(f).at(identity), ObjectCount(f));
  }
}

TEST(GroupObjectsTest, ParallelFixedPointCountsAreDeterministic) {
  const Family f{FamilyKind::kD, 3, 3};
  EXPECT_EQ(PermutationCharacterEnum(f, kDefaultEnumerationCap, 1),
            PermutationCharacterEnum(f, kDefaultEnumerationCap, 4));
}

TEST(GroupObjectsTest, FixedPointsAreClassFunctions) {
  std::mt19937 rng(11);
  const Family f{FamilyKind::kC, 3, 3};
  const auto objects = EnumerateObjects(f);
  for (const Partition& rho : PartitionsOf(f.degree())) {
    const Permutation rep = ClassRepresentative(rho);
    ASSERT_EQ(rep.CycleType(), rho);
    const Permutation h = RandomPermutation(f.degree(), rng);
    const Permutation conj = h * rep * h.Inverse();
    EXPECT_EQ(CountFixed(conj, objects), CountFixed(rep, objects));
  }
}

TEST(GroupObjectsTest, WreathClassDistributionExamples) {
  ClassFunction d32(6);
  d32.Set({1, 1, 1, 1, 1, 1}, 1);
  d32.Set({3, 1, 1, 1}, 4);
  d32.Set({3, 3}, 4);
  d32.Set({2, 2, 2}, 3);
  d32.Set({6}, 6);
  EXPECT_EQ(WreathClassDistribution(Family{FamilyKind::kD, 3, 2}), d32);
  EXPECT_EQ(WreathClassDistributionBruteForce(Family{FamilyKind::kD, 3, 2}), d32);

  ClassFunction s2(2);
  s2.Set({1, 1}, 1);
  s2.Set({2}, 1);
  EXPECT_EQ(WreathClassDistribution(Family{FamilyKind::kC, 2, 1}), s2);
  EXPECT_EQ(WreathClassDistribution(Family{FamilyKind::kD, 2, 1}), s2);
}

TEST(GroupObjectsTest, WreathClassDistributionMatchesElementListing) {
  for (const Family f :
       {Family{FamilyKind::kC, 2, 4}, Family{FamilyKind::kC, 3, 3},
        Family{FamilyKind::kC, 3, 4}, Family{FamilyKind::kC, 4, 2},
        Family{FamilyKind::kD, 3, 3}, Family{FamilyKind::kD, 4, 3},
        Family{FamilyKind::kD, 5, 2}, Family{FamilyKind::kD, 6, 2}}) {
    const ClassFunction counts = WreathClassDistribution(f);
    EXPECT_EQ(counts, WreathClassDistributionBruteForce(f)) << f.ToString();
    BigInt total = 0;
    for (const auto& [rho, c] : counts.values()) total += c;
    EXPECT_EQ(total, SubgroupOrder(f));
  }
  EXPECT_THROW(WreathClassDistributionBruteForce(Family{FamilyKind::kC, 3, 4}, 100),
               TooLargeError);
}

TEST(GroupObjectsTest, PermutationCharacterWreathExamples) {
  EXPECT_EQ(PermutationCharacterWreath(Family{FamilyKind::kC, 3, 2}),
            MultiplicityVector(6, {{{6}, 1}, {{4, 2}, 1}}));
  const MultiplicityVector d32(6, {{{6}, 1},
                                   {{4, 2}, 1},
                                   {{4, 1, 1}, 1},
                                   {{3, 1, 1, 1}, 1},
                                   {{2, 2, 2}, 1},
                                   {{2, 1, 1, 1, 1}, 1}});
  EXPECT_EQ(PermutationCharacterWreath(Family{FamilyKind::kD, 3, 2}), d32);
  EXPECT_EQ(d32.TotalDimension(), 40);
  EXPECT_EQ(PermutationCharacterWreath(Family{FamilyKind::kD, 3, 1}),
            MultiplicityVector(3, {{{3}, 1}, {{1, 1, 1}, 1}}));
}

TEST(GroupObjectsTest, DualOracleReportPasses) {
  const Report r = VerifyDualOracle(Family{FamilyKind::kD, 4, 1}, 2);
  EXPECT_TRUE(r.all_passed());
  EXPECT_FALSE(r.checks.empty());
}

}  // namespace
}  // namespace wreathrep
