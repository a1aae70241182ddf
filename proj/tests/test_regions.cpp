/*
 * Copyright 2026 The mgreg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <gtest/gtest.h>

#include <algorithm>

#include "test_support.hpp"

namespace mgreg {
namespace {

using testing::random_degree;
using testing::random_region;
using testing::uniform;

Region corners(std::initializer_list<MultiDegree> c) { return canonicalize(c.begin()->size(), c); }

TEST(Ambient, Validation) {
  EXPECT_THROW(Ambient(std::vector<int>{}), InvalidArgument);
  EXPECT_THROW(Ambient(std::vector<int>{1, 0}), InvalidArgument);
  Ambient a{1, 2};
  EXPECT_EQ(a.n(), 2u);
  EXPECT_EQ(a.total(), 3);
}

TEST(Canonicalize, Examples) {
  EXPECT_EQ(canonicalize(2, {{1, 0}, {0, 1}, {1, 1}}).corners(), (std::vector<MultiDegree>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(canonicalize(2, {}).is_empty());
  EXPECT_EQ(canonicalize(2, {{2, 1}}), Region::cone({2, 1}));
}

TEST(Canonicalize, DuplicatesAndChains) {
  EXPECT_EQ(canonicalize(2, {{3, 3}, {1, 1}, {2, 2}, {1, 1}}), Region::cone({1, 1}));
  EXPECT_EQ(canonicalize(3, {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}, {1, 1, 1}}).corners().size(), 3u);
}

TEST(Canonicalize, MixedLengthsRejected) {
  EXPECT_THROW(canonicalize(2, {{1, 0}, {1, 0, 0}}), DimensionMismatch);
}

TEST(Intersect, Examples) {
  EXPECT_EQ(region_intersect(Region::cone({2, 0}), Region::cone({1, 1})), Region::cone({2, 1}));
  EXPECT_EQ(region_intersect(corners({{1, 0}, {0, 1}}), Region::cone({1, 0})), Region::cone({1, 0}));
  const Region a = corners({{3, -1}, {0, 2}});
  EXPECT_EQ(region_intersect(a, Region::everything(2)), a);
  EXPECT_EQ(region_intersect(Region::everything(2), a), a);
  EXPECT_TRUE(region_intersect(a, Region::empty(2)).is_empty());
}

TEST(Union, Examples) {
  EXPECT_EQ(region_union(Region::cone({1, 1}), Region::cone({1, 0})), Region::cone({1, 0}));
  const Region a = corners({{2, 3}, {5, 0}});
  EXPECT_EQ(region_union(Region::empty(2), a), a);
  EXPECT_EQ(region_union(Region::cone({1, 0}), Region::cone({0, 1})).corners(),
            (std::vector<MultiDegree>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(region_union(a, Region::everything(2)).is_everything());
}

TEST(Translate, Examples) {
  EXPECT_EQ(region_translate(Region::cone({1, 2}), {-1, 0}), Region::cone({0, 2}));
  EXPECT_TRUE(region_translate(Region::everything(2), {4, 4}).is_everything());
  EXPECT_EQ(region_translate(corners({{1, 0}, {0, 1}}), {1, 1}), corners({{2, 1}, {1, 2}}));
}

TEST(Contains, Examples) {
  const Region a = corners({{1, 0}, {0, 1}});
  EXPECT_TRUE(region_contains(a, {3, 2}));
  EXPECT_FALSE(region_contains(a, {0, 0}));
  EXPECT_TRUE(region_contains(Region::everything(2), {-100, -7}));
  EXPECT_FALSE(region_contains(Region::empty(2), {100, 100}));
}

TEST(RegionOps, DimensionMismatch) {
  EXPECT_THROW(region_intersect(Region::cone({1, 0}), Region::cone({1, 0, 0})), DimensionMismatch);
  EXPECT_THROW(region_union(Region::cone({1, 0}), Region::cone({1, 0, 0})), DimensionMismatch);
  EXPECT_THROW(region_translate(Region::cone({1, 0}), {1, 0, 0}), DimensionMismatch);
  EXPECT_THROW(region_contains(Region::cone({1, 0}), {1, 0, 0}), DimensionMismatch);
  EXPECT_THROW(region_translate(Region::everything(2), {1, 0, 0}), DimensionMismatch);
}

TEST(RegOfTwistSum, Examples) {
  EXPECT_EQ(reg_of_twist_sum(2, {{{2, 0}, 1}, {{1, 1}, 2}}), Region::cone({2, 1}));
  EXPECT_EQ(reg_of_twist_sum(2, {{{1, -2}, 1}, {{-1, 3}, 1}}), Region::cone({1, 3}));
  EXPECT_EQ(reg_of_twist_sum(3, {{{4, -1, 7}, 1}}), Region::cone({4, -1, 7}));
}

TEST(RegOfTwistSum, ZeroSheafIsEverythingWithWarning) {
  std::vector<std::string> warnings;
  EXPECT_TRUE(reg_of_twist_sum(2, {}, &warnings).is_everything());
  EXPECT_EQ(warnings.size(), 1u);
  warnings.clear();
  EXPECT_TRUE(reg_of_twist_sum(2, {{{5, 5}, 0}}, &warnings).is_everything());
  EXPECT_EQ(warnings.size(), 1u);
}

TEST(RegOfTwistSum, ZeroRankEntriesIgnored) {
  EXPECT_EQ(reg_of_twist_sum(2, {{{2, 0}, 1}, {{9, 9}, 0}}), Region::cone({2, 0}));
}

// --- randomized properties, 1000+ cases each ---------------------------------

constexpr int kCases = 1500;

TEST(RegionProperties, CanonicalAndIdempotent) {
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    std::vector<MultiDegree> raw;
    for (Coord i = uniform(0, 8); i > 0; --i) raw.push_back(random_degree(n, -5, 5));
    const Region r = canonicalize(n, raw);
    ASSERT_TRUE(testing::is_antichain(r));
    ASSERT_EQ(canonicalize(n, r.corners()), r);
    for (int s = 0; s < 10; ++s) {
      const MultiDegree m = random_degree(n, -7, 7);
      const bool direct = std::any_of(raw.begin(), raw.end(), [&](const MultiDegree& c) { return leq(c, m); });
      ASSERT_EQ(region_contains(r, m), direct);
    }
  }
}

TEST(RegionProperties, OperationsReturnCanonicalRegions) {
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    const Region a = random_region(n), b = random_region(n);
    for (const Region& r : {region_intersect(a, b), region_union(a, b), region_translate(a, random_degree(n, -3, 3))}) {
      if (!r.is_everything()) {
        ASSERT_TRUE(testing::is_antichain(r));
      }
    }
  }
}

TEST(RegionProperties, LatticeLaws) {
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    const Region a = random_region(n), b = random_region(n), c = random_region(n);
    ASSERT_EQ(region_intersect(a, b), region_intersect(b, a));
    ASSERT_EQ(region_union(a, b), region_union(b, a));
    ASSERT_EQ(region_intersect(region_intersect(a, b), c), region_intersect(a, region_intersect(b, c)));
    ASSERT_EQ(region_union(region_union(a, b), c), region_union(a, region_union(b, c)));
    ASSERT_EQ(region_intersect(a, region_union(b, c)), region_union(region_intersect(a, b), region_intersect(a, c)));
    ASSERT_EQ(region_union(a, region_intersect(b, c)), region_intersect(region_union(a, b), region_union(a, c)));
    // absorption and idempotence
    ASSERT_EQ(region_union(a, region_intersect(a, b)), a);
    ASSERT_EQ(region_intersect(a, region_union(a, b)), a);
    ASSERT_EQ(region_union(a, a), a);
    ASSERT_EQ(region_intersect(a, a), a);
  }
}

TEST(RegionProperties, MembershipOfMeetAndJoin) {
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    const Region a = random_region(n), b = random_region(n);
    const Region meet = region_intersect(a, b), join = region_union(a, b);
    for (int s = 0; s < 10; ++s) {
      const MultiDegree m = random_degree(n, -7, 7);
      ASSERT_EQ(region_contains(meet, m), region_contains(a, m) && region_contains(b, m));
      ASSERT_EQ(region_contains(join, m), region_contains(a, m) || region_contains(b, m));
    }
  }
}

TEST(RegionProperties, TranslateMovesMembership) {
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    const Region a = random_region(n);
    const MultiDegree v = random_degree(n, -4, 4), m = random_degree(n, -7, 7);
    ASSERT_EQ(region_contains(region_translate(a, v), m + v), region_contains(a, m));
    ASSERT_EQ(region_translate(region_translate(a, v), -v), a);
  }
}

TEST(RegionProperties, UpwardClosure) {
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    const Region a = random_region(n);
    for (int s = 0; s < 10; ++s) {
      const MultiDegree m = random_degree(n, -7, 7);
      if (!region_contains(a, m)) continue;
      for (std::size_t k = 0; k < n; ++k) ASSERT_TRUE(region_contains(a, m + MultiDegree::unit(n, k)));
    }
  }
}

TEST(RegionProperties, RegOfTwistSumIgnoresRanksAndOrder) {
  for (int t = 0; t < kCases; ++t) {
    const std::size_t n = static_cast<std::size_t>(uniform(1, 4));
    TwistSum sum = testing::random_twist_sum(n, -5, 5, 5);
    const Region base = reg_of_twist_sum(n, sum);
    MultiDegree max = sum.front().twist;
    for (const auto& e : sum) max = componentwise_max(max, e.twist);
    ASSERT_EQ(base, Region::cone(max));
    std::shuffle(sum.begin(), sum.end(), testing::rng());
    for (auto& e : sum) e.rank = uniform(1, 50);
    ASSERT_EQ(reg_of_twist_sum(n, sum), base);
  }
}

}  // namespace
}  // namespace mgreg
