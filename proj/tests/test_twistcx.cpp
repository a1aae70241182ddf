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

#include "test_support.hpp"

namespace mgreg {
namespace {

using testing::random_region;
using testing::uniform;

const Ambient kP1P1{1, 1};

TEST(LinearTwistGrowth, Examples) {
  EXPECT_TRUE(has_linear_twist_growth(catalog::two_points_resolution_x()).ok);
  EXPECT_TRUE(has_linear_twist_growth(catalog::two_points_resolution_y()).ok);

  const LtgResult bad = has_linear_twist_growth(TwistComplex{kP1P1, {{{{1, 1}, 1}}, {{{3, 0}, 1}}}});
  EXPECT_FALSE(bad.ok);
  ASSERT_TRUE(bad.witness.has_value());
  EXPECT_EQ(bad.witness->position, 1u);
  EXPECT_EQ(bad.witness->twist, (MultiDegree{3, 0}));

  EXPECT_TRUE(has_linear_twist_growth(TwistComplex{kP1P1, {{{{5, -2}, 3}}}}).ok);
}

TEST(LinearTwistGrowth, MagnitudeBound) {
  // (3,1) - (1,1) = (2,0) is in N^2 but has magnitude 2 > 1
  EXPECT_FALSE(has_linear_twist_growth(TwistComplex{kP1P1, {{{{1, 1}, 1}}, {{{3, 1}, 1}}}}).ok);
  EXPECT_TRUE(has_linear_twist_growth(TwistComplex{kP1P1, {{{{1, 1}, 1}}, {}, {{{3, 1}, 1}}}}).ok);
}

TEST(LinearTwistGrowth, EmptyFirstTermRejected) {
  EXPECT_THROW(has_linear_twist_growth(TwistComplex{kP1P1, {{}, {{{1, 1}, 1}}}}), InvalidArgument);
  EXPECT_THROW(has_linear_twist_growth(TwistComplex{kP1P1, {}}), InvalidArgument);
}

TEST(LineartoregBound, Examples) {
  EXPECT_EQ(lineartoreg_bound(catalog::two_points_resolution_x()), Region::cone({2, 1}));
  EXPECT_EQ(lineartoreg_bound(catalog::two_points_resolution_y()), Region::cone({1, 2}));
  EXPECT_EQ(lineartoreg_bound(TwistComplex{kP1P1, {{{{3, 2}, 1}}}}), Region::cone({3, 2}));
}

TEST(LineartoregBound, RefusesWithoutGrowth) {
  try {
    lineartoreg_bound(TwistComplex{kP1P1, {{{{1, 1}, 1}}, {{{3, 0}, 1}}}});
    FAIL() << "expected LtgFailure";
  } catch (const LtgFailure& e) {
    EXPECT_EQ(e.witness().twist, (MultiDegree{3, 0}));
  }
}

TEST(LineartoregBound, SingleCone) {
  for (int t = 0; t < 300; ++t) {
    const CurveData c = testing::random_curve();
    const ENShape s = en_complex_shape(c);
    const Region r = lineartoreg_bound(s.complex);
    ASSERT_EQ(r.corners().size(), 1u);
  }
}

// The worked phi = (1,1,1) term on P^1 x P^1.
TEST(Msgen, SingleFunctionTerm) {
  const std::vector<Region> regs{Region::cone({0, 0}), Region::cone({1, 4}), Region::cone({2, 4}),
                                 Region::cone({3, 4})};
  Region term = regs[0];
  for (Coord i = 1; i <= 3; ++i) term = region_intersect(term, region_translate(regs[i], {-i, 0}));
  EXPECT_EQ(term, Region::cone({0, 4}));
  const Region all = msgen_region(kP1P1, regs);
  EXPECT_TRUE(region_contains(all, {0, 4}));
  // every point of the union lies in some phi-term; brute force over the 8 functions
  Region brute = Region::empty(2);
  for (int code = 0; code < 8; ++code) {
    Region acc = regs[0];
    MultiDegree shift{0, 0};
    for (int i = 1; i <= 3; ++i) {
      shift[static_cast<std::size_t>((code >> (i - 1)) & 1)] -= 1;
      acc = region_intersect(acc, region_translate(regs[static_cast<std::size_t>(i)], shift));
    }
    brute = region_union(brute, acc);
  }
  EXPECT_EQ(all, brute);
}

TEST(Msgen, Examples) {
  const Region origin = Region::cone({0, 0});
  EXPECT_EQ(msgen_region(kP1P1, {origin, origin, origin, origin}), origin);
  const Region r0 = Region::cone({2, -1});
  EXPECT_EQ(msgen_region(kP1P1, {r0, Region::everything(2), Region::everything(2), Region::everything(2)}), r0);
  EXPECT_EQ(msgen_region(kP1P1, {r0}), r0);
}

TEST(Msgen, DimensionMismatch) {
  EXPECT_THROW(msgen_region(kP1P1, {Region::cone({0, 0, 0})}), DimensionMismatch);
}

TEST(Msgen, ThreadedMatchesSerial) {
  const Ambient amb{1, 2};
  for (int t = 0; t < 100; ++t) {
    std::vector<Region> regs;
    for (int i = 0; i < 5; ++i) regs.push_back(random_region(2, -3, 3, 3));
    ASSERT_EQ(msgen_region(amb, regs, 1), msgen_region(amb, regs, 4));
  }
}

TEST(Msgen, Monotone) {
  for (int t = 0; t < 300; ++t) {
    std::vector<Region> regs;
    for (int i = 0; i < 4; ++i) regs.push_back(random_region(2, -3, 3, 3));
    const Region base = msgen_region(kP1P1, regs);
    auto bigger = regs;
    const auto k = static_cast<std::size_t>(uniform(0, 3));
    bigger[k] = region_union(bigger[k], random_region(2, -3, 3, 2));
    const Region grown = msgen_region(kP1P1, bigger);
    ASSERT_EQ(region_union(base, grown), grown);
  }
}

// regs[i] = reg(E_0) shifted along a unit-step chain: the bound is reg(E_0).
TEST(Msgen, ChainAgreesWithLineartoreg) {
  const std::vector<Ambient> ambients{Ambient{1, 1}, Ambient{1, 2}, Ambient{2, 1, 1}};
  for (int t = 0; t < 300; ++t) {
    const Ambient& amb = ambients[static_cast<std::size_t>(t % 3)];
    const std::size_t n = amb.n();
    const TwistSum e0 = testing::random_twist_sum(n, 0, 4);
    TwistComplex cx{amb, {e0}};
    MultiDegree v = MultiDegree::zero(n);
    for (int i = 1; i <= amb.total() + 1; ++i) {
      v[static_cast<std::size_t>(uniform(0, static_cast<Coord>(n) - 1))] += 1;
      TwistSum ei;
      for (const auto& e : e0) ei.push_back({e.twist + v, e.rank});
      cx.terms.push_back(ei);
    }
    ASSERT_TRUE(has_linear_twist_growth(cx).ok);
    ASSERT_EQ(msgen_region(cx), lineartoreg_bound(cx));
  }
}

TEST(SesRegionStep, Examples) {
  EXPECT_EQ(ses_region_step(kP1P1, Region::cone({1, 1}), Region::cone({1, 0})), Region::cone({1, 0}));
  const Region f = Region::cone({3, -2});
  EXPECT_EQ(ses_region_step(kP1P1, Region::everything(2), f), f);
  EXPECT_TRUE(ses_region_step(kP1P1, Region::cone({0, 0}), Region::empty(2)).is_empty());
}

TEST(SesRegionStep, Formula) {
  for (int t = 0; t < 300; ++t) {
    const Region sub = random_region(2), mid = random_region(2);
    Region expected = Region::empty(2);
    for (std::size_t j = 0; j < 2; ++j) expected = region_union(expected, region_translate(sub, -MultiDegree::unit(2, j)));
    ASSERT_EQ(ses_region_step(kP1P1, sub, mid), region_intersect(expected, mid));
  }
}

}  // namespace
}  // namespace mgreg
