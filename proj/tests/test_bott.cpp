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

using testing::euler_polynomial;
using testing::uniform;

TEST(HLine, Examples) {
  EXPECT_EQ(h_line(2, 2, 0), 6);
  EXPECT_EQ(h_line(1, -2, 1), 1);
  for (int q = 0; q <= 2; ++q) EXPECT_EQ(h_line(2, -1, q), 0);
  EXPECT_EQ(h_line(3, -4, 3), 1);
  EXPECT_EQ(h_line(3, -6, 3), 10);
  EXPECT_EQ(h_line(3, 5, 1), 0);
}

TEST(HLine, LevelOutOfRange) {
  EXPECT_THROW(h_line(2, 0, 3), InvalidArgument);
  EXPECT_THROW(h_line(2, 0, -1), InvalidArgument);
}

TEST(HLine, LargeValuesAreExact) {
  // C(1000+40, 40) overflows 64 bits
  EXPECT_EQ(h_line(40, 1000, 0), binomial(1040, 40));
  EXPECT_GT(h_line(40, 1000, 0), Integer(std::numeric_limits<std::uint64_t>::max()));
}

TEST(HLine, SerreDuality) {
  for (int r = 1; r <= 4; ++r) {
    for (Coord d = -12; d <= 12; ++d) {
      for (int q = 0; q <= r; ++q) ASSERT_EQ(h_line(r, d, q), h_line(r, -d - r - 1, r - q)) << r << ' ' << d << ' ' << q;
    }
  }
}

TEST(HLine, EulerCharacteristicPolynomial) {
  for (int r = 1; r <= 6; ++r) {
    for (Coord d = -20; d <= 20; ++d) {
      Integer chi = 0;
      for (int q = 0; q <= r; ++q) chi += (q % 2 ? -1 : 1) * h_line(r, d, q);
      ASSERT_EQ(chi, euler_polynomial(r, d)) << r << ' ' << d;
    }
  }
}

TEST(HProduct, Examples) {
  EXPECT_EQ(h_product(Ambient{1, 2}, {-2, -3}, 3), 1);
  EXPECT_EQ(h_product(Ambient{1, 1}, {1, 1}, 0), 4);
  EXPECT_EQ(h_product(Ambient{1, 1}, {-2, -2}, 1), 0);
  EXPECT_EQ(h_product(Ambient{1, 1}, {-2, 3}, 1), 4);
}

TEST(HProduct, Errors) {
  EXPECT_THROW(h_product(Ambient{1, 1}, {0, 0}, 3), InvalidArgument);
  EXPECT_THROW(h_product(Ambient{1, 1}, {0, 0, 0}, 0), DimensionMismatch);
}

TEST(HProduct, SingleFactorIsHLine) {
  for (int r = 1; r <= 4; ++r) {
    for (Coord d = -10; d <= 10; ++d) {
      for (int q = 0; q <= r; ++q) ASSERT_EQ(h_product(Ambient{r}, {d}, q), h_line(r, d, q));
    }
  }
}

TEST(HProduct, EulerCharacteristicMultiplies) {
  const Ambient amb{1, 2, 1};
  for (int t = 0; t < 300; ++t) {
    const MultiDegree m = testing::random_degree(3, -6, 6);
    Integer chi = 0;
    for (int i = 0; i <= amb.total(); ++i) chi += (i % 2 ? -1 : 1) * h_product(amb, m, i);
    ASSERT_EQ(chi, euler_polynomial(1, m[0]) * euler_polynomial(2, m[1]) * euler_polynomial(1, m[2]));
  }
}

TEST(KunnethTypes, Enumeration) {
  EXPECT_EQ(kunneth_types(Ambient{1, 2}, 2), (std::vector<std::vector<int>>{{0, 2}}));
  EXPECT_EQ(kunneth_types(Ambient{1, 1}, 1), (std::vector<std::vector<int>>{{0, 1}, {1, 0}}));
  EXPECT_TRUE(kunneth_types(Ambient{2, 2}, 1).empty());
}

TEST(OrthantPoints, Counts) {
  int count = 0;
  for_each_orthant_point(2, 1, 2, [&](const MultiDegree& i) {
    ++count;
    EXPECT_GE(i.magnitude(), 1);
    EXPECT_LE(i.magnitude(), 2);
  });
  EXPECT_EQ(count, 5);  // (0,1) (1,0) (0,2) (1,1) (2,0)
}

TEST(RegularTwistSum, Examples) {
  const Ambient p1p1{1, 1};
  EXPECT_TRUE(is_m_regular_twist_sum(p1p1, {{{1, -2}, 1}, {{-1, 3}, 1}}, {1, 3}));
  for (Coord a = -3; a <= 3; ++a) {
    for (Coord b = -3; b <= 3; ++b) EXPECT_TRUE(is_m_regular_twist_sum(p1p1, {{{a, b}, 1}}, {a, b}));
  }
  EXPECT_FALSE(is_m_regular_twist_sum(p1p1, {{{2, 0}, 1}, {{1, 1}, 2}}, {2, 0}));
  EXPECT_TRUE(is_m_regular_twist_sum(p1p1, {{{2, 0}, 1}, {{1, 1}, 2}}, {2, 1}));
}

TEST(RegularTwistSum, DimensionMismatch) {
  EXPECT_THROW(is_m_regular_twist_sum(Ambient{1, 1}, {{{1, 1}, 1}}, {1, 1, 1}), DimensionMismatch);
  EXPECT_THROW(is_m_regular_twist_sum(Ambient{1, 1}, {{{1, 1, 1}, 1}}, {1, 1}), DimensionMismatch);
}

// The definition check and the closed-form region agree.
TEST(RegularTwistSum, AgreesWithRegionOracle) {
  const std::vector<Ambient> ambients{Ambient{1}, Ambient{2}, Ambient{1, 1}, Ambient{1, 2}, Ambient{2, 2},
                                      Ambient{1, 1, 1}};
  for (int t = 0; t < 1000; ++t) {
    const Ambient& amb = ambients[static_cast<std::size_t>(uniform(0, static_cast<Coord>(ambients.size()) - 1))];
    const TwistSum sum = testing::random_twist_sum(amb.n(), -4, 4);
    const MultiDegree m = testing::random_degree(amb.n(), -6, 6);
    const bool regular = is_m_regular_twist_sum(amb, sum, m);
    ASSERT_EQ(regular, region_contains(reg_of_twist_sum(amb.n(), sum), m));
    if (regular) {
      for (std::size_t k = 0; k < amb.n(); ++k) {
        ASSERT_TRUE(is_m_regular_twist_sum(amb, sum, m + MultiDegree::unit(amb.n(), k)));
      }
    }
  }
}

TEST(CohomologyBasis, Examples) {
  EXPECT_EQ(cohomology_basis(1, -3, 1).basis, (std::vector<std::vector<Coord>>{{-1, -2}, {-2, -1}}));
  EXPECT_EQ(cohomology_basis(1, 1, 0).basis, (std::vector<std::vector<Coord>>{{1, 0}, {0, 1}}));
  EXPECT_TRUE(cohomology_basis(2, 0, 2).basis.empty());
  EXPECT_THROW(cohomology_basis(2, 0, 1), InvalidArgument);
  EXPECT_THROW(cohomology_basis(2, 0, 3), InvalidArgument);
}

TEST(CohomologyBasis, SizesAndShapes) {
  for (int r = 1; r <= 4; ++r) {
    for (Coord d = -12; d <= 12; ++d) {
      for (int q : {0, r}) {
        const auto b = cohomology_basis(r, d, q);
        ASSERT_EQ(Integer(b.basis.size()), h_line(r, d, q));
        for (std::size_t k = 0; k < b.basis.size(); ++k) {
          const auto& e = b.basis[k];
          ASSERT_EQ(e.size(), static_cast<std::size_t>(r + 1));
          ASSERT_EQ(std::accumulate(e.begin(), e.end(), Coord{0}), d);
          for (Coord x : e) ASSERT_TRUE(q == 0 ? x >= 0 : x <= -1);
          if (k) {
            ASSERT_GT(b.basis[k - 1], e);
          }
        }
      }
    }
  }
}

}  // namespace
}  // namespace mgreg
