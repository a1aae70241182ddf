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

#ifndef MGREG_TESTS_SUPPORT_HPP_
#define MGREG_TESTS_SUPPORT_HPP_

#include <random>
#include <vector>

#include "mgreg/mgreg.hpp"

namespace mgreg::testing {

/// Fixed seeds keep every randomized suite reproducible.
inline std::mt19937_64& rng() {
  static std::mt19937_64 engine(20260101);
  return engine;
}

inline Coord uniform(Coord lo, Coord hi) { return std::uniform_int_distribution<Coord>(lo, hi)(rng()); }

inline MultiDegree random_degree(std::size_t n, Coord lo, Coord hi) {
  std::vector<Coord> c(n);
  for (auto& x : c) x = uniform(lo, hi);
  return MultiDegree(std::move(c));
}

/// Random region: occasionally Everything or empty, otherwise up to
/// `max_corners` random corners.
inline Region random_region(std::size_t n, Coord lo = -5, Coord hi = 5, int max_corners = 4) {
  const Coord kind = uniform(0, 19);
  if (kind == 0) return Region::everything(n);
  if (kind == 1) return Region::empty(n);
  std::vector<MultiDegree> corners;
  const Coord count = uniform(1, max_corners);
  for (Coord i = 0; i < count; ++i) corners.push_back(random_degree(n, lo, hi));
  return canonicalize(n, std::move(corners));
}

inline TwistSum random_twist_sum(std::size_t n, Coord lo, Coord hi, int max_terms = 4) {
  TwistSum t;
  const Coord count = uniform(1, max_terms);
  for (Coord i = 0; i < count; ++i) t.push_back({random_degree(n, lo, hi), uniform(1, 3)});
  return t;
}

/// chi(P^r, O(d)) = C(d+r, r) as a polynomial in d.
inline Integer euler_polynomial(int r, Coord d) {
  Integer num = 1, den = 1;
  for (int k = 1; k <= r; ++k) {
    num *= d + k;
    den *= k;
  }
  return num / den;
}

inline bool is_antichain(const Region& r) {
  const auto& c = r.corners();
  for (std::size_t i = 0; i < c.size(); ++i) {
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (i != j && leq(c[i], c[j])) return false;
    }
  }
  return std::is_sorted(c.begin(), c.end());
}

/// Random valid curve data: n in {2,3}, r_k <= 4, r_k <= d_k <= 12.
inline CurveData random_curve(std::size_t n_lo = 2, std::size_t n_hi = 3) {
  const auto n = static_cast<std::size_t>(uniform(static_cast<Coord>(n_lo), static_cast<Coord>(n_hi)));
  std::vector<int> r(n);
  std::vector<Coord> d(n);
  for (std::size_t k = 0; k < n; ++k) {
    r[k] = static_cast<int>(uniform(1, 4));
    d[k] = uniform(r[k], 12);
  }
  return CurveData{Ambient(r), MultiDegree(d), std::nullopt};
}

}  // namespace mgreg::testing

#endif  // MGREG_TESTS_SUPPORT_HPP_
