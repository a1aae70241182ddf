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

/*
 * bott.hpp
 *
 * Cohomology of line bundles on P^r and on products. On P^r only
 * H^0(O(d)) (d >= 0) and H^r(O(d)) (d <= -r-1) are nonzero; a basis of the
 * first is the degree-d monomials, of the second the Laurent monomials with
 * every exponent <= -1 and total degree d. On a product the Kunneth formula
 * splits H^i into blocks indexed by "types" q = (q1..qn), qj in {0, rj},
 * sum qj = i.
 */
#ifndef MGREG_BOTT_HPP_
#define MGREG_BOTT_HPP_

#include <functional>
#include <vector>

#include "mgreg/error.hpp"
#include "mgreg/integer.hpp"
#include "mgreg/regions.hpp"

namespace mgreg {

/// h^q(P^r, O(d)).
inline Integer h_line(int r, Coord d, int q) {
  if (r < 1) throw InvalidArgument("projective dimension must be >= 1");
  if (q < 0 || q > r) throw InvalidArgument("cohomological level outside [0, r]");
  if (q == 0) return d >= 0 ? binomial(d + r, r) : Integer(0);
  if (q == r) return -d - 1 >= r ? binomial(-d - 1, r) : Integer(0);
  return 0;
}

/// Kunneth types at `level`: vectors q with q_j in {0, r_j} summing to level.
/// Lexicographic order.
inline std::vector<std::vector<int>> kunneth_types(const Ambient& ambient, int level) {
  std::vector<std::vector<int>> out;
  std::vector<int> q(ambient.n(), 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t j, int remaining) {
    if (j == ambient.n()) {
      if (remaining == 0) out.push_back(q);
      return;
    }
    q[j] = 0;
    rec(j + 1, remaining);
    if (ambient.dim(j) <= remaining) {
      q[j] = ambient.dim(j);
      rec(j + 1, remaining - ambient.dim(j));
    }
    q[j] = 0;
  };
  if (level >= 0) rec(0, level);
  return out;
}

/// h^i(P^r, O(m)) by Kunneth.
inline Integer h_product(const Ambient& ambient, const MultiDegree& m, int i) {
  if (m.size() != ambient.n()) throw DimensionMismatch(ambient.n(), m.size());
  if (i < 0 || i > ambient.total()) throw InvalidArgument("cohomological level outside [0, |r|]");
  Integer total = 0;
  for (const auto& q : kunneth_types(ambient, i)) {
    Integer term = 1;
    for (std::size_t j = 0; j < ambient.n() && term != 0; ++j) {
      term *= h_line(ambient.dim(j), m[j], q[j]);
    }
    total += term;
  }
  return total;
}

/// Calls f(i) for every i in N^n with lo <= |i| <= hi.
template <class F>
void for_each_orthant_point(std::size_t n, Coord lo, Coord hi, F&& f) {
  MultiDegree i = MultiDegree::zero(n);
  std::function<void(std::size_t, Coord)> rec = [&](std::size_t k, Coord used) {
    if (k + 1 == n) {
      for (Coord x = std::max<Coord>(0, lo - used); used + x <= hi; ++x) {
        i[k] = x;
        f(static_cast<const MultiDegree&>(i));
      }
      i[k] = 0;
      return;
    }
    for (Coord x = 0; used + x <= hi; ++x) {
      i[k] = x;
      rec(k + 1, used + x);
    }
    i[k] = 0;
  };
  if (n > 0 && hi >= lo && hi >= 0) rec(0, 0);
}

/// Direct check of the regularity definition for sum O(-m_t)^rank at m:
/// H^{|i|}(O(m - m_t - i)) = 0 for all i in N^n, 1 <= |i| <= |r|. Levels
/// above |r| vanish on a variety of dimension |r| and are not visited.
inline bool is_m_regular_twist_sum(const Ambient& ambient, const TwistSum& term,
                                   const MultiDegree& m) {
  if (m.size() != ambient.n()) throw DimensionMismatch(ambient.n(), m.size());
  for (const auto& e : term) {
    if (e.twist.size() != ambient.n()) throw DimensionMismatch(ambient.n(), e.twist.size());
  }
  bool regular = true;
  for (const auto& e : term) {
    if (e.rank == 0) continue;
    const MultiDegree base = m - e.twist;
    for_each_orthant_point(ambient.n(), 1, ambient.total(), [&](const MultiDegree& i) {
      if (!regular) return;
      if (h_product(ambient, base - i, static_cast<int>(i.magnitude())) != 0) regular = false;
    });
    if (!regular) break;
  }
  return regular;
}

struct CohomologyBasis {
  int r = 0;
  Coord d = 0;
  int q = 0;
  /// Exponent vectors of length r+1, lexicographically decreasing.
  std::vector<std::vector<Coord>> basis;
};

namespace detail {

/// Nonnegative vectors of length `len` summing to `total`, lex decreasing.
inline void compositions_desc(int len, Coord total, std::vector<std::vector<Coord>>& out) {
  if (total < 0) return;
  std::vector<Coord> v(static_cast<std::size_t>(len), 0);
  std::function<void(int, Coord)> rec = [&](int k, Coord left) {
    if (k == len - 1) {
      v[static_cast<std::size_t>(k)] = left;
      out.push_back(v);
      return;
    }
    for (Coord x = left; x >= 0; --x) {
      v[static_cast<std::size_t>(k)] = x;
      rec(k + 1, left - x);
    }
  };
  rec(0, total);
}

}  // namespace detail

/// Monomial basis of H^q(P^r, O(d)) for q in {0, r}.
inline CohomologyBasis cohomology_basis(int r, Coord d, int q) {
  if (r < 1) throw InvalidArgument("projective dimension must be >= 1");
  if (q != 0 && q != r) throw InvalidArgument("monomial bases exist only at levels 0 and r");
  CohomologyBasis b{r, d, q, {}};
  if (q == 0) {
    detail::compositions_desc(r + 1, d, b.basis);
  } else {
    // e = -1 - f with f >= 0, sum f = -d - r - 1; lex-decreasing e is
    // lex-increasing f, so reverse
    detail::compositions_desc(r + 1, -d - r - 1, b.basis);
    std::reverse(b.basis.begin(), b.basis.end());
    for (auto& v : b.basis) {
      for (auto& x : v) x = -1 - x;
    }
  }
  return b;
}

}  // namespace mgreg

#endif  // MGREG_BOTT_HPP_
