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
 * glp.hpp
 *
 * Closed-form regularity data for a nondegenerate curve C of multidegree d in
 * P^r (n >= 2):
 *
 *   a      = max_{i != j} (d_i + d_j - r_i - r_j) + 2
 *   h0_k   = r_k * a - d_k
 *   E_i    = sum_{m in N^n, |m| = a + i} O(-m)^{M(m)},  M(m) = prod_k C(h0_k, m_k)
 *   bound  = (min{h0_k, a})_k,  reg(I_C) contains bound + N^n unless P^r = P^1 x P^1
 *
 * The Eagon-Northcott shape E_0..E_L has L = sum h0 - a.
 */
#ifndef MGREG_GLP_HPP_
#define MGREG_GLP_HPP_

#include <algorithm>
#include <functional>
#include <optional>
#include <vector>

#include "mgreg/error.hpp"
#include "mgreg/integer.hpp"
#include "mgreg/regions.hpp"
#include "mgreg/twistcx.hpp"

namespace mgreg {

struct CurveData {
  Ambient ambient;
  MultiDegree degree;
  std::optional<Coord> genus;

  void validate() const {
    if (ambient.n() < 2) throw InvalidArgument("curve data needs at least two factors (n >= 2)");
    if (degree.size() != ambient.n()) throw DimensionMismatch(ambient.n(), degree.size());
    for (std::size_t k = 0; k < ambient.n(); ++k) {
      if (degree[k] < 1) throw InvalidArgument("curve multidegree entries must be >= 1");
      if (degree[k] < ambient.dim(k)) {
        throw InvalidArgument("nondegenerate curve needs d_k >= r_k, violated at factor " +
                              std::to_string(k + 1));
      }
    }
    if (genus && *genus < 0) throw InvalidArgument("genus must be nonnegative");
  }
};

namespace detail {
inline Coord max_pair_excess(const CurveData& c) {
  Coord best = 0;
  bool first = true;
  for (std::size_t i = 0; i < c.ambient.n(); ++i) {
    for (std::size_t j = i + 1; j < c.ambient.n(); ++j) {
      Coord v = c.degree[i] + c.degree[j] - c.ambient.dim(i) - c.ambient.dim(j);
      if (first || v > best) best = v;
      first = false;
    }
  }
  return best;
}
}  // namespace detail

inline Coord magnitude_a(const CurveData& curve) {
  curve.validate();
  return detail::max_pair_excess(curve) + 2;
}

/// Degree of the auxiliary line bundle on the normalization: g + max excess + 1.
inline Coord aux_bundle_degree(const CurveData& curve) {
  curve.validate();
  if (!curve.genus) throw InvalidArgument("auxiliary bundle degree needs the genus");
  return *curve.genus + detail::max_pair_excess(curve) + 1;
}

/// h0_k = r_k * h - d_k, with h = a unless overridden.
inline std::vector<Coord> h0_counts(const CurveData& curve, std::optional<Coord> h0_override = {}) {
  curve.validate();
  const Coord h = h0_override.value_or(magnitude_a(curve));
  std::vector<Coord> h0(curve.ambient.n());
  for (std::size_t k = 0; k < h0.size(); ++k) {
    h0[k] = curve.ambient.dim(k) * h - curve.degree[k];
    if (h0[k] < 0) throw InvalidArgument("negative section count; h0(A) override too small");
  }
  return h0;
}

/// M(m) = prod_k C(h0_k, m_k).
inline Integer en_rank(const MultiDegree& m, const std::vector<Coord>& h0) {
  if (m.size() != h0.size()) throw DimensionMismatch(h0.size(), m.size());
  if (!is_nonnegative(m)) throw InvalidArgument("Eagon-Northcott twist must lie in N^n");
  Integer out = 1;
  for (std::size_t k = 0; k < m.size() && out != 0; ++k) out *= binomial(h0[k], m[k]);
  return out;
}

struct ENShape {
  Coord a = 0;
  std::vector<Coord> h0;
  TwistComplex complex;
  bool classical_multiplier = false;
};

struct ENOptions {
  /// Stands in for h0(C, A) in place of a.
  std::optional<Coord> h0_override;
  /// Multiply term i ranks by C(a+i-1, i), the Sym_i factor of the classical
  /// Eagon-Northcott complex.
  bool classical = false;
};

/// Twists and ranks of the Eagon-Northcott complex of the linear presentation.
/// Term i lists, in lexicographically decreasing order, every m in N^n with
/// |m| = a + i and M(m) > 0.
inline ENShape en_complex_shape(const CurveData& curve, const ENOptions& opts = {}) {
  curve.validate();
  if (opts.h0_override && *opts.h0_override < 2) {
    throw InvalidArgument("h0(A) override must be >= 2");
  }
  ENShape shape;
  shape.a = opts.h0_override.value_or(magnitude_a(curve));
  shape.h0 = h0_counts(curve, opts.h0_override);
  shape.classical_multiplier = opts.classical;
  shape.complex.ambient = curve.ambient;

  const std::size_t n = curve.ambient.n();
  std::vector<std::vector<Integer>> rows;
  Coord sum_h0 = 0;
  for (Coord h : shape.h0) {
    rows.push_back(binomial_row(h));
    sum_h0 += h;
  }

  const Coord last = sum_h0 - shape.a;
  for (Coord i = 0; i <= last; ++i) {
    TwistSum term;
    MultiDegree m = MultiDegree::zero(n);
    const Coord target = shape.a + i;
    // suffix capacity so the walk never enters a dead branch
    std::vector<Coord> cap(n + 1, 0);
    for (std::size_t k = n; k-- > 0;) cap[k] = cap[k + 1] + shape.h0[k];
    std::function<void(std::size_t, Coord)> rec = [&](std::size_t k, Coord left) {
      if (k + 1 == n) {
        if (left > shape.h0[k]) return;
        m[k] = left;
        Integer rank = 1;
        for (std::size_t j = 0; j < n; ++j) rank *= rows[j][static_cast<std::size_t>(m[j])];
        if (opts.classical) rank *= binomial(shape.a + i - 1, i);
        term.push_back({m, std::move(rank)});
        return;
      }
      Coord hi = std::min(left, shape.h0[k]);
      Coord lo = std::max<Coord>(0, left - cap[k + 1]);
      for (Coord x = hi; x >= lo; --x) {
        m[k] = x;
        rec(k + 1, left - x);
      }
    };
    if (target <= sum_h0) rec(0, target);
    shape.complex.terms.push_back(std::move(term));
  }
  return shape;
}

struct GlpBound {
  MultiDegree bound;
  Coord a = 0;
  std::vector<Coord> h0;
  /// P^1 x P^1: the value is reported but is not a valid bound there.
  bool excluded_case = false;
};

inline bool is_p1xp1(const Ambient& ambient) {
  return ambient.n() == 2 && ambient.dim(0) == 1 && ambient.dim(1) == 1;
}

/// a_k = min{r_k a - d_k, a}.
inline GlpBound glp_regularity_bound(const CurveData& curve) {
  curve.validate();
  GlpBound out;
  out.a = magnitude_a(curve);
  out.h0 = h0_counts(curve);
  out.bound = MultiDegree::zero(curve.ambient.n());
  for (std::size_t k = 0; k < out.h0.size(); ++k) out.bound[k] = std::min(out.h0[k], out.a);
  out.excluded_case = is_p1xp1(curve.ambient);
  return out;
}

/// Bound for P^1 embedded by the r_k-uple embedding in each factor (d = r).
inline GlpBound duple_bound(const Ambient& targets) {
  if (targets.n() < 2) throw InvalidArgument("duple bound needs at least two factors");
  std::vector<Coord> d(targets.dims().begin(), targets.dims().end());
  return glp_regularity_bound(CurveData{targets, MultiDegree(std::move(d)), Coord{0}});
}

}  // namespace mgreg

#endif  // MGREG_GLP_HPP_
