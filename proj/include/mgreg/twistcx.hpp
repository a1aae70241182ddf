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
 * twistcx.hpp
 *
 * Complexes ... -> E_2 -> E_1 -> E_0 of split sheaves, known only by their
 * twists and ranks, and the regularity regions their shape forces on the
 * sheaf F = coker(E_1 -> E_0).
 *
 * None of the functions here can see the differentials. Every bound assumes
 * the complex is exact away from a set of dimension <= 1; callers own that
 * hypothesis.
 */
#ifndef MGREG_TWISTCX_HPP_
#define MGREG_TWISTCX_HPP_

#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "mgreg/error.hpp"
#include "mgreg/regions.hpp"

namespace mgreg {

struct TwistComplex {
  Ambient ambient;
  /// terms[i] = E_i.
  std::vector<TwistSum> terms;

  void validate() const {
    for (const auto& t : terms) {
      for (const auto& e : t) {
        if (e.twist.size() != ambient.n()) throw DimensionMismatch(ambient.n(), e.twist.size());
        if (e.rank < 0) throw InvalidArgument("negative rank in twist complex");
      }
    }
  }
};

/// Twist m_k of E_k that has no partner in E_0.
struct LtgWitness {
  std::size_t position = 0;
  MultiDegree twist;
};

struct LtgResult {
  bool ok = true;
  std::optional<LtgWitness> witness;
};

class LtgFailure : public Error {
 public:
  explicit LtgFailure(LtgWitness w)
      : Error("complex lacks linear twist growth: twist " + to_string(w.twist) + " in E_" +
              std::to_string(w.position) + " dominates no E_0 twist within magnitude " +
              std::to_string(w.position)),
        witness_(std::move(w)) {}

  const LtgWitness& witness() const { return witness_; }

 private:
  LtgWitness witness_;
};

namespace detail {
inline bool has_rank(const TwistEntry& e) { return e.rank != 0; }

inline bool term_is_zero(const TwistSum& t) {
  for (const auto& e : t) {
    if (has_rank(e)) return false;
  }
  return true;
}
}  // namespace detail

/// Every twist m_k of E_k has some m_0 in E_0 with m_k - m_0 in N^n and
/// |m_k - m_0| <= k. Returns the first offending (k, m_k) otherwise.
inline LtgResult has_linear_twist_growth(const TwistComplex& cx) {
  cx.validate();
  if (cx.terms.empty() || detail::term_is_zero(cx.terms.front())) {
    throw InvalidArgument("linear twist growth needs a nonzero E_0");
  }
  const auto& e0 = cx.terms.front();
  for (std::size_t k = 1; k < cx.terms.size(); ++k) {
    for (const auto& ek : cx.terms[k]) {
      if (!detail::has_rank(ek)) continue;
      bool found = false;
      for (const auto& base : e0) {
        if (!detail::has_rank(base)) continue;
        if (leq(base.twist, ek.twist) &&
            (ek.twist - base.twist).magnitude() <= static_cast<Coord>(k)) {
          found = true;
          break;
        }
      }
      if (!found) return {false, LtgWitness{k, ek.twist}};
    }
  }
  return {};
}

/// reg(E_0), valid as a bound on reg(F) once the complex has linear twist
/// growth. Throws LtgFailure carrying the witness otherwise.
inline Region lineartoreg_bound(const TwistComplex& cx) {
  auto ltg = has_linear_twist_growth(cx);
  if (!ltg.ok) throw LtgFailure(*ltg.witness);
  return reg_of_twist_sum(cx.ambient.n(), cx.terms.front());
}

namespace detail {

// Depth-first walk over phi(1..f) carrying the partial intersection, so a
// prefix that already empties the region prunes every extension of it.
struct MsgenWalk {
  const std::vector<Region>& regs;
  std::size_t n;
  std::size_t f;
  Region acc;

  void run(std::size_t depth, const MultiDegree& shift, const Region& partial) {
    if (partial.is_empty()) return;
    if (depth == f) {
      acc = region_union(acc, partial);
      return;
    }
    for (std::size_t j = 0; j < n; ++j) {
      MultiDegree next = shift;
      next[j] -= 1;
      Region r = region_intersect(partial, region_translate(regs[depth + 1], next));
      run(depth + 1, next, r);
    }
  }
};

}  // namespace detail

/// Union over all phi: [|r|+1] -> [n] of the intersection over 0 <= i <= |r|+1
/// of (-e_phi(1) - ... - e_phi(i) + regs[i]). Missing trailing entries are the
/// zero sheaf (everything); entries past |r|+1 play no role and are ignored.
inline Region msgen_region(const Ambient& ambient, std::vector<Region> regs,
                           unsigned threads = 1) {
  const std::size_t n = ambient.n();
  const std::size_t f = static_cast<std::size_t>(ambient.total()) + 1;
  for (const auto& r : regs) {
    if (r.dim() != n) throw DimensionMismatch(n, r.dim());
  }
  regs.resize(f + 1, Region::everything(n));

  const Region& base = regs[0];
  if (threads <= 1 || n == 1) {
    detail::MsgenWalk walk{regs, n, f, Region::empty(n)};
    walk.run(0, MultiDegree::zero(n), base);
    return walk.acc;
  }
  // split on phi(1); the union is order independent so the merge is
  // deterministic
  std::vector<Region> partial(n, Region::empty(n));
  std::vector<std::thread> pool;
  for (std::size_t j = 0; j < n; ++j) {
    pool.emplace_back([&, j] {
      detail::MsgenWalk walk{regs, n, f, Region::empty(n)};
      MultiDegree shift = MultiDegree::zero(n);
      shift[j] = -1;
      walk.run(1, shift, region_intersect(base, region_translate(regs[1], shift)));
      partial[j] = std::move(walk.acc);
    });
  }
  for (auto& t : pool) t.join();
  Region out = Region::empty(n);
  for (const auto& p : partial) out = region_union(out, p);
  return out;
}

/// msgen_region with regs[i] = reg(E_i).
inline Region msgen_region(const TwistComplex& cx, unsigned threads = 1) {
  cx.validate();
  std::vector<Region> regs;
  for (const auto& t : cx.terms) regs.push_back(reg_of_twist_sum(cx.ambient.n(), t));
  return msgen_region(cx.ambient, std::move(regs), threads);
}

/// For 0 -> F' -> F -> F'' -> 0: (union_j (-e_j + reg F')) n reg F, a region
/// inside reg F''. The union runs over the n coordinate directions.
inline Region ses_region_step(const Ambient& ambient, const Region& reg_sub, const Region& reg_mid) {
  const std::size_t n = ambient.n();
  if (reg_sub.dim() != n) throw DimensionMismatch(n, reg_sub.dim());
  if (reg_mid.dim() != n) throw DimensionMismatch(n, reg_mid.dim());
  Region shifted = Region::empty(n);
  for (std::size_t j = 0; j < n; ++j) {
    shifted = region_union(shifted, region_translate(reg_sub, -MultiDegree::unit(n, j)));
  }
  return region_intersect(shifted, reg_mid);
}

}  // namespace mgreg

#endif  // MGREG_TWISTCX_HPP_
