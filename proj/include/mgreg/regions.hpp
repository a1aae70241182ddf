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
 * regions.hpp
 *
 * Ambient products P^r1 x ... x P^rn, multidegrees in their Picard lattice
 * Z^n, and the algebra of finitely generated upsets of Z^n (regularity
 * regions). A region is stored as its antichain of minimal corners, sorted
 * lexicographically, or as the distinguished value "everything".
 */
#ifndef MGREG_REGIONS_HPP_
#define MGREG_REGIONS_HPP_

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mgreg/error.hpp"
#include "mgreg/integer.hpp"

namespace mgreg {

using Coord = std::int64_t;

/// Dimension vector r = (r1, ..., rn) of a product of projective spaces.
class Ambient {
 public:
  Ambient() = default;

  explicit Ambient(std::vector<int> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) throw InvalidArgument("ambient needs at least one factor");
    for (int r : dims_) {
      if (r < 1) throw InvalidArgument("ambient factor dimensions must be >= 1");
    }
  }

  Ambient(std::initializer_list<int> dims) : Ambient(std::vector<int>(dims)) {}

  std::size_t n() const { return dims_.size(); }
  int dim(std::size_t k) const { return dims_.at(k); }
  const std::vector<int>& dims() const { return dims_; }

  /// |r| = r1 + ... + rn, the dimension of the product.
  int total() const { return std::accumulate(dims_.begin(), dims_.end(), 0); }

  /// Number of homogeneous coordinates, sum of (r_j + 1).
  int num_variables() const { return total() + static_cast<int>(n()); }

  bool operator==(const Ambient&) const = default;

 private:
  std::vector<int> dims_;
};

/// Element of Pic(P^r) = Z^n. Ordered lexicographically.
class MultiDegree {
 public:
  MultiDegree() = default;
  explicit MultiDegree(std::vector<Coord> c) : c_(std::move(c)) {}
  MultiDegree(std::initializer_list<Coord> c) : c_(c) {}

  static MultiDegree zero(std::size_t n) { return MultiDegree(std::vector<Coord>(n, 0)); }
  static MultiDegree unit(std::size_t n, std::size_t k) {
    MultiDegree e = zero(n);
    e.c_.at(k) = 1;
    return e;
  }

  std::size_t size() const { return c_.size(); }
  Coord operator[](std::size_t k) const { return c_[k]; }
  Coord& operator[](std::size_t k) { return c_[k]; }
  const std::vector<Coord>& components() const { return c_; }
  auto begin() const { return c_.begin(); }
  auto end() const { return c_.end(); }

  /// |m| = m1 + ... + mn.
  Coord magnitude() const { return std::accumulate(c_.begin(), c_.end(), Coord{0}); }

  auto operator<=>(const MultiDegree&) const = default;
  bool operator==(const MultiDegree&) const = default;

  MultiDegree& operator+=(const MultiDegree& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] += o.c_[k];
    return *this;
  }
  MultiDegree& operator-=(const MultiDegree& o) {
    check(o);
    for (std::size_t k = 0; k < c_.size(); ++k) c_[k] -= o.c_[k];
    return *this;
  }
  friend MultiDegree operator+(MultiDegree a, const MultiDegree& b) { return a += b; }
  friend MultiDegree operator-(MultiDegree a, const MultiDegree& b) { return a -= b; }
  friend MultiDegree operator-(MultiDegree a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }

 private:
  void check(const MultiDegree& o) const {
    if (o.size() != size()) throw DimensionMismatch(size(), o.size());
  }

  std::vector<Coord> c_;
};

/// a <= b in every coordinate.
inline bool leq(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k] > b[k]) return false;
  }
  return true;
}

inline MultiDegree componentwise_max(const MultiDegree& a, const MultiDegree& b) {
  if (a.size() != b.size()) throw DimensionMismatch(a.size(), b.size());
  MultiDegree out = a;
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = std::max(a[k], b[k]);
  return out;
}

/// m lies in N^n.
inline bool is_nonnegative(const MultiDegree& m) {
  return std::all_of(m.begin(), m.end(), [](Coord x) { return x >= 0; });
}

inline std::string to_string(const MultiDegree& m) {
  std::ostringstream os;
  os << '(';
  for (std::size_t k = 0; k < m.size(); ++k) os << (k ? "," : "") << m[k];
  os << ')';
  return os.str();
}

/// Finitely generated upset of Z^n: union of cones c + N^n over its corners,
/// or all of Z^n. Always held in canonical form.
class Region {
 public:
  static Region everything(std::size_t n) { return Region(n, true, {}); }
  static Region empty(std::size_t n) { return Region(n, false, {}); }
  static Region cone(MultiDegree corner) {
    std::size_t n = corner.size();
    return Region(n, false, {std::move(corner)});
  }

  std::size_t dim() const { return n_; }
  bool is_everything() const { return everything_; }
  bool is_empty() const { return !everything_ && corners_.empty(); }
  const std::vector<MultiDegree>& corners() const { return corners_; }

  bool operator==(const Region&) const = default;

 private:
  Region(std::size_t n, bool everything, std::vector<MultiDegree> corners)
      : n_(n), everything_(everything), corners_(std::move(corners)) {}

  friend Region canonicalize(std::size_t n, std::vector<MultiDegree> corners);

  std::size_t n_ = 0;
  bool everything_ = false;
  std::vector<MultiDegree> corners_;
};

/// Reduce a corner set to its antichain of minimal elements.
inline Region canonicalize(std::size_t n, std::vector<MultiDegree> corners) {
  for (const auto& c : corners) {
    if (c.size() != n) throw DimensionMismatch(n, c.size());
  }
  std::sort(corners.begin(), corners.end());
  corners.erase(std::unique(corners.begin(), corners.end()), corners.end());
  // anything dominating c precedes it lexicographically, so one forward pass
  // against the kept prefix suffices
  std::vector<MultiDegree> kept;
  for (auto& c : corners) {
    bool dominated = std::any_of(kept.begin(), kept.end(),
                                 [&](const MultiDegree& k) { return leq(k, c); });
    if (!dominated) kept.push_back(std::move(c));
  }
  return Region(n, false, std::move(kept));
}

namespace detail {
inline void check_same(const Region& a, const Region& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch(a.dim(), b.dim());
}
}  // namespace detail

inline Region region_intersect(const Region& a, const Region& b) {
  detail::check_same(a, b);
  if (a.is_everything()) return b;
  if (b.is_everything()) return a;
  std::vector<MultiDegree> corners;
  corners.reserve(a.corners().size() * b.corners().size());
  for (const auto& x : a.corners()) {
    for (const auto& y : b.corners()) corners.push_back(componentwise_max(x, y));
  }
  return canonicalize(a.dim(), std::move(corners));
}

inline Region region_union(const Region& a, const Region& b) {
  detail::check_same(a, b);
  if (a.is_everything() || b.is_everything()) return Region::everything(a.dim());
  std::vector<MultiDegree> corners = a.corners();
  corners.insert(corners.end(), b.corners().begin(), b.corners().end());
  return canonicalize(a.dim(), std::move(corners));
}

inline Region region_translate(const Region& a, const MultiDegree& v) {
  if (v.size() != a.dim()) throw DimensionMismatch(a.dim(), v.size());
  if (a.is_everything()) return a;
  std::vector<MultiDegree> corners;
  corners.reserve(a.corners().size());
  for (const auto& c : a.corners()) corners.push_back(c + v);
  return canonicalize(a.dim(), std::move(corners));
}

inline bool region_contains(const Region& a, const MultiDegree& m) {
  if (m.size() != a.dim()) throw DimensionMismatch(a.dim(), m.size());
  if (a.is_everything()) return true;
  return std::any_of(a.corners().begin(), a.corners().end(),
                     [&](const MultiDegree& c) { return leq(c, m); });
}

inline std::string to_string(const Region& r) {
  if (r.is_everything()) return "everything";
  if (r.is_empty()) return "empty";
  std::string s;
  for (std::size_t i = 0; i < r.corners().size(); ++i) {
    s += (i ? " u " : "") + to_string(r.corners()[i]) + "+N^" + std::to_string(r.dim());
  }
  return s;
}

/// One summand O(-twist)^rank of a split sheaf.
struct TwistEntry {
  MultiDegree twist;
  Integer rank = 1;

  bool operator==(const TwistEntry&) const = default;
};

/// Direct sum of twisted line bundles, a multiset of (twist, rank).
using TwistSum = std::vector<TwistEntry>;

/// reg(sum O(-m)^rank): the single cone at the componentwise maximum of the
/// twists with nonzero rank. A sum with no such twist is the zero sheaf, whose
/// region is everything; that case appends a note to `warnings` if given.
inline Region reg_of_twist_sum(std::size_t n, const TwistSum& term,
                               std::vector<std::string>* warnings = nullptr) {
  std::optional<MultiDegree> corner;
  for (const auto& e : term) {
    if (e.twist.size() != n) throw DimensionMismatch(n, e.twist.size());
    if (e.rank < 0) throw InvalidArgument("negative rank in twist sum");
    if (e.rank == 0) continue;
    corner = corner ? componentwise_max(*corner, e.twist) : e.twist;
  }
  if (!corner) {
    if (warnings) warnings->push_back("empty twist sum treated as the zero sheaf (region = everything)");
    return Region::everything(n);
  }
  return Region::cone(std::move(*corner));
}

}  // namespace mgreg

#endif  // MGREG_REGIONS_HPP_
