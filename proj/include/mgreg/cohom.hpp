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
 * cohom.hpp
 *
 * Exact cohomology of a sheaf F given by a presentation
 *
 *     0 -> A = sum_s O(-a_s) --phi--> B = sum_t O(-b_t) -> F -> 0
 *
 * with phi[t][s] a polynomial of multidegree a_s - b_t (or by B alone). The
 * long exact sequence gives
 *
 *     h^i(F(m)) = dim coker(H^i A(m) -> H^i B(m)) + dim ker(H^{i+1} A(m) -> H^{i+1} B(m)),
 *
 * and each map is assembled from monomial Kunneth bases: multiplication by a
 * monomial acts factor by factor, as ordinary multiplication on H^0 bases and
 * as truncated Laurent multiplication on H^{r_j} bases (a term in which any
 * exponent becomes >= 0 is zero). The Kunneth type of a basis element is
 * preserved, so each map is block diagonal over types.
 *
 * The presentation is assumed injective on sheaves (phi generically of full
 * column rank); that is what makes the two-term complex quasi-isomorphic to F.
 */
#ifndef MGREG_COHOM_HPP_
#define MGREG_COHOM_HPP_

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <string>
#include <string_view>
#include <thread>
#include <utility>
#include <vector>

#include "mgreg/bott.hpp"
#include "mgreg/error.hpp"
#include "mgreg/field.hpp"
#include "mgreg/poly.hpp"
#include "mgreg/regions.hpp"

namespace mgreg {

/// Largest Kunneth block (rows * cols) the dense eliminator will accept.
inline constexpr std::size_t kMaxBlockEntries = std::size_t{1} << 26;

struct FreePresentation {
  Ambient ambient;
  /// Twists b_t of E_0 = sum O(-b_t).
  std::vector<MultiDegree> targets;
  /// Twists a_s of E_1 = sum O(-a_s); empty for a single-term presentation.
  std::vector<MultiDegree> sources;
  /// matrix[t][s] : O(-a_s) -> O(-b_t), homogeneous of multidegree a_s - b_t.
  std::vector<std::vector<MultiPoly>> matrix;

  bool single_term() const { return sources.empty(); }

  void validate() const {
    const std::size_t n = ambient.n();
    for (const auto& b : targets) {
      if (b.size() != n) throw DimensionMismatch(n, b.size());
    }
    for (const auto& a : sources) {
      if (a.size() != n) throw DimensionMismatch(n, a.size());
    }
    if (sources.empty()) {
      if (!matrix.empty()) throw InvalidArgument("single-term presentation cannot carry a matrix");
      return;
    }
    if (matrix.size() != targets.size()) {
      throw InvalidArgument("presentation matrix needs one row per target twist");
    }
    for (std::size_t t = 0; t < targets.size(); ++t) {
      if (matrix[t].size() != sources.size()) {
        throw InvalidArgument("presentation matrix needs one column per source twist");
      }
      for (std::size_t s = 0; s < sources.size(); ++s) {
        const MultiPoly& f = matrix[t][s];
        if (!(f.ambient() == ambient)) throw DimensionMismatch("matrix entry lives on another ambient");
        auto deg = f.multidegree();
        if (deg && *deg != sources[s] - targets[t]) {
          throw InvalidArgument("matrix entry (" + std::to_string(t) + "," + std::to_string(s) +
                                ") has multidegree " + to_string(*deg) + ", expected " +
                                to_string(sources[s] - targets[t]));
        }
      }
    }
  }

  /// F(by): every summand twist moves by -by, the matrix is unchanged.
  FreePresentation twisted(const MultiDegree& by) const {
    FreePresentation out = *this;
    for (auto& b : out.targets) b -= by;
    for (auto& a : out.sources) a -= by;
    return out;
  }
};

/// Build a presentation from a list of terms E_0, E_1, ... and the maps
/// between consecutive terms. Only one- and two-term complexes are supported.
inline FreePresentation make_presentation(const Ambient& ambient,
                                          std::vector<std::vector<MultiDegree>> terms,
                                          std::vector<std::vector<std::vector<MultiPoly>>> maps) {
  if (terms.empty()) throw InvalidArgument("presentation needs at least one term");
  if (terms.size() >= 3) {
    throw Unsupported("presentations with " + std::to_string(terms.size()) +
                      " terms are not supported; hypercohomology is computed only for "
                      "one- and two-term complexes");
  }
  if (maps.size() + 1 != terms.size()) {
    throw InvalidArgument("a complex with k terms needs k-1 maps");
  }
  FreePresentation p{ambient, std::move(terms[0]), {}, {}};
  if (terms.size() == 2) {
    p.sources = std::move(terms[1]);
    p.matrix = std::move(maps[0]);
  }
  p.validate();
  return p;
}

namespace detail {

/// Monomial basis of one Kunneth block H^{q}(O(v)) = tensor_j H^{q_j}(P^{r_j}, O(v_j)).
class KunnethBlock {
 public:
  KunnethBlock(const Ambient& ambient, const MultiDegree& v, const std::vector<int>& type) {
    size_ = 1;
    for (std::size_t j = 0; j < ambient.n(); ++j) {
      CohomologyBasis b = cohomology_basis(ambient.dim(j), v[j], type[j]);
      std::map<std::vector<Coord>, std::size_t> index;
      for (std::size_t k = 0; k < b.basis.size(); ++k) index.emplace(b.basis[k], k);
      size_ *= b.basis.size();
      top_.push_back(type[j] != 0);
      factors_.push_back(std::move(b.basis));
      index_.push_back(std::move(index));
    }
  }

  std::size_t size() const { return size_; }
  std::size_t factor_size(std::size_t j) const { return factors_[j].size(); }
  const std::vector<Coord>& factor_element(std::size_t j, std::size_t k) const { return factors_[j][k]; }

  /// Index of `e` in factor j, or npos when multiplication has killed it.
  std::size_t lookup(std::size_t j, const std::vector<Coord>& e) const {
    if (top_[j]) {
      for (Coord x : e) {
        if (x >= 0) return npos;
      }
    }
    auto it = index_[j].find(e);
    return it == index_[j].end() ? npos : it->second;
  }

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);

 private:
  std::size_t size_ = 0;
  std::vector<bool> top_;
  std::vector<std::vector<std::vector<Coord>>> factors_;
  std::vector<std::map<std::vector<Coord>, std::size_t>> index_;
};

/// Adds the matrix of multiplication by f : src -> tgt into `out` at the
/// given offsets. Rows index tgt, columns src; mixed-radix product indices
/// with the last factor fastest.
template <class Field>
void accumulate_block(const MultiPoly& f, const KunnethBlock& src, const KunnethBlock& tgt,
                      DenseMatrix<Field>& out, std::size_t row0, std::size_t col0, const Field& field) {
  if (f.is_zero() || src.size() == 0 || tgt.size() == 0) return;
  const Ambient& ambient = f.ambient();
  const std::size_t n = ambient.n();

  struct Mono {
    std::vector<std::vector<Coord>> parts;
    typename Field::value_type coef;
  };
  std::vector<Mono> monos;
  for (const auto& [e, c] : f.terms()) {
    Mono m{{}, field.from_integer(c)};
    if (field.is_zero(m.coef)) continue;
    for (std::size_t j = 0; j < n; ++j) {
      m.parts.emplace_back(e.begin() + static_cast<std::ptrdiff_t>(f.offset(j)),
                           e.begin() + static_cast<std::ptrdiff_t>(f.offset(j) + ambient.dim(j) + 1));
    }
    monos.push_back(std::move(m));
  }

  std::vector<std::size_t> digit(n, 0);
  std::vector<Coord> scratch;
  for (std::size_t col = 0; col < src.size(); ++col) {
    for (const auto& mono : monos) {
      std::size_t row = 0;
      bool alive = true;
      for (std::size_t j = 0; j < n && alive; ++j) {
        scratch = src.factor_element(j, digit[j]);
        for (std::size_t s = 0; s < scratch.size(); ++s) scratch[s] += mono.parts[j][s];
        std::size_t k = tgt.lookup(j, scratch);
        if (k == KunnethBlock::npos) {
          alive = false;
        } else {
          row = row * tgt.factor_size(j) + k;
        }
      }
      if (!alive) continue;
      auto& slot = out.at(row0 + row, col0 + col);
      slot = field.add(slot, mono.coef);
    }
    for (std::size_t j = n; j-- > 0;) {
      if (++digit[j] < src.factor_size(j)) break;
      digit[j] = 0;
    }
  }
}

inline std::size_t block_dim(const Ambient& ambient, const MultiDegree& v, const std::vector<int>& type) {
  Integer d = 1;
  for (std::size_t j = 0; j < ambient.n(); ++j) d *= h_line(ambient.dim(j), v[j], type[j]);
  if (d > Integer(kMaxBlockEntries)) throw Unsupported("Kunneth block too large for dense elimination");
  return static_cast<std::size_t>(d);
}

/// Matrix of H^type(A(m)) -> H^type(B(m)) for one Kunneth type.
template <class Field>
DenseMatrix<Field> presentation_block(const FreePresentation& p, const MultiDegree& m,
                                      const std::vector<int>& type, const Field& field) {
  std::vector<KunnethBlock> tgt, src;
  std::size_t rows = 0, cols = 0;
  for (const auto& b : p.targets) {
    tgt.emplace_back(p.ambient, m - b, type);
    rows += tgt.back().size();
  }
  for (const auto& a : p.sources) {
    src.emplace_back(p.ambient, m - a, type);
    cols += src.back().size();
  }
  if (rows != 0 && cols > kMaxBlockEntries / rows) {
    throw Unsupported("cohomology map too large for dense elimination");
  }
  DenseMatrix<Field> mat(rows, cols, field.zero());
  std::size_t row0 = 0;
  for (std::size_t t = 0; t < tgt.size(); ++t) {
    std::size_t col0 = 0;
    for (std::size_t s = 0; s < src.size(); ++s) {
      accumulate_block(p.matrix[t][s], src[s], tgt[t], mat, row0, col0, field);
      col0 += src[s].size();
    }
    row0 += tgt[t].size();
  }
  return mat;
}

struct LevelMap {
  Integer source_dim = 0;
  Integer target_dim = 0;
  Integer rank = 0;
};

template <class Field>
LevelMap level_map(const FreePresentation& p, const MultiDegree& m, int level, const Field& field) {
  LevelMap out;
  if (level < 0 || level > p.ambient.total()) return out;
  for (const auto& b : p.targets) out.target_dim += h_product(p.ambient, m - b, level);
  for (const auto& a : p.sources) out.source_dim += h_product(p.ambient, m - a, level);
  if (out.source_dim == 0 || out.target_dim == 0) return out;
  for (const auto& type : kunneth_types(p.ambient, level)) {
    std::size_t rows = 0, cols = 0;
    for (const auto& b : p.targets) rows += block_dim(p.ambient, m - b, type);
    for (const auto& a : p.sources) cols += block_dim(p.ambient, m - a, type);
    if (rows == 0 || cols == 0) continue;
    out.rank += rank(presentation_block(p, m, type, field), field);
  }
  return out;
}

template <class Field>
Integer sheaf_cohomology_dim_in(const FreePresentation& p, const MultiDegree& m, int i, const Field& field) {
  if (p.single_term()) {
    Integer total = 0;
    for (const auto& b : p.targets) total += h_product(p.ambient, m - b, i);
    return total;
  }
  LevelMap here = level_map(p, m, i, field);
  LevelMap next = level_map(p, m, i + 1, field);
  return (here.target_dim - here.rank) + (next.source_dim - next.rank);
}

}  // namespace detail

/// Matrix of multiplication by f from H^level(O(source)) to
/// H^level(O(source + deg f)); rows and columns follow the Kunneth types in
/// lexicographic order, then the product monomial order inside each type.
template <class Field>
DenseMatrix<Field> mult_matrix(const MultiPoly& f, const MultiDegree& source, int level, const Field& field) {
  const Ambient& ambient = f.ambient();
  if (source.size() != ambient.n()) throw DimensionMismatch(ambient.n(), source.size());
  if (level < 0 || level > ambient.total()) throw InvalidArgument("cohomological level outside [0, |r|]");
  auto deg = f.multidegree();
  const MultiDegree target = source + deg.value_or(MultiDegree::zero(ambient.n()));
  const auto types = kunneth_types(ambient, level);
  std::vector<detail::KunnethBlock> src, tgt;
  std::size_t rows = 0, cols = 0;
  for (const auto& q : types) {
    src.emplace_back(ambient, source, q);
    tgt.emplace_back(ambient, target, q);
    cols += src.back().size();
    rows += tgt.back().size();
  }
  DenseMatrix<Field> out(rows, cols, field.zero());
  std::size_t r0 = 0, c0 = 0;
  for (std::size_t k = 0; k < types.size(); ++k) {
    detail::accumulate_block(f, src[k], tgt[k], out, r0, c0, field);
    r0 += tgt[k].size();
    c0 += src[k].size();
  }
  return out;
}

/// h^i(F(m)) for the sheaf presented by p.
inline Integer sheaf_cohomology_dim(const FreePresentation& p, const MultiDegree& m, int i,
                                    const FieldConfig& field = {}) {
  p.validate();
  if (m.size() != p.ambient.n()) throw DimensionMismatch(p.ambient.n(), m.size());
  if (i < 0 || i > p.ambient.total()) throw InvalidArgument("cohomological level outside [0, |r|]");
  if (field.kind == FieldConfig::Kind::rational) {
    return detail::sheaf_cohomology_dim_in(p, m, i, RationalField{});
  }
  return detail::sheaf_cohomology_dim_in(p, m, i, PrimeField(field.prime));
}

/// H^{|i|}(F(m - i)) = 0 for every i in N^n with 1 <= |i| <= |r|.
inline bool is_m_regular(const FreePresentation& p, const MultiDegree& m, const FieldConfig& field = {}) {
  p.validate();
  if (m.size() != p.ambient.n()) throw DimensionMismatch(p.ambient.n(), m.size());
  bool regular = true;
  for_each_orthant_point(p.ambient.n(), 1, p.ambient.total(), [&](const MultiDegree& i) {
    if (regular && sheaf_cohomology_dim(p, m - i, static_cast<int>(i.magnitude()), field) != 0) {
      regular = false;
    }
  });
  return regular;
}

/// Box lo <= m <= hi in Z^n.
struct Window {
  MultiDegree lo;
  MultiDegree hi;

  std::size_t dim() const { return lo.size(); }

  void validate() const {
    if (lo.size() != hi.size()) throw DimensionMismatch(lo.size(), hi.size());
    if (lo.size() == 0) throw InvalidArgument("window needs at least one coordinate");
    for (std::size_t k = 0; k < lo.size(); ++k) {
      if (lo[k] > hi[k]) throw InvalidArgument("empty window: lower bound exceeds upper bound");
    }
  }

  bool contains(const MultiDegree& m) const { return leq(lo, m) && leq(m, hi); }

  /// Visits every point, lexicographically increasing.
  template <class F>
  void for_each(F&& f) const {
    MultiDegree m = lo;
    for (;;) {
      f(static_cast<const MultiDegree&>(m));
      std::size_t k = m.size();
      while (k-- > 0) {
        if (m[k] < hi[k]) {
          ++m[k];
          break;
        }
        m[k] = lo[k];
      }
      if (k == static_cast<std::size_t>(-1)) return;
    }
  }

  /// Parses "lo..hi,lo..hi,...".
  static Window parse(std::string_view text) {
    Window w;
    std::vector<Coord> lo, hi;
    std::size_t pos = 0;
    auto number = [&](std::string_view s) -> Coord {
      try {
        std::size_t used = 0;
        Coord v = std::stoll(std::string(s), &used);
        if (used != s.size()) throw ParseError("");
        return v;
      } catch (const std::exception&) {
        throw ParseError("bad window bound \"" + std::string(s) + "\" in \"" + std::string(text) + "\"");
      }
    };
    while (pos <= text.size()) {
      std::size_t comma = text.find(',', pos);
      std::string_view part = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
      std::size_t dots = part.find("..");
      if (dots == std::string_view::npos) {
        throw ParseError("window component \"" + std::string(part) + "\" must look like lo..hi");
      }
      lo.push_back(number(part.substr(0, dots)));
      hi.push_back(number(part.substr(dots + 2)));
      if (comma == std::string_view::npos) break;
      pos = comma + 1;
    }
    w.lo = MultiDegree(std::move(lo));
    w.hi = MultiDegree(std::move(hi));
    w.validate();
    return w;
  }

  std::string to_string() const {
    std::string s;
    for (std::size_t k = 0; k < lo.size(); ++k) {
      s += (k ? "," : "") + std::to_string(lo[k]) + ".." + std::to_string(hi[k]);
    }
    return s;
  }
};

struct ScanResult {
  Window window;
  /// Canonical corners of the regular points found inside the window.
  Region region;
  /// Regular points in the window, lexicographic.
  std::vector<MultiDegree> regular;
  /// Corners lying on the lower face of the window; the true region may
  /// extend past them.
  std::vector<MultiDegree> boundary_corners;
  /// Regular m with m + e_k in the window but not regular. Never expected.
  std::vector<MultiDegree> closure_violations;
  std::vector<std::string> warnings;

  bool upward_closed() const { return closure_violations.empty(); }
  bool certified() const { return boundary_corners.empty() && upward_closed() && !region.is_empty(); }
};

/// Regularity region of p restricted to a window, by testing every point.
/// Cohomology dimensions are shared between points and computed by up to
/// `threads` workers (0 = hardware concurrency).
inline ScanResult reg_region_scan(const FreePresentation& p, const Window& window,
                                  const FieldConfig& field = {}, unsigned threads = 0) {
  p.validate();
  window.validate();
  const std::size_t n = p.ambient.n();
  if (window.dim() != n) throw DimensionMismatch(n, window.dim());

  std::vector<MultiDegree> offsets;
  for_each_orthant_point(n, 1, p.ambient.total(), [&](const MultiDegree& i) { offsets.push_back(i); });

  std::set<std::pair<MultiDegree, int>> needed_set;
  window.for_each([&](const MultiDegree& m) {
    for (const auto& i : offsets) needed_set.emplace(m - i, static_cast<int>(i.magnitude()));
  });
  std::vector<std::pair<MultiDegree, int>> needed(needed_set.begin(), needed_set.end());
  std::vector<char> vanishes(needed.size(), 0);

  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, std::max<std::size_t>(1, needed.size())));
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (;;) {
      std::size_t k = next.fetch_add(1);
      if (k >= needed.size()) return;
      try {
        vanishes[k] = sheaf_cohomology_dim(p, needed[k].first, needed[k].second, field) == 0;
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = needed.size();
      }
    }
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  auto lookup = [&](const MultiDegree& v, int level) {
    auto it = std::lower_bound(needed.begin(), needed.end(), std::make_pair(v, level));
    return vanishes[static_cast<std::size_t>(it - needed.begin())] != 0;
  };

  ScanResult out{window, Region::empty(n), {}, {}, {}, {}};
  std::set<MultiDegree> regular_set;
  window.for_each([&](const MultiDegree& m) {
    bool ok = std::all_of(offsets.begin(), offsets.end(), [&](const MultiDegree& i) {
      return lookup(m - i, static_cast<int>(i.magnitude()));
    });
    if (ok) {
      out.regular.push_back(m);
      regular_set.insert(m);
    }
  });

  for (const auto& m : out.regular) {
    for (std::size_t k = 0; k < n; ++k) {
      MultiDegree up = m + MultiDegree::unit(n, k);
      if (window.contains(up) && !regular_set.count(up)) {
        out.closure_violations.push_back(m);
        break;
      }
    }
  }

  out.region = canonicalize(n, out.regular);
  for (const auto& c : out.region.corners()) {
    for (std::size_t k = 0; k < n; ++k) {
      if (c[k] == window.lo[k]) {
        out.boundary_corners.push_back(c);
        break;
      }
    }
  }

  if (out.region.is_empty()) out.warnings.push_back("no regular multidegree inside window " + window.to_string());
  for (const auto& c : out.boundary_corners) {
    out.warnings.push_back("corner " + to_string(c) + " touches the lower window boundary; the region may extend further");
  }
  for (const auto& m : out.closure_violations) {
    out.warnings.push_back("regular point " + to_string(m) + " has a non-regular upper neighbour inside the window");
  }
  return out;
}

}  // namespace mgreg

#endif  // MGREG_COHOM_HPP_
