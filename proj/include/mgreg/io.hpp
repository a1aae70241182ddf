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
 * io.hpp
 *
 * JSON forms of the library's values and the problem-file schema.
 *
 *   Region        {"corners": [[1,0],[0,1]]}  or  {"everything": true}
 *   TwistSum      [[[2,0],1], [[1,1],2]]        (twist, rank); O(-twist)^rank
 *   TwistComplex  {"ambient":[1,1], "terms":[TwistSum, ...]}
 *   CurveData     {"r":[2,2], "d":[3,3], "g":0}
 *   Presentation  {"targets":[[2,0],...], "sources":[[2,1],...],
 *                  "matrix":[["x1_1","x1_0"], ...]}      matrix[t][s]
 *              or {"terms":[[twists of E_0], [twists of E_1], ...],
 *                  "maps":[matrix E_1->E_0, ...]}
 *
 * Ranks that do not fit in 64 bits are written as decimal strings.
 */
#ifndef MGREG_IO_HPP_
#define MGREG_IO_HPP_

#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "mgreg/cohom.hpp"
#include "mgreg/error.hpp"
#include "mgreg/glp.hpp"
#include "mgreg/poly.hpp"
#include "mgreg/regions.hpp"
#include "mgreg/twistcx.hpp"

namespace mgreg::io {

using nlohmann::json;

// --- writers ---------------------------------------------------------------

inline json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max()) {
    return json(static_cast<std::int64_t>(z));
  }
  return json(z.str());
}

inline json to_json(const MultiDegree& m) { return json(m.components()); }

inline json to_json(const Region& r) {
  if (r.is_everything()) return json{{"everything", true}};
  json corners = json::array();
  for (const auto& c : r.corners()) corners.push_back(to_json(c));
  return json{{"corners", corners}};
}

inline json to_json(const TwistSum& t) {
  json out = json::array();
  for (const auto& e : t) out.push_back(json::array({to_json(e.twist), integer_to_json(e.rank)}));
  return out;
}

inline json to_json(const TwistComplex& cx) {
  json terms = json::array();
  for (const auto& t : cx.terms) terms.push_back(to_json(t));
  return json{{"ambient", cx.ambient.dims()}, {"terms", terms}};
}

inline json to_json(const CurveData& c) {
  json out{{"r", c.ambient.dims()}, {"d", c.degree.components()}};
  if (c.genus) out["g"] = *c.genus;
  return out;
}

inline json to_json(const FreePresentation& p) {
  json targets = json::array(), sources = json::array();
  for (const auto& b : p.targets) targets.push_back(to_json(b));
  for (const auto& a : p.sources) sources.push_back(to_json(a));
  json out{{"targets", targets}};
  if (!p.single_term()) {
    json matrix = json::array();
    for (const auto& row : p.matrix) {
      json r = json::array();
      for (const auto& f : row) r.push_back(f.to_string());
      matrix.push_back(r);
    }
    out["sources"] = sources;
    out["matrix"] = matrix;
  }
  return out;
}

// --- readers ---------------------------------------------------------------

namespace detail {

[[noreturn]] inline void schema(const std::string& msg) { throw ParseError("problem schema: " + msg); }

inline void allow_keys(const json& obj, std::initializer_list<const char*> keys, const std::string& where) {
  if (!obj.is_object()) schema(where + " must be an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    if (!ok.count(it.key())) schema("unknown key \"" + it.key() + "\" in " + where);
  }
}

inline Coord coord(const json& j, const std::string& where) {
  if (!j.is_number_integer()) schema(where + " must be an integer");
  return j.get<Coord>();
}

}  // namespace detail

inline Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789-") != std::string::npos) {
      detail::schema("integer string \"" + s + "\" is malformed");
    }
    return Integer(s);
  }
  detail::schema("expected an integer");
}

inline Ambient ambient_from_json(const json& j) {
  if (!j.is_array()) detail::schema("ambient must be an array of positive integers");
  std::vector<int> dims;
  for (const auto& x : j) dims.push_back(static_cast<int>(detail::coord(x, "ambient entry")));
  return Ambient(std::move(dims));
}

inline MultiDegree multidegree_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) detail::schema("multidegree must be an array of integers");
  std::vector<Coord> c;
  for (const auto& x : j) c.push_back(detail::coord(x, "multidegree entry"));
  if (c.size() != n) throw DimensionMismatch(n, c.size());
  return MultiDegree(std::move(c));
}

inline Region region_from_json(const json& j, std::size_t n) {
  detail::allow_keys(j, {"corners", "everything"}, "region");
  if (j.contains("everything")) {
    if (j.contains("corners") || !j["everything"].is_boolean() || !j["everything"].get<bool>()) {
      detail::schema("region is either {\"everything\": true} or {\"corners\": [...]}");
    }
    return Region::everything(n);
  }
  if (!j.contains("corners") || !j["corners"].is_array()) detail::schema("region needs a corners array");
  std::vector<MultiDegree> corners;
  for (const auto& c : j["corners"]) corners.push_back(multidegree_from_json(c, n));
  return canonicalize(n, std::move(corners));
}

inline TwistSum twist_sum_from_json(const json& j, std::size_t n) {
  if (!j.is_array()) detail::schema("twist sum must be an array of [twist, rank] pairs");
  TwistSum out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) detail::schema("twist sum entry must be [twist, rank]");
    Integer rank = integer_from_json(e[1]);
    if (rank < 0) detail::schema("ranks must be nonnegative");
    out.push_back({multidegree_from_json(e[0], n), rank});
  }
  return out;
}

inline TwistComplex twist_complex_from_json(const json& j, std::optional<Ambient> ambient = {}) {
  detail::allow_keys(j, {"ambient", "terms"}, "complex");
  if (j.contains("ambient")) {
    Ambient own = ambient_from_json(j["ambient"]);
    if (ambient && !(own == *ambient)) detail::schema("complex ambient disagrees with problem ambient");
    ambient = own;
  }
  if (!ambient) detail::schema("complex needs an ambient");
  if (!j.contains("terms") || !j["terms"].is_array()) detail::schema("complex needs a terms array");
  TwistComplex cx{*ambient, {}};
  for (const auto& t : j["terms"]) cx.terms.push_back(twist_sum_from_json(t, ambient->n()));
  return cx;
}

inline CurveData curve_from_json(const json& j, std::optional<Ambient> ambient = {}) {
  detail::allow_keys(j, {"r", "d", "g"}, "curve");
  if (j.contains("r")) {
    Ambient own = ambient_from_json(j["r"]);
    if (ambient && !(own == *ambient)) detail::schema("curve r disagrees with problem ambient");
    ambient = own;
  }
  if (!ambient) detail::schema("curve needs r (or a problem ambient)");
  if (!j.contains("d")) detail::schema("curve needs d");
  CurveData c{*ambient, multidegree_from_json(j["d"], ambient->n()), std::nullopt};
  if (j.contains("g") && !j["g"].is_null()) c.genus = detail::coord(j["g"], "genus");
  c.validate();
  return c;
}

namespace detail {

inline std::vector<MultiDegree> twist_list(const json& j, std::size_t n, const std::string& where) {
  if (!j.is_array()) schema(where + " must be an array of multidegrees");
  std::vector<MultiDegree> out;
  for (const auto& x : j) out.push_back(multidegree_from_json(x, n));
  return out;
}

inline std::vector<std::vector<MultiPoly>> poly_matrix(const json& j, const Ambient& ambient) {
  if (!j.is_array()) schema("matrix must be an array of rows");
  std::vector<std::vector<MultiPoly>> out;
  for (const auto& row : j) {
    if (!row.is_array()) schema("matrix rows must be arrays of polynomial strings");
    std::vector<MultiPoly> r;
    for (const auto& cell : row) {
      if (cell.is_number_integer()) {
        r.push_back(MultiPoly::constant(ambient, Integer(cell.get<std::int64_t>())));
      } else if (cell.is_string()) {
        r.push_back(parse_poly(ambient, cell.get<std::string>()));
      } else {
        schema("matrix entries must be polynomial strings");
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace detail

inline FreePresentation presentation_from_json(const json& j, const Ambient& ambient) {
  detail::allow_keys(j, {"targets", "sources", "matrix", "terms", "maps"}, "presentation");
  const std::size_t n = ambient.n();
  if (j.contains("terms")) {
    if (j.contains("targets") || j.contains("sources") || j.contains("matrix")) {
      detail::schema("presentation uses either targets/sources/matrix or terms/maps");
    }
    std::vector<std::vector<MultiDegree>> terms;
    for (const auto& t : j["terms"]) terms.push_back(detail::twist_list(t, n, "presentation term"));
    std::vector<std::vector<std::vector<MultiPoly>>> maps;
    if (j.contains("maps")) {
      for (const auto& m : j["maps"]) maps.push_back(detail::poly_matrix(m, ambient));
    }
    return make_presentation(ambient, std::move(terms), std::move(maps));
  }
  if (!j.contains("targets")) detail::schema("presentation needs targets");
  std::vector<std::vector<MultiDegree>> terms{detail::twist_list(j["targets"], n, "targets")};
  std::vector<std::vector<std::vector<MultiPoly>>> maps;
  if (j.contains("sources")) {
    terms.push_back(detail::twist_list(j["sources"], n, "sources"));
    if (!j.contains("matrix")) detail::schema("presentation with sources needs a matrix");
    maps.push_back(detail::poly_matrix(j["matrix"], ambient));
  } else if (j.contains("matrix")) {
    detail::schema("matrix given without sources");
  }
  return make_presentation(ambient, std::move(terms), std::move(maps));
}

// --- problem files ----------------------------------------------------------

struct ProblemOptions {
  std::optional<Window> window;
  std::optional<std::uint32_t> prime;
  bool rationals = false;
  bool classical_en = false;
  std::optional<Coord> h0_override;
  /// Per-term region overrides for msgen; null entries keep reg(E_i).
  std::vector<std::optional<Region>> regions;
  unsigned threads = 0;
};

struct Problem {
  std::string name;
  Ambient ambient;
  std::variant<CurveData, TwistComplex, FreePresentation, TwistSum> payload;
  ProblemOptions options;

  const char* kind() const {
    switch (payload.index()) {
      case 0: return "curve";
      case 1: return "complex";
      case 2: return "presentation";
      default: return "sum";
    }
  }
};

inline Window window_from_json(const json& j, std::size_t n) {
  Window w;
  if (j.is_string()) {
    w = Window::parse(j.get<std::string>());
  } else if (j.is_array()) {
    std::vector<Coord> lo, hi;
    for (const auto& b : j) {
      if (!b.is_array() || b.size() != 2) detail::schema("window entries must be [lo, hi]");
      lo.push_back(detail::coord(b[0], "window bound"));
      hi.push_back(detail::coord(b[1], "window bound"));
    }
    w = Window{MultiDegree(std::move(lo)), MultiDegree(std::move(hi))};
    w.validate();
  } else {
    detail::schema("window must be \"lo..hi,...\" or [[lo,hi],...]");
  }
  if (w.dim() != n) throw DimensionMismatch(n, w.dim());
  return w;
}

inline Problem parse_problem(const json& j) {
  detail::allow_keys(j, {"name", "description", "ambient", "curve", "complex", "presentation", "sum", "options"},
                     "problem");
  int payloads = 0;
  for (const char* k : {"curve", "complex", "presentation", "sum"}) payloads += j.contains(k) ? 1 : 0;
  if (payloads != 1) detail::schema("exactly one of curve, complex, presentation, sum is required");

  Problem p;
  if (j.contains("name")) p.name = j["name"].get<std::string>();
  std::optional<Ambient> ambient;
  if (j.contains("ambient")) ambient = ambient_from_json(j["ambient"]);

  if (j.contains("curve")) {
    CurveData c = curve_from_json(j["curve"], ambient);
    p.ambient = c.ambient;
    p.payload = std::move(c);
  } else if (j.contains("complex")) {
    TwistComplex cx = twist_complex_from_json(j["complex"], ambient);
    p.ambient = cx.ambient;
    p.payload = std::move(cx);
  } else {
    if (!ambient) detail::schema("problem needs an ambient");
    p.ambient = *ambient;
    if (j.contains("presentation")) {
      p.payload = presentation_from_json(j["presentation"], *ambient);
    } else {
      p.payload = twist_sum_from_json(j["sum"], ambient->n());
    }
  }

  if (j.contains("options")) {
    const json& o = j["options"];
    detail::allow_keys(o, {"window", "prime", "rationals", "classical_en", "h0_override", "regions", "threads"},
                       "options");
    const std::size_t n = p.ambient.n();
    if (o.contains("window")) p.options.window = window_from_json(o["window"], n);
    if (o.contains("prime")) {
      Coord prime = detail::coord(o["prime"], "prime");
      if (prime < 2 || prime >= (Coord{1} << 31) || !is_prime(static_cast<std::uint64_t>(prime))) {
        detail::schema("prime must be a prime below 2^31");
      }
      p.options.prime = static_cast<std::uint32_t>(prime);
    }
    if (o.contains("rationals")) p.options.rationals = o["rationals"].get<bool>();
    if (o.contains("classical_en")) p.options.classical_en = o["classical_en"].get<bool>();
    if (o.contains("h0_override")) p.options.h0_override = detail::coord(o["h0_override"], "h0_override");
    if (o.contains("threads")) p.options.threads = static_cast<unsigned>(detail::coord(o["threads"], "threads"));
    if (o.contains("regions")) {
      if (!o["regions"].is_array()) detail::schema("regions must be an array");
      for (const auto& r : o["regions"]) {
        if (r.is_null()) {
          p.options.regions.emplace_back();
        } else {
          p.options.regions.emplace_back(region_from_json(r, n));
        }
      }
    }
  }
  return p;
}

inline Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open problem file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("problem file " + path + " is not valid JSON: " + e.what());
  }
  return parse_problem(j);
}

}  // namespace mgreg::io

#endif  // MGREG_IO_HPP_
