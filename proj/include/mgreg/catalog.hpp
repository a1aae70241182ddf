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
 * catalog.hpp
 *
 * Standard inputs with known answers, shared by `mgreg verify`, the test
 * suites and the files under problems/.
 */
#ifndef MGREG_CATALOG_HPP_
#define MGREG_CATALOG_HPP_

#include <array>
#include <utility>
#include <vector>

#include "mgreg/cohom.hpp"
#include "mgreg/glp.hpp"
#include "mgreg/poly.hpp"
#include "mgreg/twistcx.hpp"

namespace mgreg::catalog {

/// Rational curve of degree (3,3) in P^2 x P^2.
inline CurveData twisted_cubic_pair() { return {Ambient{2, 2}, MultiDegree{3, 3}, Coord{0}}; }

/// Genus 4 hyperelliptic curve of degree (2,8) in P^1 x P^2.
inline CurveData hyperelliptic_p1p2() { return {Ambient{1, 2}, MultiDegree{2, 8}, Coord{4}}; }

/// Genus 2 curve of degree (3,2) in P^1 x P^1, a hypersurface.
inline CurveData hypersurface_curve_p1p1() { return {Ambient{1, 1}, MultiDegree{3, 2}, Coord{2}}; }

/// Virtual resolution of two points in P^1 x P^1 for the pair (I, (1,0)):
/// 0 -> O(-2,-1)^2 -> O(-2,0) + O(-1,-1)^2.
inline TwistComplex two_points_resolution_x() {
  return {Ambient{1, 1},
          {{{MultiDegree{2, 0}, 1}, {MultiDegree{1, 1}, 2}}, {{MultiDegree{2, 1}, 2}}}};
}

/// Same for the pair (I, (0,1)): 0 -> O(-1,-2)^2 -> O(-1,-1)^2 + O(0,-2).
inline TwistComplex two_points_resolution_y() {
  return {Ambient{1, 1},
          {{{MultiDegree{1, 1}, 2}, {MultiDegree{0, 2}, 1}}, {{MultiDegree{1, 2}, 2}}}};
}

/// Points ([1:0],[1:0]) and ([0:1],[0:1]). Generators x0_0*x0_1, x0_0*x1_1,
/// x0_1*x1_0; syzygy columns (x1_1, -x0_1, 0) and (x1_0, 0, -x0_0).
inline FreePresentation two_points_presentation() {
  const Ambient amb{1, 1};
  auto P = [&](const char* s) { return parse_poly(amb, s); };
  return make_presentation(amb,
                           {{MultiDegree{2, 0}, MultiDegree{1, 1}, MultiDegree{1, 1}},
                            {MultiDegree{2, 1}, MultiDegree{2, 1}}},
                           {{{P("x1_1"), P("x1_0")}, {P("-x0_1"), P("0")}, {P("0"), P("-x0_0")}}});
}

/// The two points themselves, for evaluation oracles: (x-point, y-point).
inline std::vector<std::pair<std::array<int, 2>, std::array<int, 2>>> two_points() {
  return {{{1, 0}, {1, 0}}, {{0, 1}, {0, 1}}};
}

/// Ideal sheaf O(-3,-2) of the hypersurface x0^3 y0^2 + x1^3 y1^2 + x0 x1^2 y0 y1.
inline FreePresentation hypersurface_presentation() {
  return make_presentation(Ambient{1, 1}, {{MultiDegree{3, 2}}}, {});
}

inline const char* hyperelliptic_generator_22() { return "x0_0^2*x1_0^2 + x0_1^2*x1_1^2 + x0_0*x0_1*x1_2^2"; }
inline const char* hyperelliptic_generator_31() { return "x0_0^3*x1_2 + x0_1^3*(x1_0 + x1_1)"; }

/// Koszul presentation 0 -> O(-5,-3) -> O(-2,-2) + O(-3,-1) of the complete
/// intersection of the two generators above in P^1 x P^2.
inline FreePresentation hyperelliptic_koszul_presentation() {
  const Ambient amb{1, 2};
  MultiPoly f = parse_poly(amb, hyperelliptic_generator_22());
  MultiPoly g = parse_poly(amb, hyperelliptic_generator_31());
  return make_presentation(amb, {{MultiDegree{2, 2}, MultiDegree{3, 1}}, {MultiDegree{5, 3}}},
                           {{{g}, {-f}}});
}

}  // namespace mgreg::catalog

#endif  // MGREG_CATALOG_HPP_
