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

#ifndef MGREG_INTEGER_HPP_
#define MGREG_INTEGER_HPP_

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace mgreg {

/// Exact integer used for every dimension and rank.
using Integer = boost::multiprecision::cpp_int;

/// C(n, k) for n >= 0; zero outside 0 <= k <= n (and for n < 0).
inline Integer binomial(std::int64_t n, std::int64_t k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Integer result = 1;
  // result stays integral: after step j it equals C(n-k+j, j)
  for (std::int64_t j = 1; j <= k; ++j) {
    result *= n - k + j;
    result /= j;
  }
  return result;
}

/// Row n of Pascal's triangle, C(n, 0..n).
inline std::vector<Integer> binomial_row(std::int64_t n) {
  std::vector<Integer> row;
  if (n < 0) return row;
  row.reserve(static_cast<std::size_t>(n) + 1);
  row.emplace_back(1);
  for (std::int64_t k = 1; k <= n; ++k) {
    Integer next = row.back() * (n - k + 1);
    next /= k;
    row.push_back(std::move(next));
  }
  return row;
}

}  // namespace mgreg

#endif  // MGREG_INTEGER_HPP_
