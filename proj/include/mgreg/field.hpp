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

#ifndef MGREG_FIELD_HPP_
#define MGREG_FIELD_HPP_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "mgreg/error.hpp"
#include "mgreg/integer.hpp"

namespace mgreg {

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Z/p for a prime p < 2^31.
class PrimeField {
 public:
  using value_type = std::uint32_t;

  explicit PrimeField(std::uint32_t p = 32003) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) {
      throw InvalidArgument("characteristic " + std::to_string(p) + " is not a prime below 2^31");
    }
  }

  std::uint32_t characteristic() const { return p_; }

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(value_type a) const { return a == 0; }

  value_type from_integer(const Integer& z) const {
    Integer r = z % p_;
    if (r < 0) r += p_;
    return static_cast<value_type>(r);
  }

  value_type add(value_type a, value_type b) const {
    std::uint64_t s = std::uint64_t{a} + b;
    return static_cast<value_type>(s >= p_ ? s - p_ : s);
  }
  value_type sub(value_type a, value_type b) const {
    return a >= b ? a - b : static_cast<value_type>(std::uint64_t{a} + p_ - b);
  }
  value_type mul(value_type a, value_type b) const {
    return static_cast<value_type>(std::uint64_t{a} * b % p_);
  }
  value_type inv(value_type a) const {
    if (a == 0) throw InvalidArgument("division by zero in prime field");
    // Fermat
    std::uint64_t result = 1, base = a, e = p_ - 2;
    while (e) {
      if (e & 1) result = result * base % p_;
      base = base * base % p_;
      e >>= 1;
    }
    return static_cast<value_type>(result);
  }

 private:
  std::uint32_t p_;
};

/// The rationals, exact.
class RationalField {
 public:
  using value_type = boost::multiprecision::cpp_rational;

  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  bool is_zero(const value_type& a) const { return a == 0; }
  value_type from_integer(const Integer& z) const { return value_type(z); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw InvalidArgument("division by zero in the rationals");
    return 1 / a;
  }
};

/// Which coefficient field cohomology ranks are computed over.
struct FieldConfig {
  enum class Kind { prime, rational };
  Kind kind = Kind::prime;
  std::uint32_t prime = 32003;

  static FieldConfig prime_field(std::uint32_t p = 32003) {
    PrimeField check(p);
    return {Kind::prime, p};
  }
  static FieldConfig rationals() { return {Kind::rational, 0}; }

  std::string describe() const {
    return kind == Kind::rational ? std::string("QQ") : "ZZ/" + std::to_string(prime);
  }
};

/// Row-major dense matrix over a field.
template <class Field>
class DenseMatrix {
 public:
  using value_type = typename Field::value_type;

  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols, value_type fill)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  value_type& at(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const value_type& at(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<value_type> data_;
};

/// Rank by Gaussian elimination; pivot is the first nonzero entry at or below
/// the current row in the leftmost remaining column.
template <class Field>
std::size_t rank(DenseMatrix<Field> a, const Field& field) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pivot = r;
    while (pivot < rows && field.is_zero(a.at(pivot, c))) ++pivot;
    if (pivot == rows) continue;
    if (pivot != r) {
      for (std::size_t j = c; j < cols; ++j) std::swap(a.at(pivot, j), a.at(r, j));
    }
    const auto inv = field.inv(a.at(r, c));
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (field.is_zero(a.at(i, c))) continue;
      const auto factor = field.mul(a.at(i, c), inv);
      for (std::size_t j = c; j < cols; ++j) {
        if (!field.is_zero(a.at(r, j))) a.at(i, j) = field.sub(a.at(i, j), field.mul(factor, a.at(r, j)));
      }
    }
    ++r;
  }
  return r;
}

}  // namespace mgreg

#endif  // MGREG_FIELD_HPP_
