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
 * poly.hpp
 *
 * Polynomials in the Cox ring of P^r: variables x{j}_{i} for factor j
 * (0-based) and coordinate 0 <= i <= r_j, integer coefficients. Exponents are
 * stored flattened, factor j occupying a contiguous block of r_j + 1 slots.
 *
 * Input grammar:
 *   expr  := ['+'|'-'] term (('+'|'-') term)*
 *   term  := power ('*' power)*
 *   power := atom ['^' integer]
 *   atom  := integer | variable | '(' expr ')'
 */
#ifndef MGREG_POLY_HPP_
#define MGREG_POLY_HPP_

#include <cctype>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mgreg/error.hpp"
#include "mgreg/integer.hpp"
#include "mgreg/regions.hpp"

namespace mgreg {

class MultiPoly {
 public:
  using Exponents = std::vector<Coord>;

  MultiPoly() = default;
  explicit MultiPoly(Ambient ambient) : ambient_(std::move(ambient)) {
    offsets_.push_back(0);
    for (int r : ambient_.dims()) offsets_.push_back(offsets_.back() + r + 1);
  }

  static MultiPoly constant(const Ambient& ambient, const Integer& c) {
    MultiPoly p(ambient);
    p.add_term(Exponents(static_cast<std::size_t>(ambient.num_variables()), 0), c);
    return p;
  }

  static MultiPoly variable(const Ambient& ambient, std::size_t factor, std::size_t coord) {
    if (factor >= ambient.n() || coord > static_cast<std::size_t>(ambient.dim(factor))) {
      throw InvalidArgument("variable x" + std::to_string(factor) + "_" + std::to_string(coord) +
                            " does not exist on this ambient");
    }
    MultiPoly p(ambient);
    Exponents e(static_cast<std::size_t>(ambient.num_variables()), 0);
    e[p.offsets_[factor] + coord] = 1;
    p.add_term(std::move(e), 1);
    return p;
  }

  const Ambient& ambient() const { return ambient_; }
  const std::map<Exponents, Integer>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// First flattened slot of factor j.
  std::size_t offset(std::size_t j) const { return offsets_.at(j); }

  void add_term(Exponents e, const Integer& c) {
    if (e.size() != static_cast<std::size_t>(ambient_.num_variables())) {
      throw DimensionMismatch(static_cast<std::size_t>(ambient_.num_variables()), e.size());
    }
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(std::move(e), c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  /// Multidegree of a monomial exponent vector.
  MultiDegree degree_of(const Exponents& e) const {
    MultiDegree d = MultiDegree::zero(ambient_.n());
    for (std::size_t j = 0; j < ambient_.n(); ++j) {
      for (std::size_t s = offsets_[j]; s < offsets_[j + 1]; ++s) d[j] += e[s];
    }
    return d;
  }

  bool is_homogeneous() const {
    if (terms_.empty()) return true;
    const MultiDegree first = degree_of(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
      if (degree_of(e) != first) return false;
    }
    return true;
  }

  /// Multidegree, or nullopt for the zero polynomial. Throws on
  /// inhomogeneous input.
  std::optional<MultiDegree> multidegree() const {
    if (terms_.empty()) return std::nullopt;
    if (!is_homogeneous()) throw InvalidArgument("polynomial " + to_string() + " is not multihomogeneous");
    return degree_of(terms_.begin()->first);
  }

  MultiPoly& operator+=(const MultiPoly& o) {
    check(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MultiPoly operator-() const {
    MultiPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a += -b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    a.check(b);
    MultiPoly out(a.ambient_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e = ea;
        for (std::size_t s = 0; s < e.size(); ++s) e[s] += eb[s];
        out.add_term(std::move(e), ca * cb);
      }
    }
    return out;
  }

  MultiPoly pow(Coord k) const {
    if (k < 0) throw InvalidArgument("negative exponent");
    MultiPoly out = constant(ambient_, 1);
    for (Coord i = 0; i < k; ++i) out = out * *this;
    return out;
  }

  bool operator==(const MultiPoly& o) const { return ambient_ == o.ambient_ && terms_ == o.terms_; }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string s;
    bool first = true;
    // highest monomials first
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Integer mag = c < 0 ? Integer(-c) : c;
      if (first) {
        if (c < 0) s += "-";
      } else {
        s += c < 0 ? " - " : " + ";
      }
      first = false;
      std::string mono;
      for (std::size_t j = 0; j < ambient_.n(); ++j) {
        for (std::size_t s2 = offsets_[j]; s2 < offsets_[j + 1]; ++s2) {
          if (e[s2] == 0) continue;
          if (!mono.empty()) mono += "*";
          mono += "x" + std::to_string(j) + "_" + std::to_string(s2 - offsets_[j]);
          if (e[s2] != 1) mono += "^" + std::to_string(e[s2]);
        }
      }
      if (mono.empty()) {
        s += mag.str();
      } else if (mag != 1) {
        s += mag.str() + "*" + mono;
      } else {
        s += mono;
      }
    }
    return s;
  }

 private:
  void check(const MultiPoly& o) const {
    if (!(ambient_ == o.ambient_)) throw DimensionMismatch("polynomials live on different ambients");
  }

  Ambient ambient_;
  std::vector<std::size_t> offsets_;
  std::map<Exponents, Integer> terms_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const Ambient& ambient, std::string_view text) : ambient_(ambient), text_(text) {}

  MultiPoly parse() {
    MultiPoly p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("polynomial \"" + std::string(text_) + "\" at offset " + std::to_string(pos_) +
                     ": " + msg);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Integer integer() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(text_.substr(start, pos_ - start)));
  }

  MultiPoly expr() {
    MultiPoly acc(ambient_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    MultiPoly t = term();
    acc += negate ? -t : t;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc += -term();
      } else {
        break;
      }
    }
    return acc;
  }

  MultiPoly term() {
    MultiPoly acc = power();
    while (accept('*')) acc = acc * power();
    return acc;
  }

  MultiPoly power() {
    MultiPoly base = atom();
    if (accept('^')) {
      Integer e = integer();
      if (e > 1000) fail("exponent too large");
      base = base.pow(static_cast<Coord>(e));
    }
    return base;
  }

  MultiPoly atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      MultiPoly inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return MultiPoly::constant(ambient_, integer());
    if (c == 'x') {
      ++pos_;
      Integer factor = integer();
      if (pos_ >= text_.size() || text_[pos_] != '_') fail("expected '_' in variable name");
      ++pos_;
      Integer coord = integer();
      if (factor >= ambient_.n() || coord > ambient_.dim(static_cast<std::size_t>(factor))) {
        fail("variable x" + factor.str() + "_" + coord.str() + " does not exist on this ambient");
      }
      return MultiPoly::variable(ambient_, static_cast<std::size_t>(factor),
                                 static_cast<std::size_t>(coord));
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  const Ambient& ambient_;
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace detail

/// Parse a polynomial; rejects inhomogeneous results.
inline MultiPoly parse_poly(const Ambient& ambient, std::string_view text) {
  MultiPoly p = detail::PolyParser(ambient, text).parse();
  if (!p.is_homogeneous()) {
    throw ParseError("polynomial \"" + std::string(text) + "\" is not multihomogeneous");
  }
  return p;
}

}  // namespace mgreg

#endif  // MGREG_POLY_HPP_
