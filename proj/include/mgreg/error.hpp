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

#ifndef MGREG_ERROR_HPP_
#define MGREG_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mgreg {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two objects that must live on the same ambient product disagree on n.
class DimensionMismatch : public Error {
 public:
  DimensionMismatch(std::size_t expected, std::size_t got)
      : Error("dimension mismatch: expected " + std::to_string(expected) +
              " coordinates, got " + std::to_string(got)) {}
  explicit DimensionMismatch(const std::string& what) : Error(what) {}
};

class InvalidArgument : public Error {
 public:
  using Error::Error;
};

/// Malformed polynomial string or problem file.
class ParseError : public Error {
 public:
  using Error::Error;
};

/// Input that is well formed but outside what the library computes
/// (e.g. presentations with three or more terms).
class Unsupported : public Error {
 public:
  using Error::Error;
};

}  // namespace mgreg

#endif  // MGREG_ERROR_HPP_
