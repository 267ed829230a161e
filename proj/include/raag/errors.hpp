// Copyright 2026 The raag Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RAAG_ERRORS_HPP_
#define RAAG_ERRORS_HPP_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace raag {

/// Malformed graph file or word. `line()` is 0 for word input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t line = 0)
      : std::runtime_error(line == 0 ? message
                                     : "line " + std::to_string(line) + ": " + message),
        line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/// An enumeration would exceed its configured cap.
class ResourceError : public std::runtime_error {
 public:
  ResourceError(const std::string& what_cap, std::size_t cap)
      : std::runtime_error(what_cap + " cap of " + std::to_string(cap) + " exceeded"),
        cap_(cap) {}

  std::size_t cap() const noexcept { return cap_; }

 private:
  std::size_t cap_;
};

/// Operands live in different presentations.
class GraphMismatch : public std::invalid_argument {
 public:
  GraphMismatch() : std::invalid_argument("elements belong to different commutation graphs") {}
};

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed; always indicates a bug or a broken predicate.
class InvariantError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace raag

#endif  // RAAG_ERRORS_HPP_
