/*
 * Copyright 2026 The rbatl Authors
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

#ifndef RBATL_ERRORS_HPP
#define RBATL_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rbatl {

/// Base class of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Vector length mismatches and malformed structures (witness trees,
/// certificates).
class StructuralError : public Error {
 public:
  using Error::Error;
};

/// An operation was applied outside its domain, e.g. an action that is not
/// available at the given state.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A caller broke a documented precondition (wrong engine for the model,
/// finite bound handed to the classical labeller, ...).
class ContractViolation : public Error {
 public:
  using Error::Error;
};

/// Model or formula does not validate against the model it is used with.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)),
        position_(position) {}

  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

}  // namespace rbatl

#endif  // RBATL_ERRORS_HPP
