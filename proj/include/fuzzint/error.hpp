/*
 *   Copyright 2026 The fuzzint Authors
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

#ifndef FUZZINT_ERROR_HPP
#define FUZZINT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fuzzint {

/// Base class of every error raised by the library.
class error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Two values of different realizations (exact vs. float) met in one operation.
class realization_mismatch : public error {
 public:
  realization_mismatch() : error("realization mismatch: exact and float values cannot be mixed") {}
  explicit realization_mismatch(const std::string& what) : error(what) {}
};

/// An operation is not available in the requested realization
/// (e.g. exact evaluation of a float-only user evaluator).
class unsupported_realization : public error {
 public:
  using error::error;
};

/// Argument outside the operation's domain (value outside [0,1], f+a > 1, ...).
class domain_error : public error {
 public:
  using error::error;
};

/// A precondition on the relation between inputs does not hold
/// (e.g. non-comonotone pair, non-violating triple handed to a witness builder).
class contract_error : public error {
 public:
  using error::error;
};

/// Malformed textual or JSON input.
class parse_error : public error {
 public:
  using error::error;
};

} // namespace fuzzint

#endif
