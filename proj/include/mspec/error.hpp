// Copyright 2026 The MSPEC Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MSPEC_ERROR_HPP_
#define MSPEC_ERROR_HPP_

#include <stdexcept>
#include <string>

namespace mspec {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed JSON document or schema violation.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Arguments that violate an operation's preconditions (negative weight,
// unknown vertex, non-positive epsilon, fractional weight for the integer
// solver, ...).
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// No power assignment can separate s from t.
class Infeasible : public Error {
 public:
  explicit Infeasible(const std::string& what = "instance infeasible")
      : Error(what) {}
};

// A configured size cap (copy budget, oracle vertex cap, enumeration budget)
// would be exceeded.
class LimitExceeded : public Error {
 public:
  using Error::Error;
};

}  // namespace mspec

#endif  // MSPEC_ERROR_HPP_
