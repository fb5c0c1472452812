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

#ifndef MSPEC_TESTS_SUPPORT_FIXTURES_HPP_
#define MSPEC_TESTS_SUPPORT_FIXTURES_HPP_

#include <string>
#include <vector>

#include "mspec/instance.hpp"

namespace mspec::testing {

// s - u - v - t with weights 3, 4, 5.
inline Instance path345() {
  return Instance::FromNames({"u", "v"}, {{"s", "u", 3}, {"u", "v", 4}, {"v", "t", 5}});
}

// V = {a, b}; (s,a,2), (s,b,2), (a,t,1), (b,t,3), (a,b,1).
inline Instance diamond() {
  return Instance::FromNames({"a", "b"}, {{"s", "a", 2}, {"s", "b", 2}, {"a", "t", 1},
                                          {"b", "t", 3}, {"a", "b", 1}});
}

inline PowerAssignment powers(std::vector<double> p) { return PowerAssignment(std::move(p)); }

}  // namespace mspec::testing

#endif  // MSPEC_TESTS_SUPPORT_FIXTURES_HPP_
