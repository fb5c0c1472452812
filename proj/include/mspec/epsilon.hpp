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

#ifndef MSPEC_EPSILON_HPP_
#define MSPEC_EPSILON_HPP_

#include <cstdint>
#include <string>
#include <string_view>

namespace mspec {

// Approximation parameter held as an exact positive rational so that copy
// counts such as ceil(n^2 / eps) are computed without rounding error.
class Epsilon {
 public:
  // Accepts "0.25", "1e-1", "3/8", ".5". Throws InvalidInput unless the value
  // is a positive rational with numerator and denominator below 2^62.
  static Epsilon parse(std::string_view text);
  static Epsilon ratio(std::int64_t num, std::int64_t den);

  std::int64_t num() const { return num_; }
  std::int64_t den() const { return den_; }
  double value() const { return static_cast<double>(num_) / static_cast<double>(den_); }
  std::string str() const;

  // ceil(k / eps) = ceil(k * den / num), exactly.
  std::int64_t ceil_div(std::int64_t k) const;

 private:
  Epsilon(std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  std::int64_t num_ = 1;
  std::int64_t den_ = 1;
};

}  // namespace mspec

#endif  // MSPEC_EPSILON_HPP_
