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

#ifndef MSPEC_DOMAIN_HPP_
#define MSPEC_DOMAIN_HPP_

#include <cstdint>
#include <vector>

#include "mspec/discretize.hpp"
#include "mspec/instance.hpp"

namespace mspec {

// Allowed power values per vertex, sorted ascending without duplicates.
class PowerDomain {
 public:
  PowerDomain() = default;
  // Sorts and de-duplicates each list. Throws InvalidInput on an empty list
  // or a negative / non-finite value.
  explicit PowerDomain(std::vector<std::vector<double>> values);

  std::size_t size() const { return values_.size(); }
  const std::vector<double>& values(Vertex v) const {
    return values_[static_cast<std::size_t>(v)];
  }
  bool contains(Vertex v, double p) const;

 private:
  std::vector<std::vector<double>> values_;
};

// Exact minimum of sum p_v over assignments with p_v in D^v. Copies
// v(0..c_v) carry levels d_0 < ... < d_{c_v}; copy v(i) costs d_{i+1} - d_i
// and the last copy is uncuttable. A vertex with no copy cut gets d_0
// (its minimum, paid directly). Returns feasible = false (with the zero
// assignment) when no domain assignment separates s and t.
SolveResult solve_domain(const Instance& inst, const PowerDomain& domain,
                         std::int64_t copy_cap = kDefaultCopyCap);

// Domain {0} ∪ {weights of incident edges} per vertex.
PowerDomain incident_weight_domain(const Instance& inst);

// Optimum Z of the incident-weight restriction; Z/2 <= OPT <= Z.
// Throws Infeasible when the instance cannot be separated.
SolveResult solve_discrete(const Instance& inst,
                           std::int64_t copy_cap = kDefaultCopyCap);

}  // namespace mspec

#endif  // MSPEC_DOMAIN_HPP_
