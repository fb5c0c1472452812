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

#ifndef MSPEC_ORACLE_HPP_
#define MSPEC_ORACLE_HPP_

// Brute-force ground truth for small instances.
//
// Every separating assignment removes all edges crossing some bipartition
// (S, T) with s in S and t in T, and the cheapest assignment removing a
// fixed crossing set is a minimum w-vertex cover of it. Since the crossing
// set is bipartite, that cover equals the heaviest selection of crossing
// edges in which each vertex of V is used at most once. Terminals are not
// capacity-limited: p_s = p_t = 0 turns every terminal edge (x, u) into the
// unary constraint p_u >= w, and distinct unary constraints can be selected
// together.

#include <cstdint>
#include <vector>

#include "mspec/instance.hpp"

namespace mspec {

inline constexpr std::int32_t kDefaultOracleCap = 12;

struct PartitionCertificate {
  std::vector<bool> source_side;          // per vertex of V
  std::vector<std::size_t> crossing;      // edge indices
  std::vector<std::size_t> selection;     // heaviest degree-constrained subset
  std::vector<double> cover;              // per vertex of V
  double matching_weight = 0.0;
};

struct OracleResult {
  double opt = 0.0;
  PowerAssignment assignment;
  PartitionCertificate certificate;
};

// Minimum over all 2^n bipartitions of the heaviest degree-constrained
// selection of crossing edges. The witness is the matching minimum cover,
// obtained from complementary slackness by shortest paths. Duality (cover
// total == selection weight, cover valid) is asserted on every partition.
// Throws LimitExceeded when n > cap.
OracleResult oracle_opt(const Instance& inst, std::int32_t cap = kDefaultOracleCap);

// Per-partition step of oracle_opt, exposed for testing.
PartitionCertificate solve_partition(const Instance& inst,
                                     const std::vector<bool>& source_side);

// Minimum sum over integer vectors p in {0..W}^n that separate s and t.
// Throws InvalidInput for fractional weights and LimitExceeded when
// (W+1)^n > budget.
double oracle_enum_integer(const Instance& inst, std::int64_t budget = 1'000'000);

}  // namespace mspec

#endif  // MSPEC_ORACLE_HPP_
