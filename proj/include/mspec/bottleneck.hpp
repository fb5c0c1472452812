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

#ifndef MSPEC_BOTTLENECK_HPP_
#define MSPEC_BOTTLENECK_HPP_

#include <cstddef>
#include <span>
#include <vector>

#include "mspec/instance.hpp"

namespace mspec {

// Uniform power at which edge e is removed: w/2 between two vertices of V,
// w when one endpoint is a terminal.
double power_requirement(const Instance& inst, const Edge& e);

struct BottleneckResult {
  double p_star = 0.0;
  // Edges whose requirement is <= p_star.
  std::vector<std::size_t> removed_edges;
  // p_star == 0: removing weight-0 edges already separates s and t.
  bool zero_cut = false;
};

// Minimum uniform power p such that deleting every edge of requirement
// <= p separates s and t. Binary search over the sorted, de-duplicated
// requirements (and 0) with one connectivity test per probe.
// Throws Infeasible when even deleting every edge leaves s-t connected.
BottleneckResult solve_bottleneck(const Instance& inst);

// Same search over caller-supplied per-edge requirements.
BottleneckResult solve_bottleneck(const Instance& inst,
                                  std::span<const double> requirements);

}  // namespace mspec

#endif  // MSPEC_BOTTLENECK_HPP_
