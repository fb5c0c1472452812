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

#include "mspec/bottleneck.hpp"

#include <algorithm>

#include "mspec/error.hpp"

namespace mspec {

double power_requirement(const Instance& inst, const Edge& e) {
  if (inst.is_terminal(e.u) || inst.is_terminal(e.v)) return e.w;
  return e.w / 2.0;
}

namespace {

std::vector<std::uint8_t> mask_at(std::span<const double> req, double p) {
  std::vector<std::uint8_t> mask(req.size());
  for (std::size_t i = 0; i < req.size(); ++i) mask[i] = req[i] <= p;
  return mask;
}

}  // namespace

BottleneckResult solve_bottleneck(const Instance& inst,
                                  std::span<const double> requirements) {
  if (requirements.size() != inst.m()) throw InvalidInput("one requirement per edge expected");
  std::vector<double> thresholds(requirements.begin(), requirements.end());
  thresholds.push_back(0.0);
  std::sort(thresholds.begin(), thresholds.end());
  thresholds.erase(std::unique(thresholds.begin(), thresholds.end()), thresholds.end());

  auto cut_at = [&](double p) { return separates(inst, mask_at(requirements, p)); };
  if (!cut_at(thresholds.back())) throw Infeasible();

  // Predicate is monotone false -> true along the sorted thresholds.
  std::size_t lo = 0;
  std::size_t hi = thresholds.size() - 1;
  while (lo < hi) {
    const std::size_t mid = lo + (hi - lo) / 2;
    if (cut_at(thresholds[mid])) {
      hi = mid;
    } else {
      lo = mid + 1;
    }
  }
  BottleneckResult result;
  result.p_star = thresholds[lo];
  result.zero_cut = result.p_star == 0.0;
  for (std::size_t i = 0; i < requirements.size(); ++i) {
    if (requirements[i] <= result.p_star) result.removed_edges.push_back(i);
  }
  return result;
}

BottleneckResult solve_bottleneck(const Instance& inst) {
  std::vector<double> req(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) req[i] = power_requirement(inst, inst.edge(i));
  return solve_bottleneck(inst, req);
}

}  // namespace mspec
