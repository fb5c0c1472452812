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

#include "mspec/domain.hpp"

#include <algorithm>
#include <cmath>

#include "mspec/error.hpp"
#include "mspec/mincut.hpp"

namespace mspec {

PowerDomain::PowerDomain(std::vector<std::vector<double>> values)
    : values_(std::move(values)) {
  for (auto& dv : values_) {
    if (dv.empty()) throw InvalidInput("empty power domain");
    for (double d : dv) {
      if (!std::isfinite(d) || d < 0.0) throw InvalidInput("domain values must be finite and non-negative");
    }
    std::sort(dv.begin(), dv.end());
    dv.erase(std::unique(dv.begin(), dv.end()), dv.end());
  }
}

bool PowerDomain::contains(Vertex v, double p) const {
  const auto& dv = values(v);
  return std::binary_search(dv.begin(), dv.end(), p);
}

SolveResult solve_domain(const Instance& inst, const PowerDomain& domain,
                         std::int64_t copy_cap) {
  const std::int32_t n = inst.n();
  if (domain.size() != static_cast<std::size_t>(n)) {
    throw InvalidInput("power domain must cover every vertex");
  }
  std::int64_t total = 0;
  for (Vertex v = 0; v < n; ++v) total += static_cast<std::int64_t>(domain.values(v).size());
  if (total > copy_cap) {
    throw LimitExceeded("domain graph needs " + std::to_string(total) +
                        " copies, over the cap of " + std::to_string(copy_cap));
  }

  CutGraph graph;
  std::vector<std::int32_t> first(static_cast<std::size_t>(n));
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto& dv = domain.values(v);
    levels[static_cast<std::size_t>(v)] = dv;
    first[static_cast<std::size_t>(v)] = graph.size();
    for (std::size_t i = 0; i < dv.size(); ++i) {
      graph.add_vertex(i + 1 < dv.size() ? dv[i + 1] - dv[i] : CutGraph::kInfiniteCost);
    }
  }
  const std::int32_t source = graph.add_vertex(CutGraph::kInfiniteCost);
  const std::int32_t sink = graph.add_vertex(CutGraph::kInfiniteCost);
  graph.set_terminals(source, sink);
  add_level_edges(inst, levels, first, source, sink, graph);

  SolveStats stats;
  stats.graph_vertices = graph.size();
  stats.graph_edges = graph.edge_count();
  const VertexCut cut = min_cost_vertex_cut(graph);
  stats.flow_phases = cut.phases;
  if (std::isinf(cut.cost)) {
    SolveResult r;
    r.assignment = PowerAssignment::Zero(n);
    r.feasible = false;
    r.stats = stats;
    return r;
  }

  // p_v = d_{i+1} for the largest cut index i of v, d_0 when none is cut.
  std::vector<std::int32_t> top(static_cast<std::size_t>(n), -1);
  for (std::int32_t node : cut.vertices) {
    const auto it = std::upper_bound(first.begin(), first.end(), node);
    const auto v = static_cast<std::size_t>(it - first.begin() - 1);
    top[v] = std::max(top[v], node - first[v]);
  }
  std::vector<double> powers(static_cast<std::size_t>(n));
  for (std::size_t v = 0; v < powers.size(); ++v) {
    powers[v] = levels[v][static_cast<std::size_t>(top[v] + 1)];
    stats.cut_size += top[v] + 1;
  }
  SolveResult result = make_result(inst, PowerAssignment(std::move(powers)));
  result.stats = stats;
  return result;
}

PowerDomain incident_weight_domain(const Instance& inst) {
  std::vector<std::vector<double>> values(static_cast<std::size_t>(inst.n()));
  for (Vertex v = 0; v < inst.n(); ++v) {
    auto& dv = values[static_cast<std::size_t>(v)];
    dv.push_back(0.0);
    for (std::size_t ei : inst.incident(v)) dv.push_back(inst.edge(ei).w);
  }
  return PowerDomain(std::move(values));
}

SolveResult solve_discrete(const Instance& inst, std::int64_t copy_cap) {
  SolveResult result = solve_domain(inst, incident_weight_domain(inst), copy_cap);
  if (!result.feasible) throw Infeasible();
  result.stats.z = result.objective;
  return result;
}

}  // namespace mspec
