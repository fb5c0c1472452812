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

#include "mspec/fptas.hpp"

#include <cmath>
#include <limits>
#include <numeric>

#include "mspec/bottleneck.hpp"
#include "mspec/domain.hpp"
#include "mspec/error.hpp"
#include "mspec/mincut.hpp"

namespace mspec {

namespace {

SolveResult zero_result(const Instance& inst, std::span<const double> costs = {}) {
  return make_result(inst, PowerAssignment::Zero(inst.n()), costs);
}

// Builds G', cuts it, and reads the powers back.
SolveResult discretize_and_cut(const Instance& inst, double alpha, std::int64_t copies,
                               std::span<const double> costs, double bound,
                               std::int64_t copy_cap, SolveStats stats) {
  const DiscretizedGraph dg = build_discretized_bounded(inst, alpha, copies, costs, bound, copy_cap);
  const VertexCut cut = min_vertex_cut(dg.graph());
  const auto counts = prefix_counts(dg, cut.vertices);
  SolveResult result = make_result(inst, extract_powers(dg, cut.vertices), costs);
  stats.alpha = alpha;
  stats.copies_per_vertex = copies;
  stats.graph_vertices = dg.vertex_count();
  stats.graph_edges = dg.edge_count();
  stats.cut_size = std::accumulate(counts.begin(), counts.end(), std::int64_t{0});
  stats.flow_phases = cut.phases;
  result.stats = stats;
  return result;
}

void check_costs(const Instance& inst, std::span<const double> costs) {
  if (costs.size() != static_cast<std::size_t>(inst.n())) {
    throw InvalidInput("one cost per vertex expected");
  }
  for (double c : costs) {
    if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("vertex costs must be positive");
  }
}

}  // namespace

bool has_integral_weights(const Instance& inst) {
  for (double w : inst.weights()) {
    if (w != std::floor(w) || w > 1e9) return false;
  }
  return true;
}

bool has_uniform_weights(const Instance& inst) {
  double first = 0.0;
  for (double w : inst.weights()) {
    if (w == 0.0) continue;
    if (first == 0.0) first = w;
    if (w != first) return false;
  }
  return true;
}

SolveResult solve_fptas(const Instance& inst, const Epsilon& eps, const SolveOptions& options) {
  const BottleneckResult bn = solve_bottleneck(inst);
  SolveStats stats;
  stats.p_star = bn.p_star;
  if (bn.zero_cut || inst.n() == 0) {
    SolveResult r = zero_result(inst);
    r.stats = stats;
    return r;
  }
  const std::int64_t n = inst.n();
  const double alpha = eps.value() * bn.p_star / static_cast<double>(n);
  const std::int64_t copies = eps.ceil_div(n * n);
  // c * alpha >= n * p* >= OPT.
  return discretize_and_cut(inst, alpha, copies, {}, static_cast<double>(n) * bn.p_star,
                            options.copy_cap, stats);
}

SolveResult solve_fast_fptas(const Instance& inst, const Epsilon& eps,
                             const SolveOptions& options) {
  const SolveResult discrete = solve_discrete(inst, options.copy_cap);
  SolveStats stats;
  stats.z = discrete.objective;
  if (discrete.objective == 0.0 || inst.n() == 0) {
    SolveResult r = zero_result(inst);
    r.stats = stats;
    return r;
  }
  const std::int64_t n = inst.n();
  const double alpha = eps.value() * discrete.objective / (2.0 * static_cast<double>(n));
  const std::int64_t copies = eps.ceil_div(2 * n);
  // c * alpha >= Z >= OPT.
  return discretize_and_cut(inst, alpha, copies, {}, discrete.objective, options.copy_cap, stats);
}

SolveResult solve_costed_fptas(const Instance& inst, std::span<const double> costs,
                               const Epsilon& eps, const SolveOptions& options) {
  check_costs(inst, costs);
  std::vector<double> req(inst.m());
  for (std::size_t i = 0; i < inst.m(); ++i) {
    const Edge& e = inst.edge(i);
    if (inst.is_terminal(e.u) && inst.is_terminal(e.v)) {
      req[i] = 0.0;
    } else if (inst.is_terminal(e.u) || inst.is_terminal(e.v)) {
      const Vertex u = inst.is_terminal(e.u) ? e.v : e.u;
      req[i] = e.w * costs[static_cast<std::size_t>(u)];
    } else {
      const double cu = costs[static_cast<std::size_t>(e.u)];
      const double cv = costs[static_cast<std::size_t>(e.v)];
      req[i] = e.w / (1.0 / cu + 1.0 / cv);
    }
  }
  const BottleneckResult bn = solve_bottleneck(inst, req);
  SolveStats stats;
  stats.p_star = bn.p_star;
  if (bn.zero_cut || inst.n() == 0) {
    SolveResult r = zero_result(inst, costs);
    r.stats = stats;
    return r;
  }
  const std::int64_t n = inst.n();
  const double alpha = eps.value() * bn.p_star / static_cast<double>(n);
  const std::int64_t copies = eps.ceil_div(n * n);
  // Powers bound / c_v separate in exact arithmetic; step past any rounding
  // in w / (1/c_u + 1/c_v) so they also do in doubles.
  double bound = static_cast<double>(n) * bn.p_star;
  auto uniform_cost = [&] {
    std::vector<double> p(static_cast<std::size_t>(n));
    for (std::size_t v = 0; v < p.size(); ++v) p[v] = bound / costs[v];
    return PowerAssignment(std::move(p));
  };
  while (!is_feasible_cut(inst, uniform_cost()).feasible) {
    bound = std::nextafter(bound, std::numeric_limits<double>::infinity());
  }
  return discretize_and_cut(inst, alpha, copies, costs, bound, options.copy_cap, stats);
}

SolveResult solve_integer(const Instance& inst, const SolveOptions& options) {
  if (!has_integral_weights(inst)) throw InvalidInput("fractional edge weight; the integer solver needs integral weights");
  const double max_w = inst.max_weight();
  if (max_w == 0.0 || inst.n() == 0) return zero_result(inst);
  const auto copies = static_cast<std::int64_t>(max_w) + 1;
  return discretize_and_cut(inst, 1.0, copies, {}, 0.0, options.copy_cap, {});
}

SolveResult solve_uniform(const Instance& inst, const SolveOptions& options) {
  if (!has_uniform_weights(inst)) throw InvalidInput("positive edge weights are not uniform");
  const double w = inst.max_weight();
  if (w == 0.0 || inst.n() == 0) return zero_result(inst);
  // Divide rather than multiply by 1/w so every positive weight becomes
  // exactly 1.
  std::vector<Edge> unit_edges(inst.edges());
  for (Edge& e : unit_edges) e.w /= w;
  const SolveResult unit = solve_integer(Instance::FromEdges(inst.n(), unit_edges), options);
  std::vector<double> powers(unit.assignment.values());
  for (double& p : powers) p *= w;
  SolveResult result = make_result(inst, PowerAssignment(std::move(powers)));
  result.stats = unit.stats;
  result.stats.alpha = w;
  return result;
}

}  // namespace mspec
