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

#include "mspec/discretize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mspec/error.hpp"

namespace mspec {

void add_level_edges(const Instance& inst,
                     const std::vector<std::vector<double>>& levels,
                     std::span<const std::int32_t> first, std::int32_t source,
                     std::int32_t sink, CutGraph& graph) {
  auto block = [&](Vertex v) {
    const auto& lv = levels[static_cast<std::size_t>(v)];
    std::vector<std::int32_t> nodes(lv.size());
    for (std::size_t i = 0; i < lv.size(); ++i) {
      nodes[i] = first[static_cast<std::size_t>(v)] + static_cast<std::int32_t>(i);
    }
    return nodes;
  };
  for (const Edge& e : inst.edges()) {
    const bool tu = inst.is_terminal(e.u);
    const bool tv = inst.is_terminal(e.v);
    if (tu && tv) continue;  // s-t edges have weight 0 and are always removed
    if (tu || tv) {
      const Vertex x = tu ? e.u : e.v;
      const Vertex u = tu ? e.v : e.u;
      const auto& lu = levels[static_cast<std::size_t>(u)];
      std::int32_t len = 0;
      while (len < static_cast<std::int32_t>(lu.size()) &&
             lu[static_cast<std::size_t>(len)] < e.w) {
        ++len;
      }
      graph.add_staircase({x == inst.source() ? source : sink}, block(u), {len});
      continue;
    }
    const auto& la = levels[static_cast<std::size_t>(e.u)];
    const auto& lb = levels[static_cast<std::size_t>(e.v)];
    std::vector<std::int32_t> row_len(la.size());
    auto j = static_cast<std::int32_t>(lb.size());
    for (std::size_t i = 0; i < la.size(); ++i) {
      while (j > 0 && !(la[i] + lb[static_cast<std::size_t>(j - 1)] < e.w)) --j;
      row_len[i] = j;
    }
    graph.add_staircase(block(e.u), block(e.v), std::move(row_len));
  }
}

namespace {


void check_size(const Instance& inst, std::int64_t copies, std::int64_t cap) {
  if (copies < 1) throw InvalidInput("at least one copy per vertex is required");
  const std::int64_t total = static_cast<std::int64_t>(inst.n()) * copies;
  if (total > cap || total > std::numeric_limits<std::int32_t>::max() / 4) {
    throw LimitExceeded("discretized graph needs " + std::to_string(total) +
                        " copies, over the cap of " + std::to_string(cap));
  }
}

}  // namespace

double DiscretizedGraph::power_at(Vertex v, std::int32_t k) const {
  if (!top_.empty() && k == copies(v)) return top_[static_cast<std::size_t>(v)];
  const double p = static_cast<double>(k) * alpha_;
  if (vertex_cost_.empty()) return p;
  return p / vertex_cost_[static_cast<std::size_t>(v)];
}

DiscretizedGraph DiscretizedGraph::Build(const Instance& inst, double alpha,
                                         std::int64_t copies, std::span<const double> costs,
                                         bool sentinel, double bound, std::int64_t copy_cap) {
  if (!(alpha > 0.0) || !std::isfinite(alpha)) throw InvalidInput("alpha must be positive");
  check_size(inst, copies, copy_cap);
  const std::int32_t n = inst.n();
  if (!costs.empty()) {
    if (costs.size() != static_cast<std::size_t>(n)) throw InvalidInput("one cost per vertex expected");
    for (double c : costs) {
      if (!(c > 0.0) || !std::isfinite(c)) throw InvalidInput("vertex costs must be positive");
    }
  }
  const auto c = static_cast<std::int32_t>(copies);
  const std::int32_t per = c + (sentinel ? 1 : 0);

  DiscretizedGraph dg;
  dg.alpha_ = alpha;
  dg.vertex_cost_.assign(costs.begin(), costs.end());
  dg.copies_.assign(static_cast<std::size_t>(n), c);
  dg.first_.resize(static_cast<std::size_t>(n));
  dg.owner_.resize(static_cast<std::size_t>(n) * static_cast<std::size_t>(per));
  if (sentinel) {
    dg.top_.resize(static_cast<std::size_t>(n));
    for (Vertex v = 0; v < n; ++v) {
      const double cost = costs.empty() ? 1.0 : costs[static_cast<std::size_t>(v)];
      const double exact_top = (static_cast<double>(c) * alpha) / cost;
      dg.top_[static_cast<std::size_t>(v)] = std::max(exact_top, bound / cost);
    }
  }
  dg.graph_ = CutGraph(n * per + 2);
  std::vector<std::vector<double>> levels(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    dg.first_[static_cast<std::size_t>(v)] = v * per;
    auto& lv = levels[static_cast<std::size_t>(v)];
    lv.resize(static_cast<std::size_t>(per));
    for (std::int32_t i = 0; i < per; ++i) {
      lv[static_cast<std::size_t>(i)] = dg.power_at(v, i);
      dg.owner_[static_cast<std::size_t>(v * per + i)] = v;
    }
    if (sentinel) dg.graph_.set_cost(v * per + c, CutGraph::kInfiniteCost);
  }
  const std::int32_t source = n * per;
  const std::int32_t sink = n * per + 1;
  dg.graph_.set_terminals(source, sink);
  add_level_edges(inst, levels, dg.first_, source, sink, dg.graph_);
  return dg;
}

DiscretizedGraph build_discretized_costed(const Instance& inst, double alpha,
                                          std::int64_t copies,
                                          std::span<const double> costs,
                                          std::int64_t copy_cap) {
  return DiscretizedGraph::Build(inst, alpha, copies, costs, false, 0.0, copy_cap);
}

DiscretizedGraph build_discretized_bounded(const Instance& inst, double alpha,
                                           std::int64_t copies,
                                           std::span<const double> costs,
                                           double bound, std::int64_t copy_cap) {
  return DiscretizedGraph::Build(inst, alpha, copies, costs, true, bound, copy_cap);
}

DiscretizedGraph build_discretized(const Instance& inst, double alpha,
                                   std::int64_t copies, std::int64_t copy_cap) {
  return build_discretized_costed(inst, alpha, copies, {}, copy_cap);
}

std::vector<std::int32_t> prefix_counts(const DiscretizedGraph& dg,
                                        std::span<const std::int32_t> cut) {
  if (!dg.graph().separates(cut)) throw InvalidInput("cut is not an s-t separator of G'");
  const std::int32_t copies_total = dg.graph().size() - 2;
  std::vector<char> seen(static_cast<std::size_t>(copies_total), 0);
  std::vector<std::int32_t> counts(static_cast<std::size_t>(dg.n()), 0);
  for (std::int32_t node : cut) {
    if (node >= copies_total) continue;  // terminals
    if (seen[static_cast<std::size_t>(node)]) continue;
    seen[static_cast<std::size_t>(node)] = 1;
    if (dg.copy_index(node) >= dg.copies(dg.owner(node))) {
      throw InvalidInput("sentinel copies cannot be cut");
    }
    ++counts[static_cast<std::size_t>(dg.owner(node))];
  }
  return counts;
}

std::vector<std::int32_t> normalized_cut(const DiscretizedGraph& dg,
                                         std::span<const std::int32_t> counts) {
  std::vector<std::int32_t> nodes;
  for (Vertex v = 0; v < dg.n(); ++v) {
    for (std::int32_t i = 0; i < counts[static_cast<std::size_t>(v)]; ++i) {
      nodes.push_back(dg.node(v, i));
    }
  }
  return nodes;
}

PowerAssignment extract_powers(const DiscretizedGraph& dg,
                               std::span<const std::int32_t> cut) {
  const auto counts = prefix_counts(dg, cut);
  // Nested neighborhoods make the prefix form a separator as well.
  if (!dg.graph().separates(normalized_cut(dg, counts))) {
    throw std::logic_error("prefix-normalized cut lost separation");
  }
  std::vector<double> powers(static_cast<std::size_t>(dg.n()));
  for (Vertex v = 0; v < dg.n(); ++v) {
    powers[static_cast<std::size_t>(v)] = dg.power_at(v, counts[static_cast<std::size_t>(v)]);
  }
  return PowerAssignment(std::move(powers));
}

}  // namespace mspec
