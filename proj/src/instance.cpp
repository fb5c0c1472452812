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

#include "mspec/instance.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

#include "mspec/error.hpp"
#include "mspec/simd.hpp"

namespace mspec {

namespace {

constexpr std::string_view kSourceName = "s";
constexpr std::string_view kSinkName = "t";

void check_weight(double w) {
  if (!std::isfinite(w)) throw InvalidInput("edge weight is not finite");
  if (w < 0.0) throw InvalidInput("negative edge weight");
}

}  // namespace

Instance Instance::FromNames(std::vector<std::string> vertices,
                             const std::vector<NamedEdge>& edges) {
  Instance inst;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    const std::string& name = vertices[i];
    if (name == kSourceName || name == kSinkName) {
      throw InvalidInput("vertex identifier '" + name + "' is reserved");
    }
    if (!inst.index_.emplace(name, static_cast<Vertex>(i)).second) {
      throw InvalidInput("duplicate vertex identifier '" + name + "'");
    }
  }
  inst.names_ = std::move(vertices);

  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const NamedEdge& e : edges) {
    auto resolve = [&](const std::string& name) {
      auto v = inst.find(name);
      if (!v) throw InvalidInput("unknown endpoint identifier '" + name + "'");
      return *v;
    };
    indexed.push_back({resolve(e.u), resolve(e.v), e.w});
  }
  inst.edges_ = std::move(indexed);
  inst.finalize();
  return inst;
}

Instance Instance::FromEdges(std::int32_t num_vertices,
                             const std::vector<Edge>& edges) {
  if (num_vertices < 0) throw InvalidInput("negative vertex count");
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(num_vertices));
  for (std::int32_t i = 0; i < num_vertices; ++i) {
    names.push_back("v" + std::to_string(i));
  }
  Instance inst;
  for (std::size_t i = 0; i < names.size(); ++i) {
    inst.index_.emplace(names[i], static_cast<Vertex>(i));
  }
  inst.names_ = std::move(names);
  for (const Edge& e : edges) {
    const Vertex hi = num_vertices + 1;
    if (e.u < 0 || e.u > hi || e.v < 0 || e.v > hi) {
      throw InvalidInput("edge endpoint out of range");
    }
  }
  inst.edges_ = edges;
  inst.finalize();
  return inst;
}

void Instance::finalize() {
  const Vertex s = source();
  const Vertex t = sink();
  std::map<std::pair<Vertex, Vertex>, std::size_t> seen;
  std::vector<Edge> unique;
  unique.reserve(edges_.size());
  for (const Edge& e : edges_) {
    check_weight(e.w);
    if (e.u == e.v) throw InvalidInput("self-loop on '" + std::string(name(e.u)) + "'");
    const auto key = std::minmax(e.u, e.v);
    auto [it, inserted] = seen.emplace(key, unique.size());
    if (inserted) {
      unique.push_back(e);
    } else {
      unique[it->second].w = std::min(unique[it->second].w, e.w);
    }
  }
  for (const Edge& e : unique) {
    const bool st = (e.u == s && e.v == t) || (e.u == t && e.v == s);
    if (st && e.w > 0.0) throw Infeasible("instance infeasible: s-t edge of positive weight");
  }
  edges_ = std::move(unique);

  eu_.resize(edges_.size());
  ev_.resize(edges_.size());
  w_.resize(edges_.size());
  incident_.assign(static_cast<std::size_t>(n()) + 2, {});
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    eu_[i] = edges_[i].u;
    ev_[i] = edges_[i].v;
    w_[i] = edges_[i].w;
    incident_[static_cast<std::size_t>(edges_[i].u)].push_back(i);
    incident_[static_cast<std::size_t>(edges_[i].v)].push_back(i);
  }
}

std::string_view Instance::name(Vertex v) const {
  if (v == source()) return kSourceName;
  if (v == sink()) return kSinkName;
  return names_.at(static_cast<std::size_t>(v));
}

std::optional<Vertex> Instance::find(std::string_view name) const {
  if (name == kSourceName) return source();
  if (name == kSinkName) return sink();
  auto it = index_.find(std::string(name));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

double Instance::max_weight() const {
  double best = 0.0;
  for (double w : w_) best = std::max(best, w);
  return best;
}

Instance Instance::scaled(double factor) const {
  if (!(factor > 0.0)) throw InvalidInput("scale factor must be positive");
  Instance copy = *this;
  for (std::size_t i = 0; i < copy.edges_.size(); ++i) {
    copy.edges_[i].w *= factor;
    copy.w_[i] = copy.edges_[i].w;
  }
  return copy;
}

PowerAssignment::PowerAssignment(std::vector<double> powers)
    : powers_(std::move(powers)) {
  for (double p : powers_) {
    if (!std::isfinite(p) || p < 0.0) {
      throw InvalidInput("powers must be finite and non-negative");
    }
  }
}

double PowerAssignment::total() const {
  return std::accumulate(powers_.begin(), powers_.end(), 0.0);
}

namespace {

std::vector<double> extended_powers(const Instance& inst,
                                    const PowerAssignment& powers) {
  if (powers.size() != static_cast<std::size_t>(inst.n())) {
    throw InvalidInput("power assignment does not match the instance's vertex set");
  }
  std::vector<double> ext(powers.values());
  ext.push_back(0.0);  // s
  ext.push_back(0.0);  // t
  return ext;
}

std::vector<std::uint8_t> removal_mask(const Instance& inst,
                                       const PowerAssignment& powers) {
  const std::vector<double> ext = extended_powers(inst, powers);
  std::vector<std::uint8_t> mask(inst.m());
  simd::mark_removed(ext, inst.endpoints_u(), inst.endpoints_v(), inst.weights(),
                     mask);
  return mask;
}

// BFS from s over edges not flagged in `removed`; parent[] gets the tree.
std::vector<Vertex> bfs_tree(const Instance& inst,
                             std::span<const std::uint8_t> removed) {
  const std::size_t total = static_cast<std::size_t>(inst.n()) + 2;
  std::vector<Vertex> parent(total, -1);
  std::vector<Vertex> queue;
  queue.reserve(total);
  const Vertex s = inst.source();
  parent[static_cast<std::size_t>(s)] = s;
  queue.push_back(s);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex x = queue[head];
    for (std::size_t ei : inst.incident(x)) {
      if (removed[ei]) continue;
      const Edge& e = inst.edge(ei);
      const Vertex y = e.u == x ? e.v : e.u;
      if (parent[static_cast<std::size_t>(y)] != -1) continue;
      parent[static_cast<std::size_t>(y)] = x;
      if (y == inst.sink()) return parent;
      queue.push_back(y);
    }
  }
  return parent;
}

}  // namespace

bool separates(const Instance& inst, std::span<const std::uint8_t> removed) {
  if (removed.size() != inst.m()) throw InvalidInput("edge mask size mismatch");
  const auto parent = bfs_tree(inst, removed);
  return parent[static_cast<std::size_t>(inst.sink())] == -1;
}

std::vector<std::size_t> removed_edges(const Instance& inst,
                                       const PowerAssignment& powers) {
  const auto mask = removal_mask(inst, powers);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) out.push_back(i);
  }
  return out;
}

FeasibilityReport is_feasible_cut(const Instance& inst,
                                  const PowerAssignment& powers) {
  const auto mask = removal_mask(inst, powers);
  FeasibilityReport report;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask[i]) report.removed_edges.push_back(i);
  }
  const auto parent = bfs_tree(inst, mask);
  const Vertex t = inst.sink();
  if (parent[static_cast<std::size_t>(t)] == -1) {
    report.feasible = true;
    return report;
  }
  for (Vertex x = t;; x = parent[static_cast<std::size_t>(x)]) {
    report.path.push_back(x);
    if (x == inst.source()) break;
  }
  std::reverse(report.path.begin(), report.path.end());
  return report;
}

SolveResult make_result(const Instance& inst, PowerAssignment assignment,
                        std::span<const double> costs) {
  FeasibilityReport check = is_feasible_cut(inst, assignment);
  if (!check.feasible) {
    throw std::logic_error("solver produced an assignment that does not separate s and t");
  }
  SolveResult result;
  if (costs.empty()) {
    result.objective = assignment.total();
  } else {
    double sum = 0.0;
    for (std::size_t v = 0; v < assignment.size(); ++v) sum += costs[v] * assignment.values()[v];
    result.objective = sum;
  }
  result.assignment = std::move(assignment);
  result.cut_edges = std::move(check.removed_edges);
  return result;
}

}  // namespace mspec
