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

#ifndef MSPEC_INSTANCE_HPP_
#define MSPEC_INSTANCE_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mspec {

// Vertices of V are numbered 0..n-1. The terminals s and t are n and n+1.
using Vertex = std::int32_t;

struct Edge {
  Vertex u;
  Vertex v;
  double w;
};

// Undirected edge-weighted graph on V ∪ {s, t}. Immutable once built.
//
// Construction validates the instance: weights are finite and non-negative,
// there are no self-loops, endpoints are known, and s-t edges of positive
// weight are rejected as infeasible (p_s = p_t = 0 can never remove them).
// Parallel edges collapse to the minimum weight; the first occurrence fixes
// the edge's position and orientation.
class Instance {
 public:
  struct NamedEdge {
    std::string u;
    std::string v;
    double w;
  };

  Instance() = default;

  // Builds from vertex names. "s" and "t" are reserved terminal names.
  static Instance FromNames(std::vector<std::string> vertices,
                            const std::vector<NamedEdge>& edges);

  // Builds from indices; unnamed vertices are called "v0", "v1", ...
  static Instance FromEdges(std::int32_t num_vertices,
                            const std::vector<Edge>& edges);

  std::int32_t n() const { return static_cast<std::int32_t>(names_.size()); }
  std::size_t m() const { return edges_.size(); }
  Vertex source() const { return n(); }
  Vertex sink() const { return n() + 1; }
  bool is_terminal(Vertex v) const { return v >= n(); }

  const std::vector<Edge>& edges() const { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_[i]; }

  // Structure-of-arrays view of the edges, used by the vector kernels.
  std::span<const std::int32_t> endpoints_u() const { return eu_; }
  std::span<const std::int32_t> endpoints_v() const { return ev_; }
  std::span<const double> weights() const { return w_; }

  const std::vector<std::string>& vertex_names() const { return names_; }
  std::string_view name(Vertex v) const;
  std::optional<Vertex> find(std::string_view name) const;

  // Edge indices incident to v (terminals included).
  std::span<const std::size_t> incident(Vertex v) const {
    return incident_[static_cast<std::size_t>(v)];
  }

  double max_weight() const;

  // Same graph with every weight multiplied by `factor` (> 0).
  Instance scaled(double factor) const;

 private:
  void finalize();

  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
  std::vector<std::int32_t> eu_;
  std::vector<std::int32_t> ev_;
  std::vector<double> w_;
  std::vector<std::vector<std::size_t>> incident_;
};

// Non-negative power per vertex of V; s and t are implicitly 0.
class PowerAssignment {
 public:
  PowerAssignment() = default;
  explicit PowerAssignment(std::vector<double> powers);
  static PowerAssignment Zero(std::int32_t n) {
    return PowerAssignment(std::vector<double>(static_cast<std::size_t>(n), 0.0));
  }

  std::size_t size() const { return powers_.size(); }
  double operator[](Vertex v) const { return powers_[static_cast<std::size_t>(v)]; }
  const std::vector<double>& values() const { return powers_; }
  double total() const;

 private:
  std::vector<double> powers_;
};

struct FeasibilityReport {
  bool feasible = false;
  // Indices of edges with p_u + p_v >= w.
  std::vector<std::size_t> removed_edges;
  // When infeasible: an s-t path (vertex sequence) in the residual graph.
  std::vector<Vertex> path;
};

// Removes every edge with p_u + p_v >= w_uv and tests whether s and t are
// still connected. Comparisons are exact; there is no epsilon slack.
FeasibilityReport is_feasible_cut(const Instance& inst,
                                  const PowerAssignment& powers);

// Indices of edges removed by `powers` (p_u + p_v >= w).
std::vector<std::size_t> removed_edges(const Instance& inst,
                                       const PowerAssignment& powers);

// True when s and t are disconnected after deleting edges flagged in
// `removed` (one byte per edge).
bool separates(const Instance& inst, std::span<const std::uint8_t> removed);

struct SolveStats {
  std::optional<double> alpha;
  std::optional<std::int64_t> copies_per_vertex;
  std::optional<double> p_star;
  std::optional<double> z;
  std::int64_t graph_vertices = 0;
  std::int64_t graph_edges = 0;
  std::int64_t cut_size = 0;
  std::int64_t flow_phases = 0;
};

struct SolveResult {
  PowerAssignment assignment;
  // Sum of powers, or sum of c_v * p_v for the vertex-cost variant.
  double objective = 0.0;
  std::vector<std::size_t> cut_edges;
  bool feasible = true;
  SolveStats stats;
};

// Packages an assignment: verifies it separates s and t (throws
// std::logic_error otherwise) and fills cut_edges and objective.
SolveResult make_result(const Instance& inst, PowerAssignment assignment,
                        std::span<const double> costs = {});

}  // namespace mspec

#endif  // MSPEC_INSTANCE_HPP_
