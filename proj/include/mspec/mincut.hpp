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

#ifndef MSPEC_MINCUT_HPP_
#define MSPEC_MINCUT_HPP_

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <utility>
#include <vector>

namespace mspec {

// Undirected graph with non-negative vertex costs and designated source and
// sink, the input of a minimum s-t vertex cut.
//
// Besides ordinary edges the graph stores "staircases": for row vertices
// r_0..r_{R-1}, column vertices c_0..c_{C-1} and non-increasing row lengths
// L_0 >= L_1 >= ..., the staircase stands for the edges (r_i, c_j), j < L_i.
// Discretized graphs consist almost entirely of staircases, and keeping them
// implicit makes both graph search and the flow network linear in R + C
// instead of quadratic.
class CutGraph {
 public:
  static constexpr double kInfiniteCost = std::numeric_limits<double>::infinity();

  CutGraph() = default;
  explicit CutGraph(std::int32_t num_vertices, double cost = 1.0);

  std::int32_t add_vertex(double cost = 1.0);
  void set_cost(std::int32_t v, double cost);
  void add_edge(std::int32_t a, std::int32_t b);
  void add_staircase(std::vector<std::int32_t> rows,
                     std::vector<std::int32_t> cols,
                     std::vector<std::int32_t> row_len);
  void set_terminals(std::int32_t source, std::int32_t sink);

  std::int32_t size() const { return static_cast<std::int32_t>(cost_.size()); }
  std::int32_t source() const { return source_; }
  std::int32_t sink() const { return sink_; }
  double cost(std::int32_t v) const { return cost_[static_cast<std::size_t>(v)]; }
  // Every non-terminal cost is 1 or infinite.
  bool unit_costs() const;

  // Number of (implicit and explicit) edges.
  std::int64_t edge_count() const;

  // Calls f(w) for every neighbor w of v.
  void for_each_neighbor(std::int32_t v,
                         const std::function<void(std::int32_t)>& f) const;

  // All edges as explicit pairs; intended for small graphs and tests.
  std::vector<std::pair<std::int32_t, std::int32_t>> expanded_edges() const;

  // True when deleting `removed` disconnects source from sink. Runs in time
  // linear in the implicit representation.
  bool separates(std::span<const std::int32_t> removed) const;

  bool adjacent(std::int32_t a, std::int32_t b) const;

  struct Staircase {
    std::vector<std::int32_t> rows;
    std::vector<std::int32_t> cols;
    std::vector<std::int32_t> row_len;
    std::vector<std::int32_t> col_len;  // derived: #{i : row_len[i] > j}
  };
  const std::vector<Staircase>& staircases() const { return stairs_; }
  const std::vector<std::pair<std::int32_t, std::int32_t>>& plain_edges() const {
    return edges_;
  }

 private:
  struct Membership {
    std::int32_t stair;
    std::int32_t index;
    bool is_row;
  };

  std::vector<double> cost_;
  std::vector<std::pair<std::int32_t, std::int32_t>> edges_;
  std::vector<std::vector<std::int32_t>> plain_adj_;
  std::vector<Staircase> stairs_;
  std::vector<std::vector<Membership>> member_;
  std::int32_t source_ = -1;
  std::int32_t sink_ = -1;
};

struct VertexCut {
  std::vector<std::int32_t> vertices;  // sorted
  // Sum of vertex costs; kInfiniteCost when every separator needs an
  // infinite-cost vertex (vertices is then empty).
  double cost = 0.0;
  // Max-flow value; equals `cost` by strong duality.
  double flow = 0.0;
  std::int64_t phases = 0;
};

// Minimum-cardinality s-t vertex separator. Finite costs are treated as 1
// and infinite-cost vertices are never cut (cost kInfiniteCost when they
// would have to be). Dinitz
// blocking flow on the split graph: each vertex is an in -> out arc of
// capacity 1 and each edge a pair of arcs of capacity (|V| + 1). The cut
// returned is the set of vertices whose in-node is source-reachable in the
// final residual graph while the out-node is not.
//
// Throws InvalidInput when source and sink are adjacent or unset.
VertexCut min_vertex_cut(const CutGraph& g);

// Minimum total-cost separator with real, possibly infinite, costs.
VertexCut min_cost_vertex_cut(const CutGraph& g);

}  // namespace mspec

#endif  // MSPEC_MINCUT_HPP_
