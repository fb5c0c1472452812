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

#ifndef MSPEC_DISCRETIZE_HPP_
#define MSPEC_DISCRETIZE_HPP_

#include <cstdint>
#include <span>
#include <vector>

#include "mspec/instance.hpp"
#include "mspec/mincut.hpp"

namespace mspec {

inline constexpr std::int64_t kDefaultCopyCap = 5'000'000;

// The copy graph G': vertex v of V becomes copies v(0..c_v-1), where cutting
// the first k copies means assigning v the power level(v, k). Copies u(i),
// v(j) are adjacent iff level(u,i) + level(v,j) < w_uv, and u(i) is adjacent
// to a terminal x iff level(u,i) < w_ux. Levels are non-decreasing in i, so
// neighborhoods are nested, N(v(i)) ⊇ N(v(i+1)), and every original edge
// contributes one staircase of copy pairs.
//
// The bounded form used by the solvers appends a sentinel copy v(c_v) that
// can never be cut. Its level is the largest power v can receive, so cutting
// every other copy leaves a vertex that still carries its real edges
// instead of one that has vanished from G'.
class DiscretizedGraph {
 public:
  std::int32_t n() const { return static_cast<std::int32_t>(copies_.size()); }
  double alpha() const { return alpha_; }
  // Cuttable copies of v.
  std::int32_t copies(Vertex v) const { return copies_[static_cast<std::size_t>(v)]; }
  bool has_sentinel() const { return !top_.empty(); }
  // Nodes of v in G': the copies plus the sentinel, if any.
  std::int32_t node_count(Vertex v) const { return copies(v) + (has_sentinel() ? 1 : 0); }
  std::int32_t node(Vertex v, std::int32_t i) const {
    return first_[static_cast<std::size_t>(v)] + i;
  }
  // Owning vertex and copy index of a non-terminal node.
  Vertex owner(std::int32_t node) const { return owner_[static_cast<std::size_t>(node)]; }
  std::int32_t copy_index(std::int32_t node) const {
    return node - first_[static_cast<std::size_t>(owner(node))];
  }
  // Power represented by cutting the first k copies of v (0 <= k <= c_v);
  // with a sentinel, k = c_v gives the sentinel's level.
  double power_at(Vertex v, std::int32_t k) const;
  // Level of copy v(i): the power assumed on any path through it.
  double level(Vertex v, std::int32_t i) const { return power_at(v, i); }

  const CutGraph& graph() const { return graph_; }
  std::int64_t vertex_count() const { return graph_.size(); }
  std::int64_t edge_count() const { return graph_.edge_count(); }

 private:
  friend DiscretizedGraph build_discretized_costed(const Instance&, double,
                                                   std::int64_t,
                                                   std::span<const double>,
                                                   std::int64_t);
  friend DiscretizedGraph build_discretized_bounded(const Instance&, double,
                                                    std::int64_t,
                                                    std::span<const double>,
                                                    double, std::int64_t);
  static DiscretizedGraph Build(const Instance& inst, double alpha,
                                std::int64_t copies, std::span<const double> costs,
                                bool sentinel, double bound, std::int64_t copy_cap);

  double alpha_ = 0.0;
  std::vector<std::int32_t> copies_;
  std::vector<std::int32_t> first_;
  std::vector<Vertex> owner_;
  std::vector<double> vertex_cost_;  // empty: plain levels i * alpha
  std::vector<double> top_;          // sentinel levels; empty: no sentinel
  CutGraph graph_;
};

// Plain construction: c copies per vertex, level(v, i) = i * alpha.
// Throws InvalidInput for alpha <= 0 or copies < 1, LimitExceeded when
// n * copies exceeds `copy_cap`.
DiscretizedGraph build_discretized(const Instance& inst, double alpha,
                                   std::int64_t copies,
                                   std::int64_t copy_cap = kDefaultCopyCap);

// Vertex-cost construction: level(v, i) = (i * alpha) / cost_v, so that each
// copy carries power-cost alpha.
DiscretizedGraph build_discretized_costed(const Instance& inst, double alpha,
                                          std::int64_t copies,
                                          std::span<const double> costs,
                                          std::int64_t copy_cap = kDefaultCopyCap);

// Solver form: c copies per vertex plus an uncuttable sentinel whose level
// is max(level(v, c), bound / cost_v) (cost 1 without `costs`). `bound` is a
// power (or power-cost) no optimal solution exceeds; it keeps floating-point
// rounding of c * alpha from dropping the top level below it.
DiscretizedGraph build_discretized_bounded(const Instance& inst, double alpha,
                                           std::int64_t copies,
                                           std::span<const double> costs,
                                           double bound,
                                           std::int64_t copy_cap = kDefaultCopyCap);

// Number of copies of each vertex present in `cut` (terminals ignored).
// Throws InvalidInput when `cut` does not separate the terminals of G' or
// contains a sentinel.
std::vector<std::int32_t> prefix_counts(const DiscretizedGraph& dg,
                                        std::span<const std::int32_t> cut);

// The prefix-normalized form of a cut: v(0..k_v-1) for every v.
std::vector<std::int32_t> normalized_cut(const DiscretizedGraph& dg,
                                         std::span<const std::int32_t> counts);

// Prefix-normalizes `cut` and reads off p_v = power_at(v, k_v).
PowerAssignment extract_powers(const DiscretizedGraph& dg,
                               std::span<const std::int32_t> cut);

// Shared with the domain solver: adds, for every original edge, the
// staircase between copy blocks whose levels are given per vertex.
// `levels[v]` must be non-decreasing; `first[v]` is the node of v(0).
void add_level_edges(const Instance& inst,
                     const std::vector<std::vector<double>>& levels,
                     std::span<const std::int32_t> first, std::int32_t source,
                     std::int32_t sink, CutGraph& graph);

}  // namespace mspec

#endif  // MSPEC_DISCRETIZE_HPP_
