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

#include "mspec/mincut.hpp"

#include <algorithm>
#include <cmath>

#include "flow_network.hpp"
#include "mspec/error.hpp"

namespace mspec {

CutGraph::CutGraph(std::int32_t num_vertices, double cost) {
  for (std::int32_t i = 0; i < num_vertices; ++i) add_vertex(cost);
}

std::int32_t CutGraph::add_vertex(double cost) {
  if (std::isnan(cost) || cost < 0.0) throw InvalidInput("vertex cost must be non-negative");
  cost_.push_back(cost);
  plain_adj_.emplace_back();
  member_.emplace_back();
  return size() - 1;
}

void CutGraph::set_cost(std::int32_t v, double cost) {
  if (std::isnan(cost) || cost < 0.0) throw InvalidInput("vertex cost must be non-negative");
  cost_.at(static_cast<std::size_t>(v)) = cost;
}

void CutGraph::add_edge(std::int32_t a, std::int32_t b) {
  if (a < 0 || b < 0 || a >= size() || b >= size()) throw InvalidInput("edge endpoint out of range");
  if (a == b) throw InvalidInput("self-loop in cut graph");
  edges_.emplace_back(a, b);
  plain_adj_[static_cast<std::size_t>(a)].push_back(b);
  plain_adj_[static_cast<std::size_t>(b)].push_back(a);
}

void CutGraph::add_staircase(std::vector<std::int32_t> rows,
                             std::vector<std::int32_t> cols,
                             std::vector<std::int32_t> row_len) {
  if (rows.size() != row_len.size()) throw InvalidInput("staircase row length mismatch");
  std::int32_t prev = static_cast<std::int32_t>(cols.size());
  for (std::int32_t len : row_len) {
    if (len < 0 || len > prev) throw InvalidInput("staircase rows must be non-increasing prefixes");
    prev = len;
  }
  if (row_len.empty() || row_len.front() == 0) return;
  for (auto v : rows) {
    if (v < 0 || v >= size()) throw InvalidInput("staircase vertex out of range");
  }
  for (auto v : cols) {
    if (v < 0 || v >= size()) throw InvalidInput("staircase vertex out of range");
  }
  // Trim rows and columns that carry no edge.
  std::size_t live_rows = 0;
  while (live_rows < row_len.size() && row_len[live_rows] > 0) ++live_rows;
  rows.resize(live_rows);
  row_len.resize(live_rows);
  cols.resize(static_cast<std::size_t>(row_len.front()));

  Staircase st;
  st.col_len.assign(cols.size(), 0);
  for (std::size_t j = 0; j < cols.size(); ++j) {
    // Rows are non-increasing, so rows with row_len > j form a prefix.
    auto it = std::partition_point(row_len.begin(), row_len.end(),
                                   [&](std::int32_t len) { return len > static_cast<std::int32_t>(j); });
    st.col_len[j] = static_cast<std::int32_t>(it - row_len.begin());
  }
  const auto id = static_cast<std::int32_t>(stairs_.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    member_[static_cast<std::size_t>(rows[i])].push_back({id, static_cast<std::int32_t>(i), true});
  }
  for (std::size_t j = 0; j < cols.size(); ++j) {
    member_[static_cast<std::size_t>(cols[j])].push_back({id, static_cast<std::int32_t>(j), false});
  }
  st.rows = std::move(rows);
  st.cols = std::move(cols);
  st.row_len = std::move(row_len);
  stairs_.push_back(std::move(st));
}

void CutGraph::set_terminals(std::int32_t source, std::int32_t sink) {
  if (source < 0 || sink < 0 || source >= size() || sink >= size()) {
    throw InvalidInput("terminal out of range");
  }
  if (source == sink) throw InvalidInput("source and sink coincide");
  source_ = source;
  sink_ = sink;
}

bool CutGraph::unit_costs() const {
  for (std::int32_t v = 0; v < size(); ++v) {
    const double c = cost_[static_cast<std::size_t>(v)];
    if (v != source_ && v != sink_ && c != 1.0 && c != kInfiniteCost) return false;
  }
  return true;
}

std::int64_t CutGraph::edge_count() const {
  std::int64_t total = static_cast<std::int64_t>(edges_.size());
  for (const Staircase& st : stairs_) {
    for (std::int32_t len : st.row_len) total += len;
  }
  return total;
}

void CutGraph::for_each_neighbor(std::int32_t v,
                                 const std::function<void(std::int32_t)>& f) const {
  for (std::int32_t w : plain_adj_[static_cast<std::size_t>(v)]) f(w);
  for (const Membership& m : member_[static_cast<std::size_t>(v)]) {
    const Staircase& st = stairs_[static_cast<std::size_t>(m.stair)];
    if (m.is_row) {
      for (std::int32_t j = 0; j < st.row_len[static_cast<std::size_t>(m.index)]; ++j) {
        f(st.cols[static_cast<std::size_t>(j)]);
      }
    } else {
      for (std::int32_t i = 0; i < st.col_len[static_cast<std::size_t>(m.index)]; ++i) {
        f(st.rows[static_cast<std::size_t>(i)]);
      }
    }
  }
}

std::vector<std::pair<std::int32_t, std::int32_t>> CutGraph::expanded_edges() const {
  std::vector<std::pair<std::int32_t, std::int32_t>> out(edges_);
  for (const Staircase& st : stairs_) {
    for (std::size_t i = 0; i < st.rows.size(); ++i) {
      for (std::int32_t j = 0; j < st.row_len[i]; ++j) {
        out.emplace_back(st.rows[i], st.cols[static_cast<std::size_t>(j)]);
      }
    }
  }
  return out;
}

bool CutGraph::adjacent(std::int32_t a, std::int32_t b) const {
  bool found = false;
  for_each_neighbor(a, [&](std::int32_t w) { found = found || w == b; });
  return found;
}

bool CutGraph::separates(std::span<const std::int32_t> removed) const {
  if (source_ < 0) throw InvalidInput("cut graph terminals not set");
  std::vector<char> blocked(cost_.size(), 0);
  for (std::int32_t v : removed) {
    if (v < 0 || v >= size()) throw InvalidInput("cut vertex out of range");
    if (v != source_ && v != sink_) blocked[static_cast<std::size_t>(v)] = 1;
  }
  std::vector<char> seen(cost_.size(), 0);
  std::vector<std::int32_t> row_done(stairs_.size(), 0);
  std::vector<std::int32_t> col_done(stairs_.size(), 0);
  std::vector<std::int32_t> queue{source_};
  seen[static_cast<std::size_t>(source_)] = 1;
  auto visit = [&](std::int32_t w) {
    if (!seen[static_cast<std::size_t>(w)] && !blocked[static_cast<std::size_t>(w)]) {
      seen[static_cast<std::size_t>(w)] = 1;
      queue.push_back(w);
    }
  };
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::int32_t x = queue[head];
    if (x == sink_) return false;
    for (std::int32_t w : plain_adj_[static_cast<std::size_t>(x)]) visit(w);
    for (const Membership& m : member_[static_cast<std::size_t>(x)]) {
      const Staircase& st = stairs_[static_cast<std::size_t>(m.stair)];
      // Each visit exposes a prefix of the other side; only the part beyond
      // the longest prefix already exposed is new.
      if (m.is_row) {
        std::int32_t& done = row_done[static_cast<std::size_t>(m.stair)];
        const std::int32_t len = st.row_len[static_cast<std::size_t>(m.index)];
        for (; done < len; ++done) visit(st.cols[static_cast<std::size_t>(done)]);
      } else {
        std::int32_t& done = col_done[static_cast<std::size_t>(m.stair)];
        const std::int32_t len = st.col_len[static_cast<std::size_t>(m.index)];
        for (; done < len; ++done) visit(st.rows[static_cast<std::size_t>(done)]);
      }
    }
  }
  return true;
}

namespace {

template <typename Cap>
VertexCut solve_cut(const CutGraph& g, bool use_costs) {
  if (g.source() < 0 || g.sink() < 0) throw InvalidInput("cut graph terminals not set");
  if (g.adjacent(g.source(), g.sink())) {
    throw InvalidInput("source and sink are adjacent; no vertex cut exists");
  }
  const std::int32_t n = g.size();
  auto in = [](std::int32_t v) { return 2 * v; };
  auto out = [](std::int32_t v) { return 2 * v + 1; };

  Cap inf;
  Cap tol;
  if constexpr (std::is_floating_point_v<Cap>) {
    double finite = 0.0;
    for (std::int32_t v = 0; v < n; ++v) {
      if (v == g.source() || v == g.sink()) continue;
      const double c = use_costs ? g.cost(v) : 1.0;
      if (std::isfinite(c)) finite += c;
    }
    inf = finite + 1.0;
    tol = inf * 1e-12;
  } else {
    inf = static_cast<Cap>(n) + 1;
    tol = 0;
  }

  internal::FlowNetwork<Cap> net(2 * n);
  for (std::int32_t v = 0; v < n; ++v) {
    Cap cap = inf;
    if (v != g.source() && v != g.sink()) {
      if constexpr (std::is_floating_point_v<Cap>) {
        const double c = use_costs ? g.cost(v) : 1.0;
        cap = std::isfinite(c) ? c : inf;
      } else {
        cap = std::isfinite(g.cost(v)) ? 1 : inf;
      }
    }
    net.add_arc(in(v), out(v), cap);
  }
  for (const auto& [a, b] : g.plain_edges()) {
    net.add_arc(out(a), in(b), inf);
    net.add_arc(out(b), in(a), inf);
  }
  // Staircase gadget: chain node k reaches the first k+1 vertices of the
  // opposite side, so a vertex with prefix length L feeds chain node L-1.
  auto add_chain = [&](const std::vector<std::int32_t>& from,
                       const std::vector<std::int32_t>& len,
                       const std::vector<std::int32_t>& to) {
    const std::int32_t reach = len.front();
    const std::int32_t base = net.nodes();
    for (std::int32_t k = 0; k < reach; ++k) net.add_node();
    for (std::int32_t k = 0; k < reach; ++k) {
      net.add_arc(base + k, in(to[static_cast<std::size_t>(k)]), inf);
      if (k > 0) net.add_arc(base + k, base + k - 1, inf);
    }
    for (std::size_t i = 0; i < from.size(); ++i) {
      if (len[i] > 0) net.add_arc(out(from[i]), base + len[i] - 1, inf);
    }
  };
  for (const CutGraph::Staircase& st : g.staircases()) {
    add_chain(st.rows, st.row_len, st.cols);
    add_chain(st.cols, st.col_len, st.rows);
  }

  VertexCut cut;
  const Cap flow = net.max_flow(out(g.source()), in(g.sink()), tol);
  cut.flow = static_cast<double>(flow);
  cut.phases = net.phases();
  const std::vector<char> reach = net.reachable(out(g.source()), tol);
  double cost = 0.0;
  bool infinite = false;
  for (std::int32_t v = 0; v < n; ++v) {
    if (v == g.source() || v == g.sink()) continue;
    if (reach[static_cast<std::size_t>(in(v))] && !reach[static_cast<std::size_t>(out(v))]) {
      cut.vertices.push_back(v);
      const double c = use_costs ? g.cost(v) : 1.0;
      if (!std::isfinite(c)) infinite = true;
      cost += c;
    }
  }
  // Any finite separator costs less than inf - 1/2; more flow than that
  // means the residual split crosses an infinite arc.
  if (infinite || static_cast<double>(flow) > static_cast<double>(inf) - 0.5) {
    cut.vertices.clear();
    cut.cost = CutGraph::kInfiniteCost;
  } else {
    cut.cost = cost;
  }
  return cut;
}

}  // namespace

VertexCut min_vertex_cut(const CutGraph& g) { return solve_cut<std::int32_t>(g, false); }

VertexCut min_cost_vertex_cut(const CutGraph& g) {
  if (g.unit_costs()) return solve_cut<std::int32_t>(g, false);
  return solve_cut<double>(g, true);
}

}  // namespace mspec
