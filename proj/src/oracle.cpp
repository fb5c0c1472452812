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

#include "mspec/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "mspec/error.hpp"
#include "mspec/fptas.hpp"
#include "mspec/simd.hpp"

namespace mspec {

namespace {

constexpr double kDualityTolerance = 1e-9;

struct CrossingView {
  // Per vertex of V: weight of its crossing terminal edge (or -1) and index.
  std::vector<double> terminal_w;
  std::vector<std::size_t> terminal_edge;
  // Crossing internal edges incident to each vertex.
  std::vector<std::vector<std::size_t>> internal;
};

// Heaviest selection where every vertex of V is used at most once.
// State: bitmask of vertices already decided; the next vertex to decide is
// the lowest one not in the mask.
class SelectionSearch {
 public:
  SelectionSearch(const Instance& inst, const CrossingView& view)
      : inst_(inst), view_(view), n_(inst.n()),
        best_(std::size_t{1} << n_, -1.0), choice_(std::size_t{1} << n_, kUnset) {}

  double solve(std::uint32_t decided) {
    if (decided == full()) return 0.0;
    double& memo = best_[decided];
    if (memo >= 0.0) return memo;
    const int v = std::countr_one(decided);
    const std::uint32_t bit = 1u << v;
    double best = solve(decided | bit);
    std::int64_t pick = kSkip;
    if (view_.terminal_w[static_cast<std::size_t>(v)] >= 0.0) {
      const double cand = view_.terminal_w[static_cast<std::size_t>(v)] + solve(decided | bit);
      if (cand > best) {
        best = cand;
        pick = static_cast<std::int64_t>(view_.terminal_edge[static_cast<std::size_t>(v)]);
      }
    }
    for (std::size_t ei : view_.internal[static_cast<std::size_t>(v)]) {
      const Edge& e = inst_.edge(ei);
      const Vertex u = e.u == v ? e.v : e.u;
      const std::uint32_t ubit = 1u << u;
      if (decided & ubit) continue;
      const double cand = e.w + solve(decided | bit | ubit);
      if (cand > best) {
        best = cand;
        pick = static_cast<std::int64_t>(ei);
      }
    }
    choice_[decided] = pick;
    memo = best;
    return best;
  }

  std::vector<std::size_t> selection() const {
    std::vector<std::size_t> out;
    std::uint32_t decided = 0;
    while (decided != full()) {
      const int v = std::countr_one(decided);
      const std::int64_t pick = choice_[decided];
      decided |= 1u << v;
      if (pick == kSkip) continue;
      out.push_back(static_cast<std::size_t>(pick));
      const Edge& e = inst_.edge(static_cast<std::size_t>(pick));
      for (Vertex x : {e.u, e.v}) {
        if (!inst_.is_terminal(x)) decided |= 1u << x;
      }
    }
    return out;
  }

 private:
  static constexpr std::int64_t kUnset = -2;
  static constexpr std::int64_t kSkip = -1;
  std::uint32_t full() const { return n_ == 32 ? ~0u : (1u << n_) - 1u; }

  const Instance& inst_;
  const CrossingView& view_;
  std::int32_t n_;
  std::vector<double> best_;
  std::vector<std::int64_t> choice_;
};

// Cover y from complementary slackness. With y_l = pi_l on the s side and
// y_r = -pi_r on the t side every condition is a difference constraint
// pi_b <= pi_a + len; shortest distances from a root (pi = 0) satisfy them.
std::vector<double> cover_from_selection(const Instance& inst,
                                         const std::vector<bool>& source_side,
                                         const std::vector<std::size_t>& crossing,
                                         const std::vector<std::size_t>& selection) {
  const std::int32_t n = inst.n();
  const std::int32_t root = n;
  struct Arc {
    std::int32_t from, to;
    double len;
  };
  std::vector<Arc> arcs;
  std::vector<bool> matched(static_cast<std::size_t>(n), false);
  std::vector<bool> selected(inst.m(), false);
  for (std::size_t ei : selection) {
    selected[ei] = true;
    const Edge& e = inst.edge(ei);
    for (Vertex x : {e.u, e.v}) {
      if (!inst.is_terminal(x)) matched[static_cast<std::size_t>(x)] = true;
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (source_side[static_cast<std::size_t>(v)]) {
      arcs.push_back({v, root, 0.0});                      // y >= 0
      if (!matched[static_cast<std::size_t>(v)]) arcs.push_back({root, v, 0.0});  // y = 0
    } else {
      arcs.push_back({root, v, 0.0});
      if (!matched[static_cast<std::size_t>(v)]) arcs.push_back({v, root, 0.0});
    }
  }
  for (std::size_t ei : crossing) {
    const Edge& e = inst.edge(ei);
    const bool tu = inst.is_terminal(e.u);
    const bool tv = inst.is_terminal(e.v);
    if (tu && tv) continue;
    if (tu || tv) {
      const Vertex v = tu ? e.v : e.u;
      if (source_side[static_cast<std::size_t>(v)]) {   // edge to t: pi_v >= w
        arcs.push_back({v, root, -e.w});
        if (selected[ei]) arcs.push_back({root, v, e.w});
      } else {                                           // edge to s: pi_v <= -w
        arcs.push_back({root, v, -e.w});
        if (selected[ei]) arcs.push_back({v, root, e.w});
      }
      continue;
    }
    const Vertex l = source_side[static_cast<std::size_t>(e.u)] ? e.u : e.v;
    const Vertex r = l == e.u ? e.v : e.u;
    arcs.push_back({l, r, -e.w});
    if (selected[ei]) arcs.push_back({r, l, e.w});
  }

  std::vector<double> dist(static_cast<std::size_t>(n) + 1, std::numeric_limits<double>::infinity());
  dist[static_cast<std::size_t>(root)] = 0.0;
  for (std::int32_t round = 0; round <= n + 1; ++round) {
    bool changed = false;
    for (const Arc& a : arcs) {
      const double d = dist[static_cast<std::size_t>(a.from)];
      if (d == std::numeric_limits<double>::infinity()) continue;
      if (d + a.len < dist[static_cast<std::size_t>(a.to)]) {
        dist[static_cast<std::size_t>(a.to)] = d + a.len;
        changed = true;
      }
    }
    if (!changed) break;
  }

  std::vector<double> y(static_cast<std::size_t>(n), 0.0);
  for (Vertex v = 0; v < n; ++v) {
    const double d = dist[static_cast<std::size_t>(v)];
    const double val = source_side[static_cast<std::size_t>(v)] ? d : -d;
    y[static_cast<std::size_t>(v)] = std::isfinite(val) ? std::max(0.0, val) : 0.0;
  }
  // Round-off from the distance sums may leave a constraint short by an ulp.
  for (std::size_t ei : crossing) {
    const Edge& e = inst.edge(ei);
    const bool tu = inst.is_terminal(e.u);
    const bool tv = inst.is_terminal(e.v);
    if (tu && tv) continue;
    if (tu || tv) {
      double& yv = y[static_cast<std::size_t>(tu ? e.v : e.u)];
      yv = std::max(yv, e.w);
      continue;
    }
    double& yu = y[static_cast<std::size_t>(e.u)];
    const double yv = y[static_cast<std::size_t>(e.v)];
    while (yu + yv < e.w) yu = std::nextafter(std::max(yu, e.w - yv), std::numeric_limits<double>::infinity());
  }
  return y;
}

}  // namespace

PartitionCertificate solve_partition(const Instance& inst, const std::vector<bool>& source_side) {
  const std::int32_t n = inst.n();
  if (source_side.size() != static_cast<std::size_t>(n)) throw InvalidInput("partition size mismatch");
  if (n > 31) throw LimitExceeded("partition search supports at most 31 vertices");
  auto on_source = [&](Vertex v) {
    if (v == inst.source()) return true;
    if (v == inst.sink()) return false;
    return static_cast<bool>(source_side[static_cast<std::size_t>(v)]);
  };

  PartitionCertificate cert;
  cert.source_side = source_side;
  CrossingView view;
  view.terminal_w.assign(static_cast<std::size_t>(n), -1.0);
  view.terminal_edge.assign(static_cast<std::size_t>(n), 0);
  view.internal.assign(static_cast<std::size_t>(n), {});
  for (std::size_t ei = 0; ei < inst.m(); ++ei) {
    const Edge& e = inst.edge(ei);
    if (on_source(e.u) == on_source(e.v)) continue;
    cert.crossing.push_back(ei);
    const bool tu = inst.is_terminal(e.u);
    const bool tv = inst.is_terminal(e.v);
    if (tu && tv) continue;
    if (tu || tv) {
      const auto v = static_cast<std::size_t>(tu ? e.v : e.u);
      view.terminal_w[v] = e.w;
      view.terminal_edge[v] = ei;
    } else {
      view.internal[static_cast<std::size_t>(e.u)].push_back(ei);
      view.internal[static_cast<std::size_t>(e.v)].push_back(ei);
    }
  }

  SelectionSearch search(inst, view);
  search.solve(0);
  cert.selection = search.selection();
  double weight = 0.0;
  for (std::size_t ei : cert.selection) weight += inst.edge(ei).w;
  cert.matching_weight = weight;
  cert.cover = cover_from_selection(inst, source_side, cert.crossing, cert.selection);

  double cover_total = 0.0;
  for (double y : cert.cover) cover_total += y;
  if (std::abs(cover_total - weight) > kDualityTolerance * std::max(1.0, weight)) {
    throw std::logic_error("cover total differs from selection weight on a partition");
  }
  return cert;
}

OracleResult oracle_opt(const Instance& inst, std::int32_t cap) {
  const std::int32_t n = inst.n();
  if (n > cap || n > 30) {
    throw LimitExceeded("oracle refuses " + std::to_string(n) + " vertices (cap " +
                        std::to_string(cap) + ")");
  }
  OracleResult best;
  bool have = false;
  std::vector<bool> side(static_cast<std::size_t>(n));
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    for (Vertex v = 0; v < n; ++v) side[static_cast<std::size_t>(v)] = (mask >> v) & 1u;
    PartitionCertificate cert = solve_partition(inst, side);
    if (!have || cert.matching_weight < best.opt) {
      best.opt = cert.matching_weight;
      best.certificate = std::move(cert);
      have = true;
    }
  }
  best.assignment = PowerAssignment(best.certificate.cover);
  if (!is_feasible_cut(inst, best.assignment).feasible) {
    throw std::logic_error("oracle witness does not separate s and t");
  }
  return best;
}

double oracle_enum_integer(const Instance& inst, std::int64_t budget) {
  if (!has_integral_weights(inst)) throw InvalidInput("integer enumeration needs integral weights");
  const std::int32_t n = inst.n();
  const auto top = static_cast<std::int64_t>(inst.max_weight());
  std::int64_t count = 1;
  for (std::int32_t i = 0; i < n; ++i) {
    count *= top + 1;
    if (count > budget) throw LimitExceeded("integer enumeration exceeds its budget");
  }
  std::vector<std::int64_t> digits(static_cast<std::size_t>(n), 0);
  std::vector<double> power(static_cast<std::size_t>(n) + 2, 0.0);
  std::vector<std::uint8_t> mask(inst.m());
  const auto& kernels = simd::active_kernels();
  std::int64_t sum = 0;
  std::int64_t best = std::numeric_limits<std::int64_t>::max();
  for (std::int64_t iter = 0; iter < count; ++iter) {
    if (sum < best) {
      kernels.mark_removed(power.data(), inst.endpoints_u().data(), inst.endpoints_v().data(),
                           inst.weights().data(), mask.data(), inst.m());
      if (separates(inst, mask)) best = sum;
    }
    // Odometer increment.
    for (std::int32_t i = 0; i < n; ++i) {
      auto& d = digits[static_cast<std::size_t>(i)];
      if (d < top) {
        ++d;
        ++sum;
        power[static_cast<std::size_t>(i)] = static_cast<double>(d);
        break;
      }
      sum -= d;
      d = 0;
      power[static_cast<std::size_t>(i)] = 0.0;
    }
  }
  return static_cast<double>(best);
}

}  // namespace mspec
