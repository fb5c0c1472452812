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

#ifndef MSPEC_FLOW_NETWORK_HPP_
#define MSPEC_FLOW_NETWORK_HPP_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

namespace mspec::internal {

// Directed network for Dinitz blocking flow. Arcs are added in mate pairs
// (2k forward, 2k+1 residual); adjacency is compressed once before solving.
template <typename Cap>
class FlowNetwork {
 public:
  explicit FlowNetwork(std::int32_t nodes) : nodes_(nodes) {}

  std::int32_t add_node() { return nodes_++; }
  std::int32_t nodes() const { return nodes_; }
  std::size_t arcs() const { return to_.size(); }

  void add_arc(std::int32_t from, std::int32_t to, Cap cap) {
    from_.push_back(from);
    to_.push_back(to);
    cap_.push_back(cap);
    from_.push_back(to);
    to_.push_back(from);
    cap_.push_back(Cap{0});
  }

  // Residual capacities <= tol count as saturated.
  Cap max_flow(std::int32_t s, std::int32_t t, Cap tol) {
    compress();
    Cap total{0};
    std::vector<std::int32_t> iter(static_cast<std::size_t>(nodes_));
    std::vector<std::int32_t> path;
    while (build_levels(s, t, tol)) {
      ++phases_;
      std::copy(offset_.begin(), offset_.end() - 1, iter.begin());
      path.clear();
      std::int32_t u = s;
      for (;;) {
        if (u == t) {
          Cap f = cap_[static_cast<std::size_t>(path.front())];
          for (std::int32_t a : path) f = std::min(f, cap_[static_cast<std::size_t>(a)]);
          for (std::int32_t a : path) {
            cap_[static_cast<std::size_t>(a)] -= f;
            cap_[static_cast<std::size_t>(a ^ 1)] += f;
          }
          total += f;
          std::size_t k = 0;
          while (k < path.size() && cap_[static_cast<std::size_t>(path[k])] > tol) ++k;
          path.resize(k);
          u = path.empty() ? s : to_[static_cast<std::size_t>(path.back())];
          continue;
        }
        bool advanced = false;
        const std::int32_t end = offset_[static_cast<std::size_t>(u) + 1];
        for (std::int32_t& it = iter[static_cast<std::size_t>(u)]; it < end; ++it) {
          const std::int32_t a = adj_[static_cast<std::size_t>(it)];
          const std::int32_t v = to_[static_cast<std::size_t>(a)];
          if (cap_[static_cast<std::size_t>(a)] > tol &&
              level_[static_cast<std::size_t>(v)] == level_[static_cast<std::size_t>(u)] + 1) {
            path.push_back(a);
            u = v;
            advanced = true;
            break;
          }
        }
        if (advanced) continue;
        if (path.empty()) break;
        path.pop_back();
        u = path.empty() ? s : to_[static_cast<std::size_t>(path.back())];
        ++iter[static_cast<std::size_t>(u)];
      }
    }
    return total;
  }

  // Nodes reachable from s through arcs with residual capacity > tol.
  std::vector<char> reachable(std::int32_t s, Cap tol) const {
    std::vector<char> seen(static_cast<std::size_t>(nodes_), 0);
    std::vector<std::int32_t> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t u = queue[head];
      for (std::int32_t it = offset_[static_cast<std::size_t>(u)];
           it < offset_[static_cast<std::size_t>(u) + 1]; ++it) {
        const std::int32_t a = adj_[static_cast<std::size_t>(it)];
        const std::int32_t v = to_[static_cast<std::size_t>(a)];
        if (!seen[static_cast<std::size_t>(v)] && cap_[static_cast<std::size_t>(a)] > tol) {
          seen[static_cast<std::size_t>(v)] = 1;
          queue.push_back(v);
        }
      }
    }
    return seen;
  }

  std::int64_t phases() const { return phases_; }

 private:
  void compress() {
    if (!from_.empty() || offset_.empty()) {
      offset_.assign(static_cast<std::size_t>(nodes_) + 1, 0);
      for (std::int32_t f : from_) ++offset_[static_cast<std::size_t>(f) + 1];
      for (std::size_t i = 1; i < offset_.size(); ++i) offset_[i] += offset_[i - 1];
      adj_.resize(from_.size());
      std::vector<std::int32_t> fill(offset_.begin(), offset_.end() - 1);
      for (std::size_t a = 0; a < from_.size(); ++a) {
        adj_[static_cast<std::size_t>(fill[static_cast<std::size_t>(from_[a])]++)] =
            static_cast<std::int32_t>(a);
      }
      from_.clear();
      from_.shrink_to_fit();
      level_.resize(static_cast<std::size_t>(nodes_));
    }
  }

  bool build_levels(std::int32_t s, std::int32_t t, Cap tol) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<std::int32_t>& queue = queue_;
    queue.clear();
    queue.push_back(s);
    level_[static_cast<std::size_t>(s)] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::int32_t u = queue[head];
      for (std::int32_t it = offset_[static_cast<std::size_t>(u)];
           it < offset_[static_cast<std::size_t>(u) + 1]; ++it) {
        const std::int32_t a = adj_[static_cast<std::size_t>(it)];
        const std::int32_t v = to_[static_cast<std::size_t>(a)];
        if (level_[static_cast<std::size_t>(v)] < 0 && cap_[static_cast<std::size_t>(a)] > tol) {
          level_[static_cast<std::size_t>(v)] = level_[static_cast<std::size_t>(u)] + 1;
          queue.push_back(v);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  std::int32_t nodes_;
  std::vector<std::int32_t> from_;
  std::vector<std::int32_t> to_;
  std::vector<Cap> cap_;
  std::vector<std::int32_t> offset_;
  std::vector<std::int32_t> adj_;
  std::vector<std::int32_t> level_;
  std::vector<std::int32_t> queue_;
  std::int64_t phases_ = 0;
};

}  // namespace mspec::internal

#endif  // MSPEC_FLOW_NETWORK_HPP_
