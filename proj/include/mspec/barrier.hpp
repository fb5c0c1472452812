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

#ifndef MSPEC_BARRIER_HPP_
#define MSPEC_BARRIER_HPP_

#include <span>
#include <string>
#include <vector>

#include "mspec/epsilon.hpp"
#include "mspec/fptas.hpp"
#include "mspec/instance.hpp"

namespace mspec {

struct Rect {
  double x0 = 0.0;
  double y0 = 0.0;
  double x1 = 0.0;
  double y1 = 0.0;
};

struct Disk {
  double x = 0.0;
  double y = 0.0;
  double r = 1.0;
};

// Sensor disks inside a rectangle; the barrier must stop bottom-to-top
// crossings, i.e. the disks chain from the left wall to the right wall.
struct DiskConfig {
  Rect rect;
  std::vector<Disk> disks;

  // Throws InvalidInput for a degenerate rectangle, a non-positive radius or
  // a center outside the rectangle.
  void validate() const;
};

// Vertex i of the instance is disk i.
//   (u, v): r_u + r_v - dist(u, v)   when >= 0
//   (s, u): r_u - (x_u - x0)          when >= 0
//   (t, u): r_u - (x1 - x_u)          when >= 0
// Exact zeros (tangency) are kept as weight-0 edges.
Instance reduce_disks(const DiskConfig& cfg);

enum class ShrinkMode { kFptas, kFast, kIntegerIfApplicable };

struct ShrinkResult {
  std::vector<double> shrinks;
  double objective = 0.0;
  // Disks whose shrink exceeds their radius (reported, not clamped).
  std::vector<std::size_t> over_radius;
  SolveResult solve;
};

ShrinkResult min_shrinkage(const DiskConfig& cfg, const Epsilon& eps,
                           ShrinkMode mode = ShrinkMode::kFptas,
                           const SolveOptions& options = {});

// Rectangle outline, original disks as outlines, shrunken disks filled, and
// a legend with the total shrinkage. Throws InvalidInput when `shrinks` does
// not have one entry per disk.
std::string render_svg(const DiskConfig& cfg, std::span<const double> shrinks);

}  // namespace mspec

#endif  // MSPEC_BARRIER_HPP_
