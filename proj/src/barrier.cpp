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

#include "mspec/barrier.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "mspec/domain.hpp"
#include "mspec/error.hpp"
#include "mspec/simd.hpp"

namespace mspec {

void DiskConfig::validate() const {
  if (!(rect.x0 < rect.x1) || !(rect.y0 < rect.y1)) throw InvalidInput("degenerate rectangle");
  for (const Disk& d : disks) {
    if (!(d.r > 0.0) || !std::isfinite(d.r)) throw InvalidInput("disk radius must be positive");
    if (!(d.x >= rect.x0 && d.x <= rect.x1 && d.y >= rect.y0 && d.y <= rect.y1)) {
      throw InvalidInput("disk center outside the rectangle");
    }
  }
}

Instance reduce_disks(const DiskConfig& cfg) {
  cfg.validate();
  const std::size_t k = cfg.disks.size();
  std::vector<std::string> names;
  names.reserve(k);
  for (std::size_t i = 0; i < k; ++i) names.push_back("d" + std::to_string(i));

  std::vector<double> xs(k), ys(k), rs(k);
  for (std::size_t i = 0; i < k; ++i) {
    xs[i] = cfg.disks[i].x;
    ys[i] = cfg.disks[i].y;
    rs[i] = cfg.disks[i].r;
  }

  std::vector<Instance::NamedEdge> edges;
  std::vector<double> overlap(k);
  for (std::size_t i = 0; i < k; ++i) {
    const Disk& d = cfg.disks[i];
    const double left = d.r - (d.x - cfg.rect.x0);
    if (left >= 0.0) edges.push_back({"s", names[i], left});
    const double right = d.r - (cfg.rect.x1 - d.x);
    if (right >= 0.0) edges.push_back({"t", names[i], right});

    const std::size_t rest = k - i - 1;
    if (rest == 0) continue;
    simd::pair_overlap(d.x, d.y, d.r, std::span(xs).subspan(i + 1), std::span(ys).subspan(i + 1),
                       std::span(rs).subspan(i + 1), std::span(overlap).first(rest));
    for (std::size_t j = 0; j < rest; ++j) {
      if (overlap[j] >= 0.0) edges.push_back({names[i], names[i + 1 + j], overlap[j]});
    }
  }
  return Instance::FromNames(std::move(names), edges);
}

ShrinkResult min_shrinkage(const DiskConfig& cfg, const Epsilon& eps, ShrinkMode mode,
                           const SolveOptions& options) {
  const Instance inst = reduce_disks(cfg);
  ShrinkResult out;
  switch (mode) {
    case ShrinkMode::kFptas:
      out.solve = solve_fptas(inst, eps, options);
      break;
    case ShrinkMode::kFast:
      out.solve = solve_fast_fptas(inst, eps, options);
      break;
    case ShrinkMode::kIntegerIfApplicable:
      out.solve = has_integral_weights(inst) ? solve_integer(inst, options)
                                             : solve_fptas(inst, eps, options);
      break;
  }
  out.shrinks = out.solve.assignment.values();
  out.objective = out.solve.objective;
  for (std::size_t i = 0; i < out.shrinks.size(); ++i) {
    if (out.shrinks[i] > cfg.disks[i].r) out.over_radius.push_back(i);
  }
  return out;
}

std::string render_svg(const DiskConfig& cfg, std::span<const double> shrinks) {
  cfg.validate();
  if (shrinks.size() != cfg.disks.size()) throw InvalidInput("one shrink value per disk expected");

  double lo_x = cfg.rect.x0, hi_x = cfg.rect.x1, lo_y = cfg.rect.y0, hi_y = cfg.rect.y1;
  for (const Disk& d : cfg.disks) {
    lo_x = std::min(lo_x, d.x - d.r);
    hi_x = std::max(hi_x, d.x + d.r);
    lo_y = std::min(lo_y, d.y - d.r);
    hi_y = std::max(hi_y, d.y + d.r);
  }
  constexpr double kWidth = 600.0;
  constexpr double kMargin = 20.0;
  constexpr double kLegend = 30.0;
  const double scale = kWidth / (hi_x - lo_x);
  const double height = (hi_y - lo_y) * scale;
  auto px = [&](double x) { return kMargin + (x - lo_x) * scale; };
  auto py = [&](double y) { return kMargin + (hi_y - y) * scale; };  // y axis points up

  std::ostringstream svg;
  svg << std::setprecision(6);
  svg << R"(<svg xmlns="http://www.w3.org/2000/svg" width=")" << kWidth + 2 * kMargin
      << R"(" height=")" << height + 2 * kMargin + kLegend << R"(">)" << '\n';
  svg << R"(  <rect x=")" << px(cfg.rect.x0) << R"(" y=")" << py(cfg.rect.y1) << R"(" width=")"
      << (cfg.rect.x1 - cfg.rect.x0) * scale << R"(" height=")"
      << (cfg.rect.y1 - cfg.rect.y0) * scale
      << R"(" fill="none" stroke="black" stroke-width="2"/>)" << '\n';
  double total = 0.0;
  for (std::size_t i = 0; i < cfg.disks.size(); ++i) {
    const Disk& d = cfg.disks[i];
    const double s = shrinks[i];
    if (!(s >= 0.0)) throw InvalidInput("shrink values must be non-negative");
    total += s;
    svg << R"(  <circle class="original" cx=")" << px(d.x) << R"(" cy=")" << py(d.y)
        << R"(" r=")" << d.r * scale
        << R"(" fill="none" stroke="gray" stroke-dasharray="4 3"/>)" << '\n';
    const double r = d.r - s;
    if (r > 0.0) {
      svg << R"(  <circle class="shrunk" cx=")" << px(d.x) << R"(" cy=")" << py(d.y)
          << R"(" r=")" << r * scale
          << R"(" fill="steelblue" fill-opacity="0.5" stroke="steelblue"/>)" << '\n';
    } else {
      svg << R"(  <circle class="marker" cx=")" << px(d.x) << R"(" cy=")" << py(d.y)
          << R"(" r="3" fill="crimson"/>)" << '\n';
    }
  }
  svg << R"(  <text x=")" << kMargin << R"(" y=")" << height + 2 * kMargin + kLegend / 2
      << R"(" font-family="sans-serif" font-size="14">total shrinkage: )" << total
      << "</text>\n";
  svg << "</svg>\n";
  return svg.str();
}

}  // namespace mspec
