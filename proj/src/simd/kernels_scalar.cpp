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

#include <cmath>

#include "mspec/simd.hpp"
#include "simd/kernels_internal.hpp"

namespace mspec::simd::detail {

void mark_removed_scalar(const double* power, const std::int32_t* eu,
                         const std::int32_t* ev, const double* w,
                         std::uint8_t* out, std::size_t count) {
  for (std::size_t e = 0; e < count; ++e) {
    out[e] = static_cast<std::uint8_t>(power[eu[e]] + power[ev[e]] >= w[e]);
  }
}

void pair_overlap_scalar(double x, double y, double r, const double* xs,
                         const double* ys, const double* rs, double* out,
                         std::size_t count) {
  for (std::size_t j = 0; j < count; ++j) {
    const double dx = x - xs[j];
    const double dy = y - ys[j];
    const double sq = dx * dx + dy * dy;
    out[j] = (r + rs[j]) - std::sqrt(sq);
  }
}

}  // namespace mspec::simd::detail
