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

#include "simd/kernels_internal.hpp"

#if defined(MSPEC_HAVE_NEON_KERNELS)

#include <arm_neon.h>

namespace mspec::simd::detail {

// NEON has no gather; lanes are loaded pairwise and compared two at a time.
void mark_removed_neon(const double* power, const std::int32_t* eu,
                       const std::int32_t* ev, const double* w,
                       std::uint8_t* out, std::size_t count) {
  std::size_t e = 0;
  for (; e + 2 <= count; e += 2) {
    float64x2_t pu = vdupq_n_f64(power[eu[e]]);
    pu = vsetq_lane_f64(power[eu[e + 1]], pu, 1);
    float64x2_t pv = vdupq_n_f64(power[ev[e]]);
    pv = vsetq_lane_f64(power[ev[e + 1]], pv, 1);
    const uint64x2_t ge = vcgeq_f64(vaddq_f64(pu, pv), vld1q_f64(w + e));
    out[e + 0] = static_cast<std::uint8_t>(vgetq_lane_u64(ge, 0) & 1);
    out[e + 1] = static_cast<std::uint8_t>(vgetq_lane_u64(ge, 1) & 1);
  }
  mark_removed_scalar(power, eu + e, ev + e, w + e, out + e, count - e);
}

void pair_overlap_neon(double x, double y, double r, const double* xs,
                       const double* ys, const double* rs, double* out,
                       std::size_t count) {
  const float64x2_t vx = vdupq_n_f64(x);
  const float64x2_t vy = vdupq_n_f64(y);
  const float64x2_t vr = vdupq_n_f64(r);
  std::size_t j = 0;
  for (; j + 2 <= count; j += 2) {
    const float64x2_t dx = vsubq_f64(vx, vld1q_f64(xs + j));
    const float64x2_t dy = vsubq_f64(vy, vld1q_f64(ys + j));
    // vmulq + vaddq, not vfmaq: rounding must match the scalar loop.
    const float64x2_t sq = vaddq_f64(vmulq_f64(dx, dx), vmulq_f64(dy, dy));
    const float64x2_t reach = vaddq_f64(vr, vld1q_f64(rs + j));
    vst1q_f64(out + j, vsubq_f64(reach, vsqrtq_f64(sq)));
  }
  pair_overlap_scalar(x, y, r, xs + j, ys + j, rs + j, out + j, count - j);
}

}  // namespace mspec::simd::detail

#endif  // MSPEC_HAVE_NEON_KERNELS
