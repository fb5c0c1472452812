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

#if defined(MSPEC_HAVE_AVX2_KERNELS)

#include <immintrin.h>

// Compiled for the baseline target; only these functions use AVX2, and they
// are reached solely through the runtime dispatcher after a CPUID check.
// "fma" is deliberately absent from the target list so that no contraction
// can change rounding relative to the scalar reference.
#define MSPEC_AVX2 __attribute__((target("avx2")))

namespace mspec::simd::detail {

MSPEC_AVX2 void mark_removed_avx2(const double* power, const std::int32_t* eu,
                                  const std::int32_t* ev, const double* w,
                                  std::uint8_t* out, std::size_t count) {
  std::size_t e = 0;
  for (; e + 4 <= count; e += 4) {
    const __m128i iu = _mm_loadu_si128(reinterpret_cast<const __m128i*>(eu + e));
    const __m128i iv = _mm_loadu_si128(reinterpret_cast<const __m128i*>(ev + e));
    const __m256d pu = _mm256_i32gather_pd(power, iu, 8);
    const __m256d pv = _mm256_i32gather_pd(power, iv, 8);
    const __m256d sum = _mm256_add_pd(pu, pv);
    const __m256d ge = _mm256_cmp_pd(sum, _mm256_loadu_pd(w + e), _CMP_GE_OQ);
    const int bits = _mm256_movemask_pd(ge);
    out[e + 0] = static_cast<std::uint8_t>(bits & 1);
    out[e + 1] = static_cast<std::uint8_t>((bits >> 1) & 1);
    out[e + 2] = static_cast<std::uint8_t>((bits >> 2) & 1);
    out[e + 3] = static_cast<std::uint8_t>((bits >> 3) & 1);
  }
  mark_removed_scalar(power, eu + e, ev + e, w + e, out + e, count - e);
}

MSPEC_AVX2 void pair_overlap_avx2(double x, double y, double r,
                                  const double* xs, const double* ys,
                                  const double* rs, double* out,
                                  std::size_t count) {
  const __m256d vx = _mm256_set1_pd(x);
  const __m256d vy = _mm256_set1_pd(y);
  const __m256d vr = _mm256_set1_pd(r);
  std::size_t j = 0;
  for (; j + 4 <= count; j += 4) {
    const __m256d dx = _mm256_sub_pd(vx, _mm256_loadu_pd(xs + j));
    const __m256d dy = _mm256_sub_pd(vy, _mm256_loadu_pd(ys + j));
    const __m256d sq = _mm256_add_pd(_mm256_mul_pd(dx, dx), _mm256_mul_pd(dy, dy));
    const __m256d reach = _mm256_add_pd(vr, _mm256_loadu_pd(rs + j));
    _mm256_storeu_pd(out + j, _mm256_sub_pd(reach, _mm256_sqrt_pd(sq)));
  }
  pair_overlap_scalar(x, y, r, xs + j, ys + j, rs + j, out + j, count - j);
}

}  // namespace mspec::simd::detail

#endif  // MSPEC_HAVE_AVX2_KERNELS
