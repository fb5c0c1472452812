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

#ifndef MSPEC_SIMD_KERNELS_INTERNAL_HPP_
#define MSPEC_SIMD_KERNELS_INTERNAL_HPP_

#include <cstddef>
#include <cstdint>

namespace mspec::simd::detail {

void mark_removed_scalar(const double* power, const std::int32_t* eu,
                         const std::int32_t* ev, const double* w,
                         std::uint8_t* out, std::size_t count);
void pair_overlap_scalar(double x, double y, double r, const double* xs,
                         const double* ys, const double* rs, double* out,
                         std::size_t count);

#if defined(__x86_64__) || defined(_M_X64)
#define MSPEC_HAVE_AVX2_KERNELS 1
void mark_removed_avx2(const double* power, const std::int32_t* eu,
                       const std::int32_t* ev, const double* w,
                       std::uint8_t* out, std::size_t count);
void pair_overlap_avx2(double x, double y, double r, const double* xs,
                       const double* ys, const double* rs, double* out,
                       std::size_t count);
#endif

#if defined(__aarch64__)
#define MSPEC_HAVE_NEON_KERNELS 1
void mark_removed_neon(const double* power, const std::int32_t* eu,
                       const std::int32_t* ev, const double* w,
                       std::uint8_t* out, std::size_t count);
void pair_overlap_neon(double x, double y, double r, const double* xs,
                       const double* ys, const double* rs, double* out,
                       std::size_t count);
#endif

}  // namespace mspec::simd::detail

#endif  // MSPEC_SIMD_KERNELS_INTERNAL_HPP_
