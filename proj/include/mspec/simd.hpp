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

#ifndef MSPEC_SIMD_HPP_
#define MSPEC_SIMD_HPP_

// Data-parallel inner loops with a scalar reference and vector variants.
// Every variant must produce bit-identical output to the scalar reference;
// tests/test_kernels.cpp enforces this for each ISA available at runtime.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace mspec::simd {

enum class Isa { kScalar, kAvx2, kNeon };

std::string_view isa_name(Isa isa);

struct KernelTable {
  Isa isa;
  // out[e] = (power[eu[e]] + power[ev[e]] >= w[e]) for e < count.
  void (*mark_removed)(const double* power, const std::int32_t* eu,
                       const std::int32_t* ev, const double* w,
                       std::uint8_t* out, std::size_t count);
  // out[j] = (r + rs[j]) - sqrt((x - xs[j])^2 + (y - ys[j])^2).
  void (*pair_overlap)(double x, double y, double r, const double* xs,
                       const double* ys, const double* rs, double* out,
                       std::size_t count);
};

const KernelTable& scalar_kernels();
// nullptr when the CPU (or the build target) lacks the ISA.
const KernelTable* avx2_kernels();
const KernelTable* neon_kernels();

// Best table for this CPU, chosen once. MSPEC_ISA=scalar|avx2|neon
// overrides the choice when the requested ISA is available.
const KernelTable& active_kernels();

// Span front-ends over active_kernels().
void mark_removed(std::span<const double> power,
                  std::span<const std::int32_t> eu,
                  std::span<const std::int32_t> ev, std::span<const double> w,
                  std::span<std::uint8_t> out);

void pair_overlap(double x, double y, double r, std::span<const double> xs,
                  std::span<const double> ys, std::span<const double> rs,
                  std::span<double> out);

}  // namespace mspec::simd

#endif  // MSPEC_SIMD_HPP_
