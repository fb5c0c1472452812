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

#include <cstdlib>
#include <string>

#include "mspec/simd.hpp"
#include "simd/kernels_internal.hpp"

namespace mspec::simd {

std::string_view isa_name(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return "scalar";
    case Isa::kAvx2:
      return "avx2";
    case Isa::kNeon:
      return "neon";
  }
  return "unknown";
}

const KernelTable& scalar_kernels() {
  static const KernelTable table{Isa::kScalar, &detail::mark_removed_scalar,
                                 &detail::pair_overlap_scalar};
  return table;
}

const KernelTable* avx2_kernels() {
#if defined(MSPEC_HAVE_AVX2_KERNELS)
  static const KernelTable table{Isa::kAvx2, &detail::mark_removed_avx2,
                                 &detail::pair_overlap_avx2};
  static const bool supported = __builtin_cpu_supports("avx2");
  return supported ? &table : nullptr;
#else
  return nullptr;
#endif
}

const KernelTable* neon_kernels() {
#if defined(MSPEC_HAVE_NEON_KERNELS)
  static const KernelTable table{Isa::kNeon, &detail::mark_removed_neon,
                                 &detail::pair_overlap_neon};
  return &table;
#else
  return nullptr;
#endif
}

namespace {

const KernelTable& select_kernels() {
  const char* env = std::getenv("MSPEC_ISA");
  const std::string wanted = env != nullptr ? env : "";
  if (wanted == "scalar") return scalar_kernels();
  if (wanted == "avx2" && avx2_kernels() != nullptr) return *avx2_kernels();
  if (wanted == "neon" && neon_kernels() != nullptr) return *neon_kernels();
  if (const KernelTable* t = avx2_kernels()) return *t;
  if (const KernelTable* t = neon_kernels()) return *t;
  return scalar_kernels();
}

}  // namespace

const KernelTable& active_kernels() {
  static const KernelTable& table = select_kernels();
  return table;
}

void mark_removed(std::span<const double> power,
                  std::span<const std::int32_t> eu,
                  std::span<const std::int32_t> ev, std::span<const double> w,
                  std::span<std::uint8_t> out) {
  active_kernels().mark_removed(power.data(), eu.data(), ev.data(), w.data(),
                                out.data(), w.size());
}

void pair_overlap(double x, double y, double r, std::span<const double> xs,
                  std::span<const double> ys, std::span<const double> rs,
                  std::span<double> out) {
  active_kernels().pair_overlap(x, y, r, xs.data(), ys.data(), rs.data(),
                                out.data(), xs.size());
}

}  // namespace mspec::simd
