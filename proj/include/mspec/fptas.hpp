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

#ifndef MSPEC_FPTAS_HPP_
#define MSPEC_FPTAS_HPP_

#include <cstdint>
#include <span>

#include "mspec/discretize.hpp"
#include "mspec/epsilon.hpp"
#include "mspec/instance.hpp"

namespace mspec {

struct SolveOptions {
  std::int64_t copy_cap = kDefaultCopyCap;
};

// (1 + eps)-approximation. Scale from the bottleneck power p*:
// alpha = eps * p* / n and ceil(n^2 / eps) copies per vertex. The minimum
// vertex cut K of G' gives p_v = alpha * k_v with objective alpha * |K|.
// Returns the zero assignment when p* = 0.
SolveResult solve_fptas(const Instance& inst, const Epsilon& eps,
                        const SolveOptions& options = {});

// Same guarantee with fewer copies: Z is the optimum restricted to incident
// edge weights (Z/2 <= OPT <= Z), alpha = eps * Z / (2n), ceil(2n / eps)
// copies per vertex.
SolveResult solve_fast_fptas(const Instance& inst, const Epsilon& eps,
                             const SolveOptions& options = {});

// Minimizes sum c_v p_v within (1 + eps). The scale q* is the bottleneck
// over power-costs: edge (u,v) needs q >= w / (1/c_u + 1/c_v), terminal edge
// (x,u) needs q >= w * c_u. Each copy of v stands for power alpha / c_v.
SolveResult solve_costed_fptas(const Instance& inst, std::span<const double> costs,
                               const Epsilon& eps, const SolveOptions& options = {});

// Exact for integral weights: alpha = 1, W + 1 copies (W = max weight).
// Throws InvalidInput when a weight has a fractional part.
SolveResult solve_integer(const Instance& inst, const SolveOptions& options = {});

// Exact when all positive weights are equal: rescale to 1 and run the
// integer solver; every power is 0 or w. Throws InvalidInput otherwise.
SolveResult solve_uniform(const Instance& inst, const SolveOptions& options = {});

bool has_integral_weights(const Instance& inst);
bool has_uniform_weights(const Instance& inst);

}  // namespace mspec

#endif  // MSPEC_FPTAS_HPP_
