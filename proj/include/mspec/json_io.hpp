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

#ifndef MSPEC_JSON_IO_HPP_
#define MSPEC_JSON_IO_HPP_

// JSON formats shared by the CLI and the test suites:
//
//   instance  {"vertices": ["u","v"], "edges": [{"u":"s","v":"u","w":3.0}]}
//   powers    {"powers": {"u": 3.0, "v": 0.0}}
//   costs     {"u": 10.0, "v": 1.0}
//   domains   {"u": [0, 1, 2.5]}
//   disks     {"rect": {"x0":0,"y0":0,"x1":3,"y1":2},
//              "disks": [{"x":0.8,"y":1.0,"r":1.0}]}
//
// All parse_* functions throw ParseError on malformed input and let
// InvalidInput / Infeasible from the domain types propagate.

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "mspec/barrier.hpp"
#include "mspec/bottleneck.hpp"
#include "mspec/domain.hpp"
#include "mspec/instance.hpp"

namespace mspec {

using Json = nlohmann::ordered_json;

Instance parse_instance(std::string_view document);
Json instance_to_json(const Instance& inst);
std::string serialize_instance(const Instance& inst);

PowerAssignment parse_powers(std::string_view document, const Instance& inst);
Json powers_to_json(const Instance& inst, const PowerAssignment& powers);

// One cost per vertex of V, in vertex order. Every vertex must be listed.
std::vector<double> parse_costs(std::string_view document, const Instance& inst);

PowerDomain parse_domains(std::string_view document, const Instance& inst);

DiskConfig parse_disks(std::string_view document);

Json edges_to_json(const Instance& inst, const std::vector<std::size_t>& edges);

// {"powers": ..., "objective": ..., "cut_edges": [...], "feasible": ...}
Json result_to_json(const Instance& inst, const SolveResult& result);

Json bottleneck_to_json(const Instance& inst, const BottleneckResult& result);

}  // namespace mspec

#endif  // MSPEC_JSON_IO_HPP_
