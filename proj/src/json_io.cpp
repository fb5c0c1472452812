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

#include "mspec/json_io.hpp"

#include <cmath>

#include "mspec/error.hpp"

namespace mspec {

namespace {

Json parse_document(std::string_view document) {
  try {
    return Json::parse(document.begin(), document.end());
  } catch (const Json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

const Json& field(const Json& obj, const char* key) {
  if (!obj.is_object()) throw ParseError("expected a JSON object");
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(std::string("missing field '") + key + "'");
  return *it;
}

double number(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string(what) + " must be a number");
  return j.get<double>();
}

std::string text(const Json& j, const char* what) {
  if (!j.is_string()) throw ParseError(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Vertex lookup(const Instance& inst, const std::string& name) {
  auto v = inst.find(name);
  if (!v || inst.is_terminal(*v)) throw InvalidInput("unknown vertex identifier '" + name + "'");
  return *v;
}

}  // namespace

Instance parse_instance(std::string_view document) {
  const Json doc = parse_document(document);
  const Json& vs = field(doc, "vertices");
  const Json& es = field(doc, "edges");
  if (!vs.is_array() || !es.is_array()) throw ParseError("'vertices' and 'edges' must be arrays");
  std::vector<std::string> names;
  for (const Json& v : vs) names.push_back(text(v, "vertex identifier"));
  std::vector<Instance::NamedEdge> edges;
  for (const Json& e : es) {
    edges.push_back({text(field(e, "u"), "edge endpoint"), text(field(e, "v"), "edge endpoint"),
                     number(field(e, "w"), "edge weight")});
  }
  return Instance::FromNames(std::move(names), edges);
}

Json instance_to_json(const Instance& inst) {
  Json doc;
  doc["vertices"] = inst.vertex_names();
  Json edges = Json::array();
  for (const Edge& e : inst.edges()) {
    edges.push_back({{"u", inst.name(e.u)}, {"v", inst.name(e.v)}, {"w", e.w}});
  }
  doc["edges"] = std::move(edges);
  return doc;
}

std::string serialize_instance(const Instance& inst) { return instance_to_json(inst).dump(); }

PowerAssignment parse_powers(std::string_view document, const Instance& inst) {
  const Json doc = parse_document(document);
  const Json& ps = field(doc, "powers");
  if (!ps.is_object()) throw ParseError("'powers' must be an object");
  std::vector<double> powers(static_cast<std::size_t>(inst.n()), 0.0);
  std::vector<bool> seen(powers.size(), false);
  for (const auto& [name, value] : ps.items()) {
    const Vertex v = lookup(inst, name);
    powers[static_cast<std::size_t>(v)] = number(value, "power");
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("power assignment misses vertex '" + std::string(inst.name(v)) + "'");
    }
  }
  return PowerAssignment(std::move(powers));
}

Json powers_to_json(const Instance& inst, const PowerAssignment& powers) {
  Json ps = Json::object();
  for (Vertex v = 0; v < inst.n(); ++v) ps[std::string(inst.name(v))] = powers[v];
  return Json{{"powers", std::move(ps)}};
}

std::vector<double> parse_costs(std::string_view document, const Instance& inst) {
  const Json doc = parse_document(document);
  if (!doc.is_object()) throw ParseError("cost document must be an object");
  std::vector<double> costs(static_cast<std::size_t>(inst.n()), std::nan(""));
  for (const auto& [name, value] : doc.items()) {
    costs[static_cast<std::size_t>(lookup(inst, name))] = number(value, "cost");
  }
  for (Vertex v = 0; v < inst.n(); ++v) {
    const double c = costs[static_cast<std::size_t>(v)];
    if (std::isnan(c)) throw InvalidInput("missing cost for vertex '" + std::string(inst.name(v)) + "'");
    if (!(c > 0.0)) throw InvalidInput("vertex costs must be positive");
  }
  return costs;
}

PowerDomain parse_domains(std::string_view document, const Instance& inst) {
  const Json doc = parse_document(document);
  if (!doc.is_object()) throw ParseError("domain document must be an object");
  std::vector<std::vector<double>> values(static_cast<std::size_t>(inst.n()));
  std::vector<bool> seen(values.size(), false);
  for (const auto& [name, list] : doc.items()) {
    const Vertex v = lookup(inst, name);
    if (!list.is_array()) throw ParseError("domain of '" + name + "' must be an array");
    for (const Json& d : list) values[static_cast<std::size_t>(v)].push_back(number(d, "domain value"));
    seen[static_cast<std::size_t>(v)] = true;
  }
  for (Vertex v = 0; v < inst.n(); ++v) {
    if (!seen[static_cast<std::size_t>(v)]) {
      throw InvalidInput("missing domain for vertex '" + std::string(inst.name(v)) + "'");
    }
  }
  return PowerDomain(std::move(values));
}

DiskConfig parse_disks(std::string_view document) {
  const Json doc = parse_document(document);
  const Json& rect = field(doc, "rect");
  DiskConfig cfg;
  cfg.rect = {number(field(rect, "x0"), "x0"), number(field(rect, "y0"), "y0"),
              number(field(rect, "x1"), "x1"), number(field(rect, "y1"), "y1")};
  const Json& disks = field(doc, "disks");
  if (!disks.is_array()) throw ParseError("'disks' must be an array");
  for (const Json& d : disks) {
    Disk disk{number(field(d, "x"), "x"), number(field(d, "y"), "y"), 1.0};
    if (d.contains("r")) disk.r = number(d["r"], "r");
    cfg.disks.push_back(disk);
  }
  cfg.validate();
  return cfg;
}

Json edges_to_json(const Instance& inst, const std::vector<std::size_t>& edges) {
  Json out = Json::array();
  for (std::size_t ei : edges) {
    const Edge& e = inst.edge(ei);
    out.push_back({{"u", inst.name(e.u)}, {"v", inst.name(e.v)}, {"w", e.w}});
  }
  return out;
}

Json result_to_json(const Instance& inst, const SolveResult& result) {
  Json out = powers_to_json(inst, result.assignment);
  out["feasible"] = result.feasible;
  out["objective"] = result.objective;
  out["cut_edges"] = result.feasible ? edges_to_json(inst, result.cut_edges) : Json::array();
  return out;
}

Json bottleneck_to_json(const Instance& inst, const BottleneckResult& result) {
  return Json{{"p_star", result.p_star},
              {"removed_edges", edges_to_json(inst, result.removed_edges)},
              {"zero_cut", result.zero_cut}};
}

}  // namespace mspec
