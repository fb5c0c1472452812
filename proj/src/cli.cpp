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

#include "mspec/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "mspec/barrier.hpp"
#include "mspec/bottleneck.hpp"
#include "mspec/domain.hpp"
#include "mspec/error.hpp"
#include "mspec/fptas.hpp"
#include "mspec/json_io.hpp"
#include "mspec/oracle.hpp"

namespace mspec::cli {

namespace {

struct Options {
  std::string input;
  std::string eps = "0.1";
  std::string costs;
  std::string exact;
  std::string mode;
  std::string domains;
  std::string powers;
  std::string svg;
  bool fast = false;
  bool pretty = false;
  std::int64_t copy_cap = kDefaultCopyCap;
  std::int32_t oracle_cap = kDefaultOracleCap;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 1469598103934665603ull;  // FNV-1a 64
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char hex[17];
  std::snprintf(hex, sizeof(hex), "%016llx", static_cast<unsigned long long>(h));
  return std::string("fnv1a64:") + hex;
}

Json stats_to_json(const SolveStats& s) {
  Json j = Json::object();
  if (s.alpha) j["alpha"] = *s.alpha;
  if (s.copies_per_vertex) j["copies_per_vertex"] = *s.copies_per_vertex;
  if (s.p_star) j["p_star"] = *s.p_star;
  if (s.z) j["z"] = *s.z;
  j["graph_vertices"] = s.graph_vertices;
  j["graph_edges"] = s.graph_edges;
  j["cut_size"] = s.cut_size;
  j["flow_phases"] = s.flow_phases;
  return j;
}

void merge(Json& report, const Json& fields) {
  for (const auto& [k, v] : fields.items()) report[k] = v;
}

// Re-checks a solver's assignment before it is reported.
void verify_or_throw(const Instance& inst, const SolveResult& r) {
  if (r.feasible && !is_feasible_cut(inst, r.assignment).feasible) {
    throw std::logic_error("internal verification failed: assignment does not separate s and t");
  }
}

class Runner {
 public:
  Runner(const std::string& command, const Options& opt) : command_(command), opt_(opt) {
    report_["command"] = command;
  }

  int execute() {
    const auto start = std::chrono::steady_clock::now();
    const std::string input = read_file(opt_.input);
    report_["input_digest"] = digest(input);
    report_["parameters"] = Json::object();
    Json params = Json::object();
    params["copy_cap"] = opt_.copy_cap;
    int code = kExitOk;

    if (command_ == "barrier") {
      code = run_barrier(input, params);
    } else {
      const Instance inst = parse_instance(input);
      code = run_graph(inst, params);
    }
    report_["parameters"] = params;
    const auto end = std::chrono::steady_clock::now();
    report_["duration_ms"] = std::chrono::duration<double, std::milli>(end - start).count();
    return code;
  }

  const Json& report() const { return report_; }
  const std::string& summary() const { return summary_; }

 private:
  int emit_solve(const Instance& inst, const SolveResult& r) {
    verify_or_throw(inst, r);
    merge(report_, result_to_json(inst, r));
    report_["stats"] = stats_to_json(r.stats);
    summary_ = "objective " + std::to_string(r.objective) +
               (r.feasible ? "" : " (infeasible)");
    return r.feasible ? kExitOk : kExitInfeasible;
  }

  int run_graph(const Instance& inst, Json& params) {
    SolveOptions so;
    so.copy_cap = opt_.copy_cap;
    if (command_ == "solve") {
      if (!opt_.exact.empty()) {
        params["exact"] = opt_.exact;
        return emit_solve(inst, solve_exact(inst, opt_.exact, so));
      }
      const Epsilon eps = Epsilon::parse(opt_.eps);
      params["eps"] = eps.value();
      params["eps_rational"] = eps.str();
      params["fast"] = opt_.fast;
      if (!opt_.costs.empty()) {
        if (opt_.fast) throw InvalidInput("--fast and --costs cannot be combined");
        const auto costs = parse_costs(read_file(opt_.costs), inst);
        params["costs"] = opt_.costs;
        return emit_solve(inst, solve_costed_fptas(inst, costs, eps, so));
      }
      return emit_solve(inst, opt_.fast ? solve_fast_fptas(inst, eps, so) : solve_fptas(inst, eps, so));
    }
    if (command_ == "exact") {
      std::string mode = opt_.mode;
      if (mode.empty()) mode = has_uniform_weights(inst) ? "uniform" : "integer";
      params["mode"] = mode;
      return emit_solve(inst, solve_exact(inst, mode, so));
    }
    if (command_ == "bottleneck") {
      const BottleneckResult bn = solve_bottleneck(inst);
      merge(report_, bottleneck_to_json(inst, bn));
      summary_ = "p* = " + std::to_string(bn.p_star);
      return kExitOk;
    }
    if (command_ == "domain") {
      const PowerDomain dom = parse_domains(read_file(opt_.domains), inst);
      params["domains"] = opt_.domains;
      return emit_solve(inst, solve_domain(inst, dom, opt_.copy_cap));
    }
    if (command_ == "discrete") {
      return emit_solve(inst, solve_discrete(inst, opt_.copy_cap));
    }
    if (command_ == "verify") {
      const PowerAssignment pa = parse_powers(read_file(opt_.powers), inst);
      params["powers"] = opt_.powers;
      const FeasibilityReport fr = is_feasible_cut(inst, pa);
      report_["feasible"] = fr.feasible;
      report_["total_power"] = pa.total();
      report_["removed_edges"] = edges_to_json(inst, fr.removed_edges);
      Json path = Json::array();
      for (Vertex v : fr.path) path.push_back(inst.name(v));
      report_["path"] = path;
      summary_ = fr.feasible ? "feasible" : "not a cut";
      return kExitOk;
    }
    if (command_ == "oracle") {
      params["cap"] = opt_.oracle_cap;
      const OracleResult o = oracle_opt(inst, opt_.oracle_cap);
      SolveResult r = make_result(inst, o.assignment);
      r.objective = o.opt;
      merge(report_, result_to_json(inst, r));
      Json side = Json::object();
      for (Vertex v = 0; v < inst.n(); ++v) {
        side[std::string(inst.name(v))] = o.certificate.source_side[static_cast<std::size_t>(v)] ? "s" : "t";
      }
      report_["certificate"] = {{"side", side},
                                {"selection", edges_to_json(inst, o.certificate.selection)},
                                {"matching_weight", o.certificate.matching_weight}};
      summary_ = "OPT = " + std::to_string(o.opt);
      return kExitOk;
    }
    throw InvalidInput("unknown subcommand '" + command_ + "'");
  }

  static SolveResult solve_exact(const Instance& inst, const std::string& mode, const SolveOptions& so) {
    if (mode == "integer") return solve_integer(inst, so);
    if (mode == "uniform") return solve_uniform(inst, so);
    throw InvalidInput("exact mode must be 'integer' or 'uniform'");
  }

  int run_barrier(const std::string& input, Json& params) {
    const DiskConfig cfg = parse_disks(input);
    const Epsilon eps = Epsilon::parse(opt_.eps);
    params["eps"] = eps.value();
    params["eps_rational"] = eps.str();
    params["fast"] = opt_.fast;
    SolveOptions so;
    so.copy_cap = opt_.copy_cap;
    const ShrinkResult sr = min_shrinkage(cfg, eps, opt_.fast ? ShrinkMode::kFast : ShrinkMode::kFptas, so);
    const Instance inst = reduce_disks(cfg);
    verify_or_throw(inst, sr.solve);
    report_["shrinks"] = sr.shrinks;
    report_["objective"] = sr.objective;
    report_["reduced_instance"] = instance_to_json(inst);
    report_["cut_edges"] = edges_to_json(inst, sr.solve.cut_edges);
    report_["over_radius"] = sr.over_radius;
    report_["stats"] = stats_to_json(sr.solve.stats);
    if (!sr.over_radius.empty()) {
      warnings_.push_back("shrink exceeds disk radius for " + std::to_string(sr.over_radius.size()) + " disk(s)");
    }
    if (!opt_.svg.empty()) {
      std::ofstream svg(opt_.svg);
      if (!svg) throw InvalidInput("cannot write '" + opt_.svg + "'");
      svg << render_svg(cfg, sr.shrinks);
      params["svg"] = opt_.svg;
    }
    summary_ = "minimum shrinkage " + std::to_string(sr.objective);
    return kExitOk;
  }

 public:
  std::vector<std::string> warnings_;

 private:
  std::string command_;
  const Options& opt_;
  Json report_;
  std::string summary_;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Minimum shared-power edge cut solvers"};
  app.require_subcommand(1);
  Options opt;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--input", opt.input, "Input JSON file")->required();
    sub->add_flag("--pretty", opt.pretty, "Indented JSON and a summary on stderr");
    sub->add_option("--copy-cap", opt.copy_cap, "Maximum number of vertex copies");
  };
  auto* solve = app.add_subcommand("solve", "(1+eps)-approximate solve");
  common(solve);
  solve->add_option("--eps", opt.eps, "Approximation parameter (decimal or p/q)");
  solve->add_flag("--fast", opt.fast, "Scale from the incident-weight optimum");
  solve->add_option("--costs", opt.costs, "Vertex cost JSON");
  solve->add_option("--exact", opt.exact, "integer|uniform exact solver");

  auto* bottleneck = app.add_subcommand("bottleneck", "Minimum uniform power");
  common(bottleneck);
  auto* exact = app.add_subcommand("exact", "Exact solve for integral or uniform weights");
  common(exact);
  exact->add_option("--mode", opt.mode, "integer|uniform (default: detect)");
  auto* domain = app.add_subcommand("domain", "Exact solve over per-vertex power domains");
  common(domain);
  domain->add_option("--domains", opt.domains, "Domain JSON")->required();
  auto* discrete = app.add_subcommand("discrete", "Exact solve over incident edge weights");
  common(discrete);
  auto* barrier = app.add_subcommand("barrier", "Minimum shrinkage of a disk barrier");
  common(barrier);
  barrier->add_option("--eps", opt.eps, "Approximation parameter");
  barrier->add_option("--svg", opt.svg, "Write an SVG rendering here");
  barrier->add_flag("--fast", opt.fast, "Use the fast approximation");
  auto* verify = app.add_subcommand("verify", "Check whether powers separate s and t");
  common(verify);
  verify->add_option("--powers", opt.powers, "Power assignment JSON")->required();
  auto* oracle = app.add_subcommand("oracle", "Brute-force optimum for small instances");
  common(oracle);
  oracle->add_option("--cap", opt.oracle_cap, "Largest vertex count accepted");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  Runner runner(command, opt);
  try {
    const int code = runner.execute();
    for (const std::string& w : runner.warnings_) err << "warning: " << w << '\n';
    out << (opt.pretty ? runner.report().dump(2) : runner.report().dump()) << '\n';
    if (opt.pretty && !runner.summary().empty()) err << command << ": " << runner.summary() << '\n';
    return code;
  } catch (const Infeasible& e) {
    err << "error: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitError;
  }
}

}  // namespace mspec::cli
