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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// non-zero when any criterion fails. All random suites use fixed seeds.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "mspec/barrier.hpp"
#include "mspec/bottleneck.hpp"
#include "mspec/discretize.hpp"
#include "mspec/domain.hpp"
#include "mspec/error.hpp"
#include "mspec/fptas.hpp"
#include "mspec/mincut.hpp"
#include "mspec/oracle.hpp"
#include "support/brute.hpp"
#include "support/generators.hpp"

namespace {

using namespace mspec;
using namespace mspec::testing;

// Float-accumulation slack used by every band comparison below.
constexpr double kSlack = 1e-9;

struct Outcome {
  bool pass = true;
  std::string detail;
  int failures = 0;
  std::string first_failure;

  void fail(const std::string& why) {
    if (failures++ == 0) first_failure = why;
    pass = false;
  }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
  char buf[256];
  std::snprintf(buf, sizeof(buf), f, a, b, c);
  return buf;
}

bool feasible(const Instance& inst, const SolveResult& r) {
  return r.feasible && is_feasible_cut(inst, r.assignment).feasible &&
         separates_with(inst, r.assignment.values());
}

// 1. oracle_opt == oracle_enum_integer on >= 500 integer instances.
Outcome ac1() {
  Outcome o;
  Rng rng(101);
  const auto t0 = std::chrono::steady_clock::now();
  const int count = 600;
  for (int k = 0; k < count; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 5, Weights::kInteger, 5));
    const double a = oracle_opt(inst).opt;
    const double b = oracle_enum_integer(inst);
    if (a != b) o.fail(fmt("instance %g: oracle %g vs enumeration %g", k, a, b));
  }
  const double secs = seconds_since(t0);
  if (secs > 60.0) o.fail(fmt("took %.1f s (limit 60 s)", secs));
  o.detail = std::to_string(count) + " instances, n<=5, W<=5, " + fmt("%.2f s", secs);
  return o;
}

// 2 and 3. Approximation band against the oracle; the fast variant also
// checks OPT <= Z <= 2 OPT.
Outcome approximation_suite(bool fast) {
  Outcome o;
  Rng rng(fast ? 303 : 202);
  const Epsilon eps_values[] = {Epsilon::ratio(1, 10), Epsilon::ratio(1, 4), Epsilon::ratio(1, 2)};
  const int count = 240;
  double worst = 0.0;
  for (int k = 0; k < count; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 6, Weights::kReal));
    const double opt = oracle_opt(inst).opt;
    if (fast) {
      const double z = solve_discrete(inst).objective;
      if (z < opt - kSlack || z > 2.0 * opt + kSlack) {
        o.fail(fmt("instance %g: Z=%.12g outside [OPT, 2 OPT], OPT=%.12g", k, z, opt));
      }
    }
    for (const Epsilon& eps : eps_values) {
      const SolveResult r = fast ? solve_fast_fptas(inst, eps) : solve_fptas(inst, eps);
      if (!feasible(inst, r)) o.fail(fmt("instance %g eps %g: infeasible output", k, eps.value()));
      if (r.objective < opt - kSlack || r.objective > (1.0 + eps.value()) * opt + kSlack) {
        o.fail(fmt("instance %g: objective %.12g, OPT %.12g", k, r.objective, opt));
      }
      if (opt > 0) worst = std::max(worst, r.objective / opt - 1.0);
    }
  }
  o.detail = std::to_string(count) + " instances x eps {0.1,0.25,0.5}, n<=6, weights [0,10]" +
             fmt(", worst ratio 1+%.4f", worst);
  return o;
}

// 4. Bottleneck: binary search == scan, Claim 1, p* <= OPT <= n p*.
Outcome ac4() {
  Outcome o;
  Rng rng(404);
  const int count = 600;
  for (int k = 0; k < count; ++k) {
    const Weights w = k % 3 == 0 ? Weights::kInteger : Weights::kReal;
    const Instance inst = random_instance(rng, random_params(rng, 6, w));
    const std::vector<double> req = plain_requirements(inst);
    const double scan = bottleneck_scan(inst, req);
    if (std::isinf(scan)) continue;  // generator never produces these
    const BottleneckResult bn = solve_bottleneck(inst);
    if (bn.p_star != scan) o.fail(fmt("instance %g: binary %.12g vs scan %.12g", k, bn.p_star, scan));
    const bool tight = bn.p_star == 0.0 || std::find(req.begin(), req.end(), bn.p_star) != req.end();
    if (!tight) o.fail(fmt("instance %g: p*=%.12g is no edge requirement", k, bn.p_star));
    std::vector<double> uniform(static_cast<std::size_t>(inst.n()), bn.p_star);
    if (!separates_with(inst, uniform)) o.fail(fmt("instance %g: uniform p* does not separate", k));
    const double opt = oracle_opt(inst).opt;
    if (bn.p_star > opt + kSlack || opt > inst.n() * bn.p_star + kSlack) {
      o.fail(fmt("instance %g: sandwich p*=%.12g OPT=%.12g", k, bn.p_star, opt));
    }
  }
  o.detail = std::to_string(count) + " instances, n<=6";
  return o;
}

// 5. Exact solvers against both oracles.
Outcome ac5() {
  Outcome o;
  Rng rng(505);
  const int count = 300;
  for (int k = 0; k < count; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 6, Weights::kInteger, 6));
    const double opt = oracle_opt(inst).opt;
    const SolveResult r = solve_integer(inst);
    if (!feasible(inst, r)) o.fail(fmt("integer instance %g: infeasible output", k));
    if (r.objective != opt) o.fail(fmt("integer instance %g: %g vs OPT %g", k, r.objective, opt));
    if (inst.n() <= 5 && oracle_enum_integer(inst) != r.objective) {
      o.fail(fmt("integer instance %g: disagrees with integer enumeration", k));
    }
  }
  for (int k = 0; k < count; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 8, Weights::kUniform));
    const double opt = oracle_opt(inst).opt;
    const SolveResult r = solve_uniform(inst);
    if (!feasible(inst, r)) o.fail(fmt("uniform instance %g: infeasible output", k));
    // Sums of equal weights may associate differently; 1e-9 relative.
    if (std::abs(r.objective - opt) > kSlack * std::max(1.0, opt)) {
      o.fail(fmt("uniform instance %g: %.12g vs OPT %.12g", k, r.objective, opt));
    }
  }
  o.detail = std::to_string(count) + " integer (n<=6, W<=6) + " + std::to_string(count) +
             " uniform (n<=8) instances";
  return o;
}

// 6. Domain solver against cartesian enumeration, feasibility included.
Outcome ac6() {
  Outcome o;
  Rng rng(606);
  const int count = 300;
  int infeasible = 0;
  for (int k = 0; k < count; ++k) {
    const Weights w = k % 2 == 0 ? Weights::kInteger : Weights::kReal;
    const Instance inst = random_instance(rng, random_params(rng, 5, w));
    std::vector<std::vector<double>> dom(static_cast<std::size_t>(inst.n()));
    std::uniform_int_distribution<int> small(0, 6);
    std::uniform_real_distribution<double> real(0.0, 10.0);
    for (auto& d : dom) {
      while (d.size() < 3) {
        const double v = w == Weights::kInteger ? small(rng) : (small(rng) == 0 ? 0.0 : real(rng) * 0.6);
        if (std::find(d.begin(), d.end(), v) == d.end()) d.push_back(v);
      }
    }
    const auto truth = enumerate_domains(inst, dom);
    const SolveResult r = solve_domain(inst, PowerDomain(dom));
    if (!truth) {
      ++infeasible;
      if (r.feasible) o.fail(fmt("instance %g: solver feasible, enumeration infeasible", k));
      continue;
    }
    if (!r.feasible) {
      o.fail(fmt("instance %g: solver infeasible, enumeration %.12g", k, *truth));
      continue;
    }
    if (!feasible(inst, r)) o.fail(fmt("instance %g: output does not separate", k));
    for (Vertex v = 0; v < inst.n(); ++v) {
      const auto& d = dom[static_cast<std::size_t>(v)];
      if (std::find(d.begin(), d.end(), r.assignment[v]) == d.end()) {
        o.fail(fmt("instance %g: power outside domain", k));
      }
    }
    if (std::abs(r.objective - *truth) > kSlack * std::max(1.0, *truth)) {
      o.fail(fmt("instance %g: %.12g vs enumeration %.12g", k, r.objective, *truth));
    }
  }
  o.detail = std::to_string(count) + " instances with 3-value domains, " + std::to_string(infeasible) +
             " infeasible";
  return o;
}

// 7. Nesting on every G' with n*c <= 500; prefix normalization.
Outcome ac7() {
  Outcome o;
  Rng rng(707);
  int graphs = 0;
  int cuts = 0;
  for (int k = 0; k < 150; ++k) {
    const Weights w = k % 2 == 0 ? Weights::kInteger : Weights::kReal;
    const Instance inst = random_instance(rng, random_params(rng, 6, w));
    const std::int64_t c = std::uniform_int_distribution<std::int64_t>(1, 500 / inst.n())(rng);
    const double alpha = std::uniform_real_distribution<double>(0.05, 2.0)(rng);
    std::vector<double> costs;
    if (k % 2 == 1) {
      for (Vertex v = 0; v < inst.n(); ++v) costs.push_back(std::uniform_real_distribution<double>(0.25, 4.0)(rng));
    }
    // Plain, costed and the solvers' bounded form with sentinels.
    DiscretizedGraph dg;
    if (k % 3 == 2) {
      const std::int64_t cb = std::max<std::int64_t>(1, 500 / inst.n() - 1);
      dg = build_discretized_bounded(inst, alpha, std::min(c, cb), costs, alpha * static_cast<double>(c));
    } else {
      dg = build_discretized_costed(inst, alpha, c, costs);
    }
    ++graphs;
    if (!edge_rule_holds(inst, dg)) o.fail(fmt("graph %g: edge rule violated", k));
    if (!neighborhoods_nested(dg)) o.fail(fmt("graph %g: nesting violated", k));

    const CutGraph& g = dg.graph();
    if (g.adjacent(g.source(), g.sink())) continue;
    const auto nb = neighbor_sets(g);
    const VertexCut mc = min_vertex_cut(g);
    if (std::isinf(mc.cost)) continue;
    // The minimum cut and random supersets of it, which are separators
    // that are generally not prefixes.
    for (int trial = 0; trial < 6; ++trial) {
      std::vector<std::int32_t> cut = mc.vertices;
      if (trial > 0) {
        std::bernoulli_distribution extra(0.05 * trial);
        for (std::int32_t v = 0; v < g.size(); ++v) {
          if (v == g.source() || v == g.sink()) continue;
          if (dg.copy_index(v) < dg.copies(dg.owner(v)) && extra(rng)) cut.push_back(v);
        }
        std::sort(cut.begin(), cut.end());
        cut.erase(std::unique(cut.begin(), cut.end()), cut.end());
      }
      const auto counts = prefix_counts(dg, cut);
      const auto normalized = normalized_cut(dg, counts);
      std::vector<bool> removed(static_cast<std::size_t>(g.size()), false);
      for (std::int32_t v : normalized) removed[static_cast<std::size_t>(v)] = true;
      ++cuts;
      if (normalized.size() > cut.size()) o.fail(fmt("graph %g: normalization grew the cut", k));
      if (!cut_separates(g, nb, removed)) o.fail(fmt("graph %g: normalized cut does not separate", k));
      for (Vertex v = 0; v < dg.n(); ++v) {
        for (std::int32_t i = 0; i < dg.node_count(v); ++i) {
          if (removed[static_cast<std::size_t>(dg.node(v, i))] != (i < counts[static_cast<std::size_t>(v)])) {
            o.fail(fmt("graph %g: normalized cut is not a prefix", k));
          }
        }
      }
    }
  }
  o.detail = std::to_string(graphs) + " graphs, " + std::to_string(cuts) + " cuts normalized";
  return o;
}

DiskConfig mirrored(const DiskConfig& cfg) {
  // Rectangles are centered on x = 0 so mirroring is exact.
  DiskConfig m = cfg;
  m.rect.x0 = -cfg.rect.x1;
  m.rect.x1 = -cfg.rect.x0;
  for (Disk& d : m.disks) d.x = -d.x;
  return m;
}

// 8. Barrier worked example, translation and mirror suites.
Outcome ac8() {
  Outcome o;
  DiskConfig two;
  two.rect = {0.0, 0.0, 3.0, 2.0};
  two.disks = {{0.8, 1.0, 1.0}, {2.2, 1.0, 1.0}};
  const Instance red = reduce_disks(two);
  double su = -1, uv = -1, vt = -1;
  for (const Edge& e : red.edges()) {
    const Vertex a = std::min(e.u, e.v);
    const Vertex b = std::max(e.u, e.v);
    if (a == 0 && b == red.source()) su = e.w;
    if (a == 0 && b == 1) uv = e.w;
    if (a == 1 && b == red.sink()) vt = e.w;
  }
  if (red.m() != 3 || std::abs(su - 0.2) > kSlack || std::abs(uv - 0.6) > kSlack ||
      std::abs(vt - 0.2) > kSlack) {
    o.fail(fmt("two-disk weights (%.12g, %.12g, %.12g)", su, uv, vt));
  }
  const ShrinkResult sr = min_shrinkage(two, Epsilon::ratio(1, 10));
  if (sr.objective < 0.2 - kSlack || sr.objective > 0.22 + kSlack) {
    o.fail(fmt("two-disk objective %.12g outside [0.2, 0.22]", sr.objective));
  }

  Rng rng(808);
  const int count = 100;
  for (int k = 0; k < count; ++k) {
    DiskConfig cfg = random_disks(rng, 5);
    cfg.rect = {-3.0, 0.0, 3.0, 3.0};
    for (Disk& d : cfg.disks) d.x -= 3.0;
    const Instance base = reduce_disks(cfg);

    DiskConfig moved = cfg;
    const double dx = std::uniform_real_distribution<double>(-50, 50)(rng);
    const double dy = std::uniform_real_distribution<double>(-50, 50)(rng);
    moved.rect = {cfg.rect.x0 + dx, cfg.rect.y0 + dy, cfg.rect.x1 + dx, cfg.rect.y1 + dy};
    for (Disk& d : moved.disks) {
      d.x += dx;
      d.y += dy;
    }
    const Instance shifted = reduce_disks(moved);
    bool same = shifted.m() == base.m();
    for (std::size_t e = 0; same && e < base.m(); ++e) {
      same = shifted.edge(e).u == base.edge(e).u && shifted.edge(e).v == base.edge(e).v &&
             std::abs(shifted.edge(e).w - base.edge(e).w) <= kSlack;
    }
    if (!same) o.fail(fmt("config %g: translation changed the reduced instance", k));

    const Instance mir = reduce_disks(mirrored(cfg));
    bool swapped = mir.m() == base.m();
    for (std::size_t e = 0; swapped && e < base.m(); ++e) {
      auto flip = [&](Vertex v) {
        return v == base.source() ? base.sink() : v == base.sink() ? base.source() : v;
      };
      swapped = mir.edge(e).u == flip(base.edge(e).u) && mir.edge(e).v == flip(base.edge(e).v) &&
                std::abs(mir.edge(e).w - base.edge(e).w) <= kSlack;
    }
    if (!swapped) o.fail(fmt("config %g: mirror did not swap s and t edges", k));

    const Epsilon eps = Epsilon::ratio(1, 4);
    const double a = min_shrinkage(cfg, eps).objective;
    const double b = min_shrinkage(mirrored(cfg), eps).objective;
    if (std::abs(a - b) > kSlack * std::max(1.0, a)) {
      o.fail(fmt("config %g: mirror objective %.12g vs %.12g", k, b, a));
    }
    const double opt = oracle_opt(base).opt;
    if (a < opt - kSlack || a > 1.25 * opt + kSlack) {
      o.fail(fmt("config %g: objective %.12g vs OPT %.12g", k, a, opt));
    }
  }
  o.detail = "two-disk objective " + fmt("%.6g", sr.objective) + ", " + std::to_string(count) +
             " translated/mirrored 5-disk configs";
  return o;
}

// 9. Scale run and copy counts.
Outcome ac9() {
  Outcome o;
  Rng rng(909);
  GenParams p;
  p.n = 30;
  p.weights = Weights::kReal;
  p.density = 100.0 / (32.0 * 31.0 / 2.0 - 1.0);
  Instance inst = random_instance(rng, p);
  const auto t0 = std::chrono::steady_clock::now();
  const SolveResult r = solve_fast_fptas(inst, Epsilon::ratio(1, 4));
  const double secs = seconds_since(t0);
  if (!feasible(inst, r)) o.fail("scale instance: infeasible output");
  if (secs > 60.0) o.fail(fmt("scale instance took %.1f s", secs));

  const Epsilon eps_values[] = {Epsilon::ratio(1, 1), Epsilon::ratio(3, 4), Epsilon::ratio(1, 2),
                                Epsilon::ratio(1, 3), Epsilon::ratio(1, 4), Epsilon::ratio(1, 10),
                                Epsilon::ratio(3, 7), Epsilon::ratio(1, 100)};
  for (std::int64_t n = 3; n <= 200; ++n) {
    for (const Epsilon& e : eps_values) {
      if (e.ceil_div(2 * n) >= e.ceil_div(n * n)) o.fail(fmt("n=%g eps=%g: fast copies not fewer", n, e.value()));
    }
  }
  // The same inequality read back from actual solver runs.
  Rng small(910);
  int runs = 0;
  for (int k = 0; k < 40; ++k) {
    GenParams q = random_params(small, 7, Weights::kReal);
    q.n = std::max(3, q.n);
    const Instance s = random_instance(small, q);
    const Epsilon& e = eps_values[k % 8];
    if (e.value() < 0.1) continue;
    const SolveResult a = solve_fptas(s, e);
    const SolveResult b = solve_fast_fptas(s, e);
    if (!a.stats.copies_per_vertex || !b.stats.copies_per_vertex) continue;
    ++runs;
    if (*b.stats.copies_per_vertex >= *a.stats.copies_per_vertex) {
      o.fail(fmt("instance %g: fast used %g copies, plain %g", k,
                 static_cast<double>(*b.stats.copies_per_vertex), static_cast<double>(*a.stats.copies_per_vertex)));
    }
  }
  o.detail = "n=30 m=" + std::to_string(inst.m()) + fmt(" eps=0.25 in %.2f s (c=%g)", secs,
             static_cast<double>(r.stats.copies_per_vertex.value_or(0))) +
             ", copy counts checked for n in [3,200] and " + std::to_string(runs) + " solver runs";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    const char* name;
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {"AC1 oracle cross-validation", ac1},
      {"AC2 FPTAS approximation band", [] { return approximation_suite(false); }},
      {"AC3 fast FPTAS band and Z sandwich", [] { return approximation_suite(true); }},
      {"AC4 bottleneck search, tightness, sandwich", ac4},
      {"AC5 exact integer and uniform solvers", ac5},
      {"AC6 domain solver vs enumeration", ac6},
      {"AC7 nesting and prefix normalization", ac7},
      {"AC8 barrier example and invariance", ac8},
      {"AC9 scale run and copy counts", ac9},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const double secs = seconds_since(t0);
    if (o.pass) {
      std::printf("PASS  %s: %s [%.2f s]\n", c.name, o.detail.c_str(), secs);
    } else {
      ++failed;
      std::printf("FAIL  %s: %d violation(s); first: %s [%.2f s]\n", c.name, o.failures,
                  o.first_failure.c_str(), secs);
    }
    std::fflush(stdout);
  }
  std::printf("%d/9 criteria passed\n", 9 - failed);
  return failed == 0 ? 0 : 1;
}
