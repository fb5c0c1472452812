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

#include <cmath>

#include "doctest.h"
#include "mspec/domain.hpp"
#include "mspec/error.hpp"
#include "mspec/fptas.hpp"
#include "mspec/oracle.hpp"
#include "support/brute.hpp"
#include "support/fixtures.hpp"
#include "support/generators.hpp"

using namespace mspec;
using namespace mspec::testing;

namespace {

bool certified(const Instance& inst, const SolveResult& r) {
  return r.feasible && is_feasible_cut(inst, r.assignment).feasible && separates_with(inst, r.assignment.values());
}

Instance zero_cut_instance() {
  return Instance::FromNames({"a", "b"}, {{"s", "a", 4}, {"a", "b", 0}, {"b", "t", 9}});
}

}  // namespace

TEST_CASE("FPTAS on the 3-4-5 path") {
  const Instance inst = path345();
  const SolveResult r = solve_fptas(inst, Epsilon::parse("0.5"));
  CHECK(certified(inst, r));
  CHECK(r.objective >= 3.0);
  CHECK(r.objective <= 4.5);
  CHECK(r.stats.p_star == 2.0);
  CHECK(r.stats.alpha == 0.5);
  CHECK(r.stats.copies_per_vertex == 8);
  CHECK(r.objective == doctest::Approx(*r.stats.alpha * static_cast<double>(r.stats.cut_size)).epsilon(1e-12));
}

TEST_CASE("fast FPTAS on the 3-4-5 path") {
  const Instance inst = path345();
  const SolveResult r = solve_fast_fptas(inst, Epsilon::parse("0.5"));
  CHECK(certified(inst, r));
  CHECK(r.stats.z == 3.0);
  CHECK(r.stats.alpha == 3.0 / 8.0);
  CHECK(r.stats.copies_per_vertex == 8);
  CHECK(r.objective >= 3.0);
  CHECK(r.objective <= 4.5);
}

TEST_CASE("zero bottleneck short-circuits to the zero assignment") {
  const Instance inst = zero_cut_instance();
  for (const SolveResult& r : {solve_fptas(inst, Epsilon::parse("0.1")), solve_fast_fptas(inst, Epsilon::parse("0.1"))}) {
    CHECK(r.objective == 0.0);
    CHECK(r.assignment.values() == std::vector<double>{0.0, 0.0});
    CHECK(certified(inst, r));
  }
  CHECK(solve_fptas(inst, Epsilon::parse("0.1")).stats.p_star == 0.0);
  CHECK(solve_fast_fptas(inst, Epsilon::parse("0.1")).stats.z == 0.0);
}

TEST_CASE("both FPTAS variants stay in the band on random instances") {
  Rng rng(61);
  for (int k = 0; k < 120; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 6, Weights::kReal));
    const double opt = oracle_opt(inst).opt;
    for (const char* e : {"0.1", "0.5"}) {
      const Epsilon eps = Epsilon::parse(e);
      const SolveResult plain = solve_fptas(inst, eps);
      const SolveResult fast = solve_fast_fptas(inst, eps);
      for (const SolveResult* r : {&plain, &fast}) {
        CHECK(certified(inst, *r));
        CHECK(r->objective >= opt - 1e-9);
        CHECK(r->objective <= (1 + eps.value()) * opt + 1e-9);
        if (r->stats.alpha) {
          CHECK(r->objective == doctest::Approx(*r->stats.alpha * static_cast<double>(r->stats.cut_size)).epsilon(1e-9));
        }
      }
      CHECK(std::abs(fast.objective - plain.objective) <= 2 * eps.value() * opt + 1e-9);
    }
  }
}

TEST_CASE("scaling the weights scales the FPTAS objective") {
  Rng rng(62);
  const Epsilon eps = Epsilon::parse("0.25");
  for (int k = 0; k < 60; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 6, Weights::kReal));
    const double base = solve_fptas(inst, eps).objective;
    // Powers of two scale every intermediate value exactly.
    for (double lambda : {2.0, 0.5, 4.0}) {
      CHECK(solve_fptas(inst.scaled(lambda), eps).objective == lambda * base);
    }
    CHECK(solve_fptas(inst.scaled(3.0), eps).objective == doctest::Approx(3.0 * base).epsilon(1e-9));
  }
}

TEST_CASE("costed FPTAS on the 3-4-5 path") {
  const Instance inst = path345();
  const double costs[] = {10.0, 1.0};
  const SolveResult r = solve_costed_fptas(inst, costs, Epsilon::parse("0.5"));
  CHECK(certified(inst, r));
  CHECK(r.objective >= 4.0);
  CHECK(r.objective <= 6.0);
  CHECK(r.objective == doctest::Approx(10.0 * r.assignment[0] + r.assignment[1]).epsilon(1e-12));
}

TEST_CASE("costed FPTAS with unit costs stays in the plain band") {
  Rng rng(63);
  for (int k = 0; k < 60; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 5, Weights::kReal));
    const std::vector<double> ones(static_cast<std::size_t>(inst.n()), 1.0);
    const double opt = oracle_opt(inst).opt;
    const SolveResult r = solve_costed_fptas(inst, ones, Epsilon::parse("0.25"));
    CHECK(certified(inst, r));
    CHECK(r.objective >= opt - 1e-9);
    CHECK(r.objective <= 1.25 * opt + 1e-9);
  }
}

TEST_CASE("costed FPTAS against costed enumeration") {
  // With integral weights the covering constraints of any crossing set form
  // a totally unimodular system, so an integral optimum exists for every
  // positive cost vector and enumerating {0..W}^n is exact.
  Rng rng(64);
  std::uniform_real_distribution<double> cost(0.2, 5.0);
  for (int k = 0; k < 150; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 5, Weights::kInteger, 5));
    std::vector<double> costs(static_cast<std::size_t>(inst.n()));
    for (double& c : costs) c = cost(rng);
    const double opt = *enumerate_domains(inst, integer_grid(inst), costs);
    for (const char* e : {"0.1", "0.5"}) {
      const Epsilon eps = Epsilon::parse(e);
      const SolveResult r = solve_costed_fptas(inst, costs, eps);
      CHECK(certified(inst, r));
      CHECK(r.objective >= opt - 1e-9);
      CHECK(r.objective <= (1 + eps.value()) * opt + 1e-9);
    }
  }
}

TEST_CASE("costed FPTAS argument checks") {
  const Instance inst = path345();
  const double zero[] = {1.0, 0.0};
  const double short_list[] = {1.0};
  CHECK_THROWS_AS(solve_costed_fptas(inst, zero, Epsilon::parse("0.5")), InvalidInput);
  CHECK_THROWS_AS(solve_costed_fptas(inst, short_list, Epsilon::parse("0.5")), InvalidInput);
}

TEST_CASE("integer solver: examples and errors") {
  const Instance inst = path345();
  const SolveResult r = solve_integer(inst);
  CHECK(r.objective == 3.0);
  CHECK(r.assignment[0] == 3.0);
  CHECK(r.assignment[1] == 0.0);
  CHECK(r.stats.alpha == 1.0);
  CHECK(r.stats.copies_per_vertex == 6);
  const Instance zeros = Instance::FromNames({"u"}, {{"s", "u", 0}, {"u", "t", 0}});
  CHECK(solve_integer(zeros).objective == 0.0);
  CHECK_THROWS_AS(solve_integer(Instance::FromNames({"u"}, {{"s", "u", 1.5}})), InvalidInput);
  CHECK(has_integral_weights(inst));
  CHECK_FALSE(has_uniform_weights(inst));
}

TEST_CASE("integer solver equals both oracles") {
  Rng rng(65);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 6, Weights::kInteger, 6));
    const SolveResult r = solve_integer(inst);
    CHECK(certified(inst, r));
    CHECK(r.objective == oracle_opt(inst).opt);
    if (inst.n() <= 5) CHECK(r.objective == oracle_enum_integer(inst));
    for (double p : r.assignment.values()) CHECK(p == std::floor(p));
  }
}

TEST_CASE("uniform solver: examples and errors") {
  const Instance two = Instance::FromNames({"a", "b"}, {{"s", "a", 1}, {"a", "t", 1}, {"s", "b", 1}, {"b", "t", 1}});
  CHECK(solve_uniform(two).objective == 2.0);
  const Instance one = Instance::FromNames({"a", "b"}, {{"s", "a", 1}, {"a", "b", 1}, {"b", "t", 1}});
  CHECK(solve_uniform(one).objective == 1.0);
  CHECK_THROWS_AS(solve_uniform(path345()), InvalidInput);
  const Instance tenth = Instance::FromNames({"a"}, {{"s", "a", 0.1}, {"a", "t", 0.1}});
  CHECK(solve_uniform(tenth).objective == 0.1);
  CHECK(has_uniform_weights(tenth));
}

TEST_CASE("uniform solver equals the oracle") {
  Rng rng(66);
  for (int k = 0; k < 200; ++k) {
    const Instance inst = random_instance(rng, random_params(rng, 8, Weights::kUniform));
    const SolveResult r = solve_uniform(inst);
    const double w = inst.max_weight();
    CHECK(certified(inst, r));
    CHECK(r.objective == doctest::Approx(oracle_opt(inst).opt).epsilon(1e-12));
    for (double p : r.assignment.values()) CHECK((p == 0.0 || p == w));
  }
}

TEST_CASE("copy cap is enforced") {
  SolveOptions small;
  small.copy_cap = 10;
  CHECK_THROWS_AS(solve_fptas(path345(), Epsilon::parse("0.1"), small), LimitExceeded);
}

TEST_CASE("heavy edges do not break feasibility") {
  // Edges far heavier than c * alpha, where every copy of a vertex may be
  // cut; the sentinel copy keeps the read-back honest.
  Rng rng(67);
  for (int k = 0; k < 200; ++k) {
    GenParams p = random_params(rng, 6, Weights::kReal);
    Instance inst = random_instance(rng, p);
    std::vector<Edge> edges(inst.edges());
    for (Edge& e : edges) {
      if (std::bernoulli_distribution(0.3)(rng)) e.w *= 1000.0;
    }
    inst = Instance::FromEdges(inst.n(), edges);
    const double opt = oracle_opt(inst).opt;
    for (const char* e : {"0.1", "1"}) {
      const Epsilon eps = Epsilon::parse(e);
      for (const SolveResult& r : {solve_fptas(inst, eps), solve_fast_fptas(inst, eps)}) {
        CHECK(certified(inst, r));
        CHECK(r.objective <= (1 + eps.value()) * opt + 1e-9 * std::max(1.0, opt));
      }
    }
  }
}
