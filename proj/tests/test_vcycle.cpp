#include <cmath>

#include "doctest.h"
#include "netrep/baselines.hpp"
#include "netrep/coarsening.hpp"
#include "netrep/vcycle.hpp"
#include "test_support.hpp"

using namespace netrep;
using namespace netrep::testing;

TEST_SUITE("vcycle") {
  TEST_CASE("zero rates reproduce the input exactly") {
    Rng rng(1);
    for (int trial = 0; trial < 20; ++trial) {
      const Graph g = random_graph(50 + trial, 0.08, rng);
      const ReplicaReport r = replicate(g, EditConfig::zero(), 1000 + trial);
      CHECK(identical(r.replica, g));
      CHECK(r.hierarchy_depth == 1);
    }
  }

  TEST_CASE("hierarchy depth matches the coarsening schedule") {
    Rng rng(2);
    const Graph g = watts_strogatz(200, 6, 0.1, rng);
    for (const EditConfig& cfg : {EditConfig::preset_p1(), EditConfig::preset_p2()}) {
      const ReplicaReport r = replicate(g, cfg, 7);
      const auto levels = build_hierarchy(g, cfg);
      CHECK(r.hierarchy_depth == static_cast<int>(levels.size()));
      CHECK(r.hierarchy_depth >= 1);
      CHECK(r.hierarchy_depth <= static_cast<int>(g.num_nodes()));
      REQUIRE(r.edit_logs.size() == static_cast<std::size_t>(r.hierarchy_depth));
      CHECK(r.edit_logs.front().level == r.hierarchy_depth - 1);
      CHECK(r.edit_logs.back().level == 0);
      r.replica.check_invariants();
    }
  }

  TEST_CASE("replicas are deterministic per seed") {
    Rng rng(3);
    const Graph g = erdos_renyi(150, 0.05, rng);
    const auto a = replicate(g, EditConfig::preset_p1(), 42);
    const auto b = replicate(g, EditConfig::preset_p1(), 42);
    const auto c = replicate(g, EditConfig::preset_p1(), 43);
    CHECK(identical(a.replica, b.replica));
    CHECK_FALSE(identical(a.replica, c.replica));
  }

  TEST_CASE("a single-replica ensemble equals replicate") {
    Rng rng(4);
    const Graph g = erdos_renyi(120, 0.05, rng);
    const auto ensemble = generate_ensemble(g, EditConfig::preset_p1(), 1, 77, 1);
    REQUIRE(ensemble.size() == 1);
    CHECK(ensemble[0].rng_seed == 77);
    CHECK(identical(ensemble[0].replica, replicate(g, EditConfig::preset_p1(), 77).replica));
  }

  TEST_CASE("ensembles do not depend on the number of jobs") {
    Rng rng(5);
    const Graph g = erdos_renyi(150, 0.05, rng);
    const auto serial = generate_ensemble(g, EditConfig::preset_p1(), 12, 500, 1);
    const auto parallel = generate_ensemble(g, EditConfig::preset_p1(), 12, 500, 4);
    const auto repeat = generate_ensemble(g, EditConfig::preset_p1(), 12, 500, 3);
    REQUIRE(serial.size() == 12);
    for (std::size_t i = 0; i < serial.size(); ++i) {
      CHECK(serial[i].rng_seed == 500 + i);
      CHECK(identical(serial[i].replica, parallel[i].replica));
      CHECK(identical(serial[i].replica, repeat[i].replica));
    }
  }

  TEST_CASE("ensemble argument checks") {
    const Graph g = cycle_graph(10);
    CHECK_THROWS_AS(generate_ensemble(g, EditConfig::preset_p1(), 0, 1), std::invalid_argument);
    EditConfig bad;
    bad.edge_edit_rates = {2.0};
    CHECK_THROWS_AS(generate_ensemble(g, bad, 2, 1), ConfigError);
  }

  TEST_CASE("the adjustment hook runs at coarsened levels") {
    Rng rng(6);
    const Graph g = erdos_renyi(150, 0.04, rng);
    int calls = 0;
    const AdjustHook counting = [&calls](const Graph& h, Rng&) {
      ++calls;
      return h;
    };
    const auto r = replicate(g, EditConfig::preset_p1(), 8, counting);
    CHECK(calls == r.hierarchy_depth - 1);
  }

  TEST_CASE("keep_connected yields connected replicas") {
    Rng rng(7);
    const Graph g = erdos_renyi(200, 0.015, rng);
    const AdjustHook hook = [](const Graph& h, Rng& r) { return keep_connected(h, r); };
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto r = replicate(g, EditConfig::preset_p1(), seed, hook);
      if (r.hierarchy_depth > 1) CHECK(is_connected(r.replica));
    }
  }

  TEST_CASE("a hook returning an invalid graph is an error") {
    Rng rng(8);
    const Graph g = erdos_renyi(100, 0.06, rng);
    const AdjustHook breaking = [](const Graph& h, Rng&) {
      Graph out = h;
      const Edge e = out.edge_at(0);
      out.edge_attributes(e.u, e.v).weight = 0.0;
      return out;
    };
    CHECK_THROWS_WITH_AS(replicate(g, EditConfig::preset_p1(), 1, breaking), "adjustment produced invalid graph",
                         std::runtime_error);
  }

  TEST_CASE("one evolution step equals one revision") {
    Rng setup(9);
    const Graph g = erdos_renyi(120, 0.05, setup);
    Rng a(31);
    Rng b(31);
    const auto trajectory = evolve(g, EditConfig::preset_p1(), 1, a);
    REQUIRE(trajectory.size() == 1);
    CHECK(identical(trajectory[0], revise_graph(g, 0, EditConfig::preset_p1(), {}, b)));
    CHECK_THROWS_AS(evolve(g, EditConfig::preset_p1(), 0, a), std::invalid_argument);
  }

  TEST_CASE("evolution chains revisions") {
    Rng setup(10);
    const Graph g = erdos_renyi(120, 0.05, setup);
    const EditConfig cfg = EditConfig::preset_p1();
    Rng a(5);
    Rng b(5);
    const auto trajectory = evolve(g, cfg, 3, a);
    REQUIRE(trajectory.size() == 3);
    const Graph g1 = revise_graph(g, 0, cfg, {}, b);
    const Graph g2 = revise_graph(g1, 0, cfg, {}, b);
    const Graph g3 = revise_graph(g2, 0, cfg, {}, b);
    CHECK(identical(trajectory[0], g1));
    CHECK(identical(trajectory[1], g2));
    CHECK(identical(trajectory[2], g3));
  }

  TEST_CASE("node growth raises the node count in expectation") {
    Rng rng(11);
    const Graph g = watts_strogatz(250, 6, 0.1, rng);
    EditConfig cfg;
    cfg.node_edit_rates = {0.08};
    cfg.edge_edit_rates = {0.08};
    cfg.node_growth_rates = {0.07};
    const int runs = 40;
    double final_mean = 0.0;
    double mid_mean = 0.0;
    for (int r = 0; r < runs; ++r) {
      const auto trajectory = evolve(g, cfg, 10, rng);
      mid_mean += static_cast<double>(trajectory[4].num_nodes()) / runs;
      final_mean += static_cast<double>(trajectory[9].num_nodes()) / runs;
    }
    // E[n_t] = 250 (1 + 0.08 * 0.07)^t; per-step variance about 0.152 n.
    const double expected = 250.0 * std::pow(1.0 + 0.08 * 0.07, 10);
    const double sd_of_mean = std::sqrt(10 * 0.152 * 250.0 / runs);
    CHECK(std::abs(final_mean - expected) <= 3.0 * sd_of_mean);
    CHECK(final_mean > 250.0);
    CHECK(final_mean > mid_mean - 3.0 * sd_of_mean);
  }
}
