#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "netrep/baselines.hpp"
#include "netrep/metrics.hpp"
#include "test_support.hpp"

using namespace netrep;
using namespace netrep::testing;

namespace {

MetricsReport with_clustering(double c) {
  MetricsReport r;
  r.num_nodes = 10;
  r.num_edges = 20;
  r.clustering = c;
  r.modularity = 0.3;
  return r;
}

}  // namespace

TEST_SUITE("metrics") {
  TEST_CASE("clustering of small graphs") {
    CHECK(clustering(complete_graph(3)) == 1.0);
    CHECK(clustering(star_graph(4)) == 0.0);
    Graph k4e = complete_graph(4);
    k4e.remove_edge(0, 1);
    CHECK(clustering(k4e) == doctest::Approx(0.75));
    CHECK(clustering(path_graph(2)) == 0.0);
    CHECK(avg_local_clustering(complete_graph(4)) == doctest::Approx(1.0));
    // Nodes 0 and 1 have C = 1, nodes 2 and 3 have C = 2/3.
    CHECK(avg_local_clustering(k4e) == doctest::Approx((1.0 + 1.0 + 2.0 / 3 + 2.0 / 3) / 4));
  }

  TEST_CASE("s-metric") {
    CHECK(s_metric(complete_graph(3)) == 12.0);
    CHECK(s_metric(star_graph(4)) == 16.0);
    CHECK(s_metric(path_graph(4)) == 8.0);
  }

  TEST_CASE("betweenness of a path") {
    const auto b = betweenness(path_graph(3));
    CHECK(b[0] == 0.0);
    CHECK(b[1] == doctest::Approx(1.0));
    CHECK(b[2] == 0.0);
    // Star center lies on every leaf pair.
    CHECK(betweenness(star_graph(5))[0] == doctest::Approx(1.0));
  }

  TEST_CASE("eigenvector centrality of a 4-cycle") {
    for (double x : eigenvector_centrality(cycle_graph(4))) CHECK(x == doctest::Approx(0.5).epsilon(1e-8));
    CHECK(eigenvector_centrality_avg(cycle_graph(4)) == doctest::Approx(0.5));
  }

  TEST_CASE("distances on a path") {
    CHECK(avg_distance(path_graph(4)) == doctest::Approx(10.0 / 6.0));
    CHECK(mean_eccentricity(path_graph(4)) == doctest::Approx(2.5));
    // Pairs at distances 1,1,1,2,2,3.
    CHECK(harmonic_avg_distance(path_graph(4)) == doctest::Approx(6.0 / (3.0 + 1.0 + 1.0 / 3)));
  }

  TEST_CASE("distance metrics use the largest component") {
    Graph g = path_graph(4);
    const NodeId a = g.add_node();
    const NodeId b = g.add_node();
    g.add_edge(a, b);
    CHECK(avg_distance(g) == doctest::Approx(10.0 / 6.0));
    Rng rng(1);
    const MetricsReport r = compute_metrics(g, rng);
    CHECK(r.distances_on_largest_component);
    CHECK(r.num_components == 2);
    CHECK(r.largest_component_size == 4);
    CHECK(r.avg_distance == doctest::Approx(10.0 / 6.0));
    CHECK(r.num_nodes == 6);
  }

  TEST_CASE("slow power iteration leaves eigenvector centrality undefined") {
    // Two K8 joined by a 3-edge path, plus a pendant: the top two eigenvalues
    // are too close for 1000 iterations at tolerance 1e-8.
    Graph g;
    for (int i = 0; i < 19; ++i) g.add_node();
    for (NodeId a = 0; a < 8; ++a) {
      for (NodeId b = a + 1; b < 8; ++b) g.add_edge(a, b), g.add_edge(8 + a, 8 + b);
    }
    g.add_edge(0, 16);
    g.add_edge(16, 17);
    g.add_edge(17, 8);
    g.add_edge(1, 18);
    CHECK_THROWS_WITH_AS(eigenvector_centrality(g), doctest::Contains("1000"), std::runtime_error);
    Rng rng(3);
    const MetricsReport r = compute_metrics(g, rng);
    CHECK_FALSE(r.avg_eigenvector_centrality.has_value());
    CHECK(r.avg_distance > 0.0);
  }

  TEST_CASE("assortativity") {
    CHECK_FALSE(newman_assortativity(cycle_graph(4)).has_value());
    // Edge-end degrees of a star are {1, k} in every edge, so r = -1.
    REQUIRE(newman_assortativity(star_graph(5)).has_value());
    CHECK(*newman_assortativity(star_graph(5)) == doctest::Approx(-1.0));
    REQUIRE(newman_assortativity(path_graph(4)).has_value());
    CHECK(*newman_assortativity(path_graph(4)) == doctest::Approx(-0.5));
  }

  TEST_CASE("modularity of fixed partitions") {
    const Graph g = two_cliques();
    CHECK(modularity(g, std::vector<std::uint32_t>(8, 0)) == doctest::Approx(0.0));
    const std::vector<std::uint32_t> halves{0, 0, 0, 0, 1, 1, 1, 1};
    CHECK(modularity(g, halves) == doctest::Approx(modularity_oracle(g, halves)));
    Graph edgeless;
    edgeless.add_node();
    CHECK_THROWS_AS(modularity(edgeless, {0}), std::invalid_argument);
    Rng rng(2);
    CHECK_THROWS_AS(modularity_louvain(edgeless, rng), std::invalid_argument);
  }

  TEST_CASE("louvain separates two cliques") {
    Rng rng(3);
    const Partition p = modularity_louvain(two_cliques(), rng);
    CHECK(p.modularity >= 0.4);
    for (int i = 1; i < 4; ++i) CHECK(p.community[i] == p.community[0]);
    for (int i = 5; i < 8; ++i) CHECK(p.community[i] == p.community[4]);
    CHECK(p.community[0] != p.community[4]);
  }

  TEST_CASE("louvain finds planted communities") {
    Rng rng(4);
    // Four dense blocks of 25 with sparse links between them.
    Graph g;
    for (int i = 0; i < 100; ++i) g.add_node();
    std::bernoulli_distribution inside(0.4);
    std::bernoulli_distribution across(0.01);
    for (NodeId u = 0; u < 100; ++u) {
      for (NodeId v = u + 1; v < 100; ++v) {
        if ((u / 25 == v / 25) ? inside(rng) : across(rng)) g.add_edge(u, v);
      }
    }
    std::vector<std::uint32_t> planted(100);
    for (std::size_t i = 0; i < 100; ++i) planted[i] = static_cast<std::uint32_t>(i / 25);
    const Partition p = modularity_louvain(g, rng);
    CHECK(p.modularity >= modularity(g, planted) - 1e-9);
  }

  TEST_CASE("power-law exponent") {
    Rng rng(5);
    for (int s = 0; s < 10; ++s) {
      const double alpha = powerlaw_exponent(barabasi_albert(300, 10, rng));
      CHECK(alpha >= 2.5);
      CHECK(alpha <= 3.5);
    }
    CHECK_THROWS_WITH_AS(powerlaw_exponent(cycle_graph(20)), "degenerate degree sequence", std::invalid_argument);
    CHECK_THROWS_AS(powerlaw_exponent(path_graph(5)), std::invalid_argument);
    // 1 + 3 / (3 ln 2) for three degrees equal to 2 * (d_min - 0.5) = 1.
    CHECK(powerlaw_exponent_fixed({1, 1, 1}, 1) == doctest::Approx(1.0 + 1.0 / std::log(2.0)));
    CHECK_THROWS_AS(powerlaw_exponent_fixed({1, 2}, 0), std::invalid_argument);
  }

  TEST_CASE("degree survival starts at one and never increases") {
    Rng rng(6);
    const Graph g = random_graph(50, 0.1, rng);
    const auto s = degree_survival(g);
    REQUIRE_FALSE(s.empty());
    CHECK(s[0] == 1.0);
    for (std::size_t k = 1; k < s.size(); ++k) CHECK(s[k] <= s[k - 1]);
    CHECK(s.back() > 0.0);
  }

  TEST_CASE("metrics agree with brute-force oracles on small graphs") {
    Rng rng(7);
    std::uniform_int_distribution<int> size(2, 20);
    std::uniform_real_distribution<double> dens(0.05, 0.6);
    for (int trial = 0; trial < 150; ++trial) {
      const Graph g = random_graph(static_cast<std::size_t>(size(rng)), dens(rng), rng);
      const auto mismatch = metric_oracle_mismatch(g);
      INFO("trial " << trial << ": " << mismatch.value_or(""));
      CHECK_FALSE(mismatch.has_value());
    }
  }

  TEST_CASE("compute_metrics on an edgeless graph") {
    Graph g;
    for (int i = 0; i < 3; ++i) g.add_node();
    Rng rng(8);
    const MetricsReport r = compute_metrics(g, rng);
    CHECK(r.num_edges == 0);
    CHECK_FALSE(r.modularity.has_value());
    CHECK_FALSE(r.newman_assortativity.has_value());
    CHECK_FALSE(r.powerlaw_exponent.has_value());
    CHECK(r.avg_distance == 0.0);
  }
}

TEST_SUITE("ensemble") {
  TEST_CASE("quantiles interpolate linearly") {
    CHECK(quantile({1, 2, 3, 4}, 0.5) == doctest::Approx(2.5));
    CHECK(quantile({4, 1, 3, 2}, 0.25) == doctest::Approx(1.75));
    CHECK(quantile({7}, 0.9) == 7.0);
    CHECK_THROWS_AS(quantile({}, 0.5), std::invalid_argument);
  }

  TEST_CASE("identical replicas normalise to one") {
    const MetricsReport original = with_clustering(0.4);
    const auto s = compare_ensemble(original, {original, original, original});
    CHECK(s.replica_count == 3);
    for (const auto& m : s.metrics) {
      if (!m.normalized) continue;
      CHECK(m.median == doctest::Approx(1.0));
      CHECK(m.q3 - m.q1 == doctest::Approx(0.0));
    }
    CHECK(s.at("clustering").count == 3);
  }

  TEST_CASE("two replicas at 0.8x and 1.2x have median one") {
    const auto s = compare_ensemble(with_clustering(0.5), {with_clustering(0.4), with_clustering(0.6)});
    const auto& c = s.at("clustering");
    CHECK(c.normalized);
    CHECK(c.median == doctest::Approx(1.0));
    CHECK(c.lo_whisker == doctest::Approx(0.8));
    CHECK(c.hi_whisker == doctest::Approx(1.2));
  }

  TEST_CASE("zero or undefined originals are reported raw") {
    MetricsReport original = with_clustering(0.0);
    original.modularity.reset();
    MetricsReport replica = with_clustering(0.2);
    const auto s = compare_ensemble(original, {replica, replica});
    CHECK_FALSE(s.at("clustering").normalized);
    CHECK(s.at("clustering").median == doctest::Approx(0.2));
    CHECK_FALSE(s.at("modularity").normalized);
    CHECK_FALSE(s.at("modularity").original.has_value());
    CHECK_THROWS_AS(s.at("no_such_metric"), std::out_of_range);
    CHECK_THROWS_AS(compare_ensemble(original, {}), std::invalid_argument);
  }

  TEST_CASE("undefined replica values are left out") {
    MetricsReport a = with_clustering(0.5);
    MetricsReport b = with_clustering(0.5);
    b.modularity.reset();
    const auto s = compare_ensemble(with_clustering(0.5), {a, b, a});
    CHECK(s.at("modularity").count == 2);
    CHECK(s.at("clustering").count == 3);
  }

  TEST_CASE("whiskers stop at the last point inside the fences") {
    std::vector<MetricsReport> reps;
    for (double c : {1.0, 1.05, 0.95, 1.0, 1.1, 0.9, 5.0}) reps.push_back(with_clustering(c));
    const auto s = compare_ensemble(with_clustering(1.0), reps);
    const auto& c = s.at("clustering");
    CHECK(c.hi_whisker == doctest::Approx(1.1));
    CHECK(c.lo_whisker == doctest::Approx(0.9));
  }

  TEST_CASE("summaries do not depend on replica order") {
    Rng rng(9);
    std::vector<MetricsReport> reps;
    for (int i = 0; i < 9; ++i) reps.push_back(compute_metrics(random_graph(30, 0.15, rng), rng));
    const MetricsReport original = compute_metrics(random_graph(30, 0.15, rng), rng);
    const auto before = compare_ensemble(original, reps);
    std::shuffle(reps.begin(), reps.end(), rng);
    const auto after = compare_ensemble(original, reps);
    REQUIRE(before.metrics.size() == after.metrics.size());
    for (std::size_t i = 0; i < before.metrics.size(); ++i) {
      CHECK(before.metrics[i].median == after.metrics[i].median);
      CHECK(before.metrics[i].q1 == after.metrics[i].q1);
      CHECK(before.metrics[i].q3 == after.metrics[i].q3);
      CHECK(before.metrics[i].lo_whisker == after.metrics[i].lo_whisker);
      CHECK(before.metrics[i].hi_whisker == after.metrics[i].hi_whisker);
    }
  }
}
