#include <sstream>

#include "doctest.h"
#include "netrep/edge_list.hpp"
#include "netrep/graph.hpp"
#include "test_support.hpp"

using namespace netrep;
using namespace netrep::testing;

TEST_SUITE("graph") {
  TEST_CASE("add and remove keep indices consistent") {
    Graph g = cycle_graph(6);
    CHECK(g.num_nodes() == 6);
    CHECK(g.num_edges() == 6);
    CHECK(g.remove_node(2));
    CHECK_FALSE(g.has_node(2));
    CHECK(g.num_edges() == 4);
    CHECK_FALSE(g.has_edge(1, 2));
    CHECK(g.degree(1) == 1);
    g.check_invariants();
    CHECK_FALSE(g.remove_node(2));
    CHECK(g.remove_edge(4, 3));
    CHECK_FALSE(g.has_edge(3, 4));
    g.check_invariants();
  }

  TEST_CASE("self-loops and duplicates are rejected") {
    Graph g = path_graph(3);
    CHECK_FALSE(g.add_edge(1, 1));
    CHECK_FALSE(g.add_edge(1, 0));
    CHECK(g.num_edges() == 2);
    CHECK_THROWS_AS(g.add_edge(0, 99), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 2, EdgeAttributes{0.0, {}}), std::invalid_argument);
  }

  TEST_CASE("ids are never reused") {
    Graph g = path_graph(3);
    g.remove_node(2);
    CHECK(g.add_node() == 3);
    g.reserve_ids(10);
    CHECK(g.add_node() == 10);
    CHECK_THROWS_AS(g.add_node_with_id(0), std::invalid_argument);
  }

  TEST_CASE("edge keys ignore orientation") {
    CHECK(edge_key(3, 7) == edge_key(7, 3));
    CHECK(edge_from_key(edge_key(7, 3)) == Edge{3, 7});
  }

  TEST_CASE("weighted degree sums incident weights") {
    Graph g = path_graph(3);
    g.edge_attributes(0, 1).weight = 2.5;
    CHECK(g.weighted_degree(1) == doctest::Approx(3.5));
  }

  TEST_CASE("bfs layers and distances") {
    const Graph g = path_graph(5);
    const auto layers = bfs_layers(g, 0, 10);
    REQUIRE(layers.size() == 5);
    CHECK(layers[3] == std::vector<NodeId>{3});
    const auto d = bfs_distances(g, 2, 1);
    CHECK(d.size() == 3);
    CHECK(d.at(1) == 1);
    CHECK_FALSE(d.contains(0));
  }

  TEST_CASE("components sorted by size then smallest id") {
    Graph g = from_edges(7, {{5, 6}, {0, 1}, {1, 2}});
    const auto comps = connected_components(g);
    REQUIRE(comps.size() == 4);
    CHECK(comps[0].size() == 3);
    CHECK(comps[1].size() == 2);
    CHECK(comps[2] == std::vector<NodeId>{3});
    CHECK(comps[3] == std::vector<NodeId>{4});
    CHECK_FALSE(is_connected(g));
    const Graph lcc = largest_component(g);
    CHECK(lcc.num_nodes() == 3);
    CHECK(is_connected(lcc));
  }

  TEST_CASE("sampling throws on empty graphs") {
    Graph g;
    Rng rng(1);
    CHECK_THROWS_WITH_AS(random_node(g, rng), "empty graph", std::invalid_argument);
    g.add_node();
    CHECK_THROWS_WITH_AS(random_edge(g, rng), "empty graph", std::invalid_argument);
  }

  TEST_CASE("density") {
    CHECK(density(complete_graph(5)) == doctest::Approx(1.0));
    CHECK(density(path_graph(1)) == 0.0);
    CHECK(density(path_graph(4)) == doctest::Approx(0.5));
  }

  TEST_CASE("random mutation sequences preserve invariants") {
    Rng rng(42);
    Graph g = random_graph(30, 0.2, rng);
    std::uniform_int_distribution<int> op(0, 3);
    for (int step = 0; step < 2000; ++step) {
      switch (op(rng)) {
        case 0:
          g.add_node();
          break;
        case 1:
          if (g.num_nodes() > 1) g.add_edge(random_node(g, rng), random_node(g, rng));
          break;
        case 2:
          if (g.num_edges() > 0) {
            const Edge e = random_edge(g, rng);
            g.remove_edge(e.u, e.v);
          }
          break;
        default:
          if (g.num_nodes() > 5) g.remove_node(random_node(g, rng));
      }
    }
    g.check_invariants();
  }
}

TEST_SUITE("edge_list") {
  TEST_CASE("parses edges, isolated nodes, comments and weights") {
    std::istringstream in("# header\nalice bob\nbob carol 2.5\n\ndave\nalice alice\nbob alice\n");
    const EdgeListData data = read_edge_list(in);
    CHECK(data.graph.num_nodes() == 4);
    CHECK(data.graph.num_edges() == 2);
    CHECK(data.names == std::vector<std::string>{"alice", "bob", "carol", "dave"});
    CHECK(data.self_loops_skipped == 1);
    CHECK(data.duplicates_skipped == 1);
    CHECK(data.weights_ignored == 1);
    CHECK(data.graph.degree(3) == 0);
  }

  TEST_CASE("malformed lines report their line number") {
    std::istringstream four("a b\nc d e f\n");
    try {
      read_edge_list(four);
      FAIL("expected EdgeListError");
    } catch (const EdgeListError& e) {
      CHECK(e.line() == 2);
    }
    std::istringstream word("a b\nb c\nc d heavy\n");
    CHECK_THROWS_AS(read_edge_list(word), EdgeListError);
  }

  TEST_CASE("write then read reproduces the bytes") {
    std::istringstream in("0 1\n1 2\n2 0\n5\n3 4\n");
    const EdgeListData data = read_edge_list(in);
    std::ostringstream once;
    write_edge_list(once, data.graph, [&](NodeId id) { return data.names[id]; });
    std::istringstream again(once.str());
    const EdgeListData reread = read_edge_list(again);
    std::ostringstream twice;
    write_edge_list(twice, reread.graph, [&](NodeId id) { return reread.names[id]; });
    CHECK(once.str() == twice.str());
    CHECK(once.str() == "0 1\n1 2\n2 0\n3 4\n5\n");
  }

  TEST_CASE("missing file is an error") {
    CHECK_THROWS(read_edge_list(std::filesystem::path("/nonexistent/graph.edges")));
  }
}
