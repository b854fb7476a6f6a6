#include <filesystem>
#include <fstream>

#include "doctest.h"
#include "netrep/config.hpp"

using namespace netrep;

namespace {

std::string field_of(const std::string& text) {
  try {
    config_from_json(text);
  } catch (const ConfigError& e) {
    return e.field();
  }
  return "";
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("presets") {
    const EditConfig p1 = EditConfig::preset("p1");
    CHECK(p1.edge_rate(0) == 0.08);
    CHECK(p1.node_rate(1) == 0.07);
    CHECK(p1.edge_rate(2) == 0.0);
    const EditConfig p2 = EditConfig::preset_p2();
    CHECK(p2.node_edit_rates == std::vector<double>{0.05, 0.04, 0.03, 0.02, 0.01});
    CHECK(p2.has_edits_below(3));
    CHECK_FALSE(p2.has_edits_below(4));
    CHECK_THROWS_AS(EditConfig::preset("p3"), ConfigError);
  }

  TEST_CASE("rates past the configured levels are zero") {
    EditConfig cfg;
    cfg.edge_edit_rates = {0.1};
    CHECK(cfg.edge_rate(5) == 0.0);
    CHECK(cfg.edge_rate(-1) == 0.0);
    CHECK_FALSE(cfg.has_edits_below(0));
  }

  TEST_CASE("scaling multiplies edit rates only") {
    EditConfig cfg = EditConfig::preset_p1();
    cfg.node_growth_rates = {0.5};
    const EditConfig tenth = cfg.scaled(0.1);
    CHECK(tenth.edge_rate(0) == doctest::Approx(0.008));
    CHECK(tenth.node_rate(1) == doctest::Approx(0.007));
    CHECK(tenth.node_growth(0) == 0.5);
  }

  TEST_CASE("json round trip") {
    EditConfig cfg = EditConfig::preset_p2();
    cfg.edge_growth_rates = {0.1, -0.2};
    cfg.bfs_horizon = 7;
    cfg.spath_sample_size = 321;
    cfg.deferential_detachment = true;
    cfg.enforce_connectivity = true;
    cfg.max_density = 0.75;
    cfg.loop_safety_factor = 3;
    cfg.rng_seed = 12345;
    const std::string text = config_to_json(cfg);
    const EditConfig back = config_from_json(text);
    CHECK(config_to_json(back) == text);
    CHECK(back.spath_sample_size == std::optional<std::size_t>(321));
    CHECK(back.mutual_neighbor_protection == false);
  }

  TEST_CASE("missing keys keep defaults and presets can be overridden") {
    const EditConfig cfg = config_from_json(R"({"preset": "p1", "bfs_horizon": 5})");
    CHECK(cfg.edge_rate(0) == 0.08);
    CHECK(cfg.bfs_horizon == 5);
    CHECK(cfg.max_density == 0.9);
    const EditConfig empty = config_from_json("{}");
    CHECK(empty.node_edit_rates.empty());
  }

  TEST_CASE("errors name the offending field") {
    CHECK(field_of(R"({"edge_edit_rates": [0.1, 1.5]})") == "edge_edit_rates");
    CHECK(field_of(R"({"node_edit_rates": [-0.1]})") == "node_edit_rates");
    CHECK(field_of(R"({"node_growth_rates": [2.0]})") == "node_growth_rates");
    CHECK(field_of(R"({"bfs_horizon": 0})") == "bfs_horizon");
    CHECK(field_of(R"({"bfs_horizon": "far"})") == "bfs_horizon");
    CHECK(field_of(R"({"max_density": 0})") == "max_density");
    CHECK(field_of(R"({"loop_safety_factor": 0})") == "loop_safety_factor");
    CHECK(field_of(R"({"spath_sample_size": 0})") == "spath_sample_size");
    CHECK(field_of(R"({"edge_rates": [0.1]})") == "edge_rates");
    CHECK(field_of(R"({"schema_version": 2})") == "schema_version");
    CHECK(field_of(R"({"preset": "p9"})") == "preset");
    CHECK(field_of("[1, 2]") == "<document>");
    CHECK(field_of("{") == "<document>");
  }

  TEST_CASE("load from file") {
    const auto path = std::filesystem::temp_directory_path() / "netrep_config_test.json";
    {
      std::ofstream out(path);
      out << R"({"edge_edit_rates": [0.2], "node_edit_rates": [0.1]})";
    }
    const EditConfig cfg = load_config(path);
    CHECK(cfg.edge_rate(0) == 0.2);
    std::filesystem::remove(path);
    CHECK_THROWS_AS(load_config(path), ConfigError);
  }
}
