#include "netrep/config.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace netrep {

using nlohmann::json;

bool EditConfig::has_edits_below(int level) const {
  auto any_after = [level](const std::vector<double>& rates) {
    for (std::size_t i = static_cast<std::size_t>(level + 1); i < rates.size(); ++i) {
      if (rates[i] != 0.0) return true;
    }
    return false;
  };
  return any_after(node_edit_rates) || any_after(edge_edit_rates);
}

std::size_t EditConfig::sample_size_for(std::size_t num_edges) const {
  if (spath_sample_size) return *spath_sample_size;
  return std::min<std::size_t>(num_edges, 1000);
}

void EditConfig::validate() const {
  auto check_rates = [](const std::vector<double>& rates, const char* field, double lo, double hi) {
    for (std::size_t i = 0; i < rates.size(); ++i) {
      if (!std::isfinite(rates[i]) || rates[i] < lo || rates[i] > hi) {
        std::ostringstream msg;
        msg << "entry " << i << " = " << rates[i] << " outside [" << lo << ", " << hi << "]";
        throw ConfigError(field, msg.str());
      }
    }
  };
  check_rates(node_edit_rates, "node_edit_rates", 0.0, 1.0);
  check_rates(edge_edit_rates, "edge_edit_rates", 0.0, 1.0);
  check_rates(node_growth_rates, "node_growth_rates", -1.0, 1.0);
  check_rates(edge_growth_rates, "edge_growth_rates", -1.0, 1.0);
  if (bfs_horizon < 1) throw ConfigError("bfs_horizon", "must be a positive integer");
  if (spath_sample_size && *spath_sample_size == 0) throw ConfigError("spath_sample_size", "must be positive");
  if (!(max_density > 0.0 && max_density <= 1.0)) throw ConfigError("max_density", "must be in (0, 1]");
  if (loop_safety_factor < 1) throw ConfigError("loop_safety_factor", "must be a positive integer");
}

EditConfig EditConfig::scaled(double factor) const {
  EditConfig out = *this;
  for (double& r : out.node_edit_rates) r *= factor;
  for (double& r : out.edge_edit_rates) r *= factor;
  return out;
}

EditConfig EditConfig::preset_p1() {
  EditConfig cfg;
  cfg.node_edit_rates = {0.08, 0.07};
  cfg.edge_edit_rates = {0.08, 0.07};
  return cfg;
}

EditConfig EditConfig::preset_p2() {
  EditConfig cfg;
  cfg.node_edit_rates = {0.05, 0.04, 0.03, 0.02, 0.01};
  cfg.edge_edit_rates = cfg.node_edit_rates;
  return cfg;
}

EditConfig EditConfig::preset(const std::string& name) {
  if (name == "p1" || name == "P1") return preset_p1();
  if (name == "p2" || name == "P2") return preset_p2();
  throw ConfigError("preset", "unknown preset '" + name + "' (expected p1 or p2)");
}

std::string config_to_json(const EditConfig& cfg) {
  json j;
  j["schema_version"] = kConfigSchemaVersion;
  j["node_edit_rates"] = cfg.node_edit_rates;
  j["edge_edit_rates"] = cfg.edge_edit_rates;
  j["node_growth_rates"] = cfg.node_growth_rates;
  j["edge_growth_rates"] = cfg.edge_growth_rates;
  j["bfs_horizon"] = cfg.bfs_horizon;
  j["spath_sample_size"] = cfg.spath_sample_size ? json(*cfg.spath_sample_size) : json(nullptr);
  j["deferential_detachment"] = cfg.deferential_detachment;
  j["mutual_neighbor_protection"] = cfg.mutual_neighbor_protection;
  j["enforce_connectivity"] = cfg.enforce_connectivity;
  j["max_density"] = cfg.max_density;
  j["loop_safety_factor"] = cfg.loop_safety_factor;
  j["rng_seed"] = cfg.rng_seed;
  return j.dump(2);
}

namespace {

template <typename T>
void read_field(const json& j, const char* field, T& out) {
  if (!j.contains(field)) return;
  try {
    out = j.at(field).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(field, std::string("wrong type: ") + e.what());
  }
}

}  // namespace

EditConfig config_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError("<document>", e.what());
  }
  if (!j.is_object()) throw ConfigError("<document>", "config must be a JSON object");

  static const char* const kKnown[] = {"schema_version",    "node_edit_rates",        "edge_edit_rates",
                                       "node_growth_rates", "edge_growth_rates",      "bfs_horizon",
                                       "spath_sample_size", "deferential_detachment", "mutual_neighbor_protection",
                                       "enforce_connectivity", "max_density",         "loop_safety_factor",
                                       "rng_seed",          "preset"};
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (const char* k : kKnown) known = known || key == k;
    if (!known) throw ConfigError(key, "unknown configuration key");
  }

  EditConfig cfg;
  if (j.contains("preset")) {
    if (!j["preset"].is_string()) throw ConfigError("preset", "must be a string");
    cfg = EditConfig::preset(j["preset"].get<std::string>());
  }
  if (j.contains("schema_version")) {
    int version = 0;
    read_field(j, "schema_version", version);
    if (version != kConfigSchemaVersion) throw ConfigError("schema_version", "unsupported version " + std::to_string(version));
  }
  read_field(j, "node_edit_rates", cfg.node_edit_rates);
  read_field(j, "edge_edit_rates", cfg.edge_edit_rates);
  read_field(j, "node_growth_rates", cfg.node_growth_rates);
  read_field(j, "edge_growth_rates", cfg.edge_growth_rates);
  read_field(j, "bfs_horizon", cfg.bfs_horizon);
  if (j.contains("spath_sample_size") && !j["spath_sample_size"].is_null()) {
    const json& v = j["spath_sample_size"];
    if (!v.is_number_integer() || v.get<long long>() <= 0) throw ConfigError("spath_sample_size", "must be a positive integer");
    cfg.spath_sample_size = v.get<std::size_t>();
  }
  read_field(j, "deferential_detachment", cfg.deferential_detachment);
  read_field(j, "mutual_neighbor_protection", cfg.mutual_neighbor_protection);
  read_field(j, "enforce_connectivity", cfg.enforce_connectivity);
  read_field(j, "max_density", cfg.max_density);
  read_field(j, "loop_safety_factor", cfg.loop_safety_factor);
  read_field(j, "rng_seed", cfg.rng_seed);
  cfg.validate();
  return cfg;
}

EditConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("<file>", "cannot open config " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return config_from_json(buffer.str());
}

}  // namespace netrep
