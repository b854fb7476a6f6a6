#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace netrep {

/// Invalid configuration; `field()` names the offending key.
class ConfigError : public std::invalid_argument {
 public:
  ConfigError(std::string field, const std::string& what)
      : std::invalid_argument(field + ": " + what), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

/// Per-level edit rates and switches for one V-cycle. Levels past the end of
/// a rate list have rate 0.
struct EditConfig {
  std::vector<double> node_edit_rates;
  std::vector<double> edge_edit_rates;
  // Addition goals are scaled by (1 + growth); negative values shrink.
  std::vector<double> node_growth_rates;
  std::vector<double> edge_growth_rates;

  int bfs_horizon = 20;
  // Unset means min(|E|, 1000).
  std::optional<std::size_t> spath_sample_size;

  bool deferential_detachment = false;
  bool mutual_neighbor_protection = false;
  bool enforce_connectivity = false;

  double max_density = 0.9;
  int loop_safety_factor = 10;
  std::uint64_t rng_seed = 0;

  double node_rate(int level) const { return at(node_edit_rates, level); }
  double edge_rate(int level) const { return at(edge_edit_rates, level); }
  double node_growth(int level) const { return at(node_growth_rates, level); }
  double edge_growth(int level) const { return at(edge_growth_rates, level); }

  /// True when some level strictly deeper than `level` has a nonzero rate.
  bool has_edits_below(int level) const;

  std::size_t sample_size_for(std::size_t num_edges) const;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;

  /// Same config with every edit rate multiplied by `factor`.
  EditConfig scaled(double factor) const;

  static EditConfig zero() { return EditConfig{}; }
  /// 8% at the finest level, 7% at the next, for nodes and edges.
  static EditConfig preset_p1();
  /// 5%, 4%, 3%, 2%, 1% over five levels, for nodes and edges.
  static EditConfig preset_p2();
  /// "p1" or "p2"; throws ConfigError otherwise.
  static EditConfig preset(const std::string& name);

 private:
  static double at(const std::vector<double>& v, int level) {
    return level >= 0 && static_cast<std::size_t>(level) < v.size() ? v[level] : 0.0;
  }
};

inline constexpr int kConfigSchemaVersion = 1;

std::string config_to_json(const EditConfig& cfg);
/// Missing keys keep their defaults; unknown keys are rejected.
EditConfig config_from_json(const std::string& text);
EditConfig load_config(const std::filesystem::path& path);

}  // namespace netrep
