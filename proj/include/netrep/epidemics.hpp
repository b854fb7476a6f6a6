#pragma once

#include <cstdint>
#include <vector>

#include "netrep/graph.hpp"

namespace netrep {

struct SeirParams {
  // Durations are drawn uniformly from {mean - jitter, ..., mean + jitter}.
  int latent_mean = 2;
  int latent_jitter = 1;
  int infectious_mean = 9;
  int infectious_jitter = 1;
  double transmission_prob_per_day = 0.5;
  int horizon_days = 100;
  // Used when initial_nodes is empty: this many distinct uniform nodes.
  std::size_t initial_count = 1;
  std::vector<NodeId> initial_nodes;

  /// Throws std::invalid_argument on probabilities outside [0,1] or
  /// durations that can fall below one day.
  void validate() const;
};

/// New exposures per day, length horizon_days. Day 0 holds the initial cases.
/// An exposure on day t becomes infectious on day t + latent and recovers on
/// day t + latent + infectious. Each day every susceptible neighbour of a
/// node infectious at the end of the previous day is exposed with the
/// transmission probability, independently per infectious neighbour.
std::vector<std::uint32_t> run_seir(const Graph& g, const SeirParams& params, Rng& rng);

struct IncidenceStats {
  std::vector<double> mean;
  // Population standard deviation over all pooled runs.
  std::vector<double> stddev;
  std::size_t runs = 0;

  /// First day attaining the maximum of `mean`.
  std::size_t peak_day() const;
  double peak_height() const;
};

/// Pools runs_per_graph runs on every graph. Run r on graph i uses seed
/// base_seed + i * runs_per_graph + r, so initial cases are reseeded per run.
IncidenceStats epidemic_ensemble(const std::vector<Graph>& graphs, const SeirParams& params,
                                 std::size_t runs_per_graph, std::uint64_t base_seed);

}  // namespace netrep
