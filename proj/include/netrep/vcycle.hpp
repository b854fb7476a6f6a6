#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "netrep/config.hpp"
#include "netrep/editing.hpp"
#include "netrep/graph.hpp"

namespace netrep {

/// Post-edit adjustment applied at every level that was coarsened. Must be
/// safe to call concurrently when used with generate_ensemble.
using AdjustHook = std::function<Graph(const Graph&, Rng&)>;

/// Keeps the largest component, then joins any leftover pieces to it.
Graph keep_connected(const Graph& g, Rng& rng);

struct ReplicaReport {
  Graph replica;
  // Number of levels visited, counting the input level.
  int hierarchy_depth = 1;
  // Ordered from the coarsest level to the finest.
  std::vector<EditLog> edit_logs;
  std::uint64_t rng_seed = 0;
  double wall_time_seconds = 0.0;
};

/// One multiscale revision pass starting at hierarchy level `level`.
/// Throws std::runtime_error("adjustment produced invalid graph") when the hook
/// output fails Graph::check_invariants.
Graph revise_graph(const Graph& g, int level, const EditConfig& cfg, const AdjustHook& adjust, Rng& rng,
                   std::vector<EditLog>* logs = nullptr, int* depth = nullptr);

/// revise_graph at level 0 with a fresh generator seeded by `seed`.
ReplicaReport replicate(const Graph& g, const EditConfig& cfg, std::uint64_t seed, const AdjustHook& adjust = {});

/// `count` replicas; replica i uses seed base_seed + i. Results are in seed
/// order and do not depend on `jobs` (0 means hardware concurrency).
std::vector<ReplicaReport> generate_ensemble(const Graph& g, const EditConfig& cfg, std::size_t count,
                                             std::uint64_t base_seed, unsigned jobs = 0,
                                             const AdjustHook& adjust = {});

/// Iterated replication: element i is the revision of element i-1, starting
/// from `g`. The input itself is not included, so the result has `steps`
/// graphs.
std::vector<Graph> evolve(const Graph& g, const EditConfig& cfg, std::size_t steps, Rng& rng,
                          const AdjustHook& adjust = {});

}  // namespace netrep
