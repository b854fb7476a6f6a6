#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "netrep/config.hpp"
#include "netrep/graph.hpp"

namespace netrep {

/// Empirical distribution of second-shortest-path lengths over sampled edges.
struct SpathDistribution {
  // d >= 2 -> probability.
  std::map<int, double> probabilities;
  double unreachable_mass = 0.0;
  std::size_t sample_size = 0;
  // Set when the source graph had no edges to sample.
  bool degenerate = false;

  /// Draws a length, or nullopt for "unreachable".
  std::optional<int> sample(Rng& rng) const;
  double total_mass() const;
};

/// Length of the shortest u-v path avoiding the edge {u,v}, searched up to
/// `horizon` hops; nullopt when no such path exists within the horizon.
/// Throws std::invalid_argument when {u,v} is not an edge.
std::optional<int> spath(const Graph& g, NodeId u, NodeId v, int horizon);

/// Samples cfg.sample_size_for(|E|) edges uniformly with replacement.
SpathDistribution estimate_spath_distribution(const Graph& g, const EditConfig& cfg, Rng& rng);

/// Connects `u` to a node at a distance drawn from `dist`. "Unreachable"
/// draws are redrawn up to loop_safety_factor times, after which the target
/// is any node at distance 2..bfs_horizon. Returns nullopt after
/// loop_safety_factor failed attempts.
std::optional<Edge> insert_edge_at_distance(Graph& g, NodeId u, const SpathDistribution& dist,
                                            const EditConfig& cfg, Rng& rng);

enum class EditOp { DeleteEdge, RepairEdge, InsertEdge, InsertNode, DeleteNode };

const char* to_string(EditOp op);

struct EditRecord {
  EditOp op;
  NodeId a = 0;
  // Second endpoint for edge operations; degree source for InsertNode.
  NodeId b = 0;
};

struct EditGoal {
  std::size_t requested = 0;
  std::size_t achieved = 0;
};

struct EditLog {
  int level = 0;
  EditGoal edge_deletions;
  EditGoal edge_insertions;
  EditGoal node_insertions;
  EditGoal node_deletions;
  std::size_t repair_edges = 0;
  std::vector<EditRecord> records;

  bool under_achieved() const;
};

/// Removes up to `goal` uniformly sampled edges, applying the optional
/// acceptance filters from `cfg`. `avg_degree` is the pre-edit average degree
/// used by deferential detachment. Returns the number removed.
std::size_t delete_edges(Graph& g, std::size_t goal, double avg_degree, const EditConfig& cfg, Rng& rng,
                         EditLog* log = nullptr);

/// Joins every smaller component to the largest one with a single edge
/// between uniformly chosen representatives. Returns the number of edges added.
std::size_t repair_connectivity(Graph& g, Rng& rng, EditLog* log = nullptr);

/// One editing pass at hierarchy level `level`: edge deletions, optional
/// connectivity repair, edge insertions, node insertions, node deletions.
Graph edit_edges_and_nodes(const Graph& g, int level, const EditConfig& cfg, Rng& rng, EditLog* log = nullptr);

}  // namespace netrep
