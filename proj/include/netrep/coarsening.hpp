#pragma once

#include <memory>
#include <optional>
#include <unordered_map>
#include <vector>

#include "netrep/config.hpp"
#include "netrep/graph.hpp"

namespace netrep {

struct SeedSplit {
  std::vector<NodeId> seeds;   // C
  std::vector<NodeId> others;  // F
};

/// Links a coarse graph to the finer graph it was built from. Each fine node
/// belongs to exactly one aggregate (the restriction matrix has one nonzero
/// per row), and each fine edge is either internal to an aggregate or part of
/// the pre-image of exactly one coarse edge.
struct Projection {
  // Coarse node -> fine members, seed first.
  std::unordered_map<NodeId, std::vector<NodeId>> node_map;
  // edge_key of a coarse edge -> fine edges crossing between the two aggregates.
  std::unordered_map<std::uint64_t, std::vector<Edge>> edge_map;
  // Coarse node -> fine edges with both endpoints inside the aggregate.
  std::unordered_map<NodeId, std::vector<Edge>> internal_edges;
  // The finer graph; source of node and edge attributes during interpolation.
  std::shared_ptr<const Graph> fine;
};

struct CoarseLevel {
  Graph coarse;
  Projection projection;
};

struct HierarchyLevel {
  int level_index = 0;
  Graph graph;
  // Absent at level 0.
  std::optional<Projection> projection_to_finer;
};

/// Greedy seed selection: nodes in descending weighted degree (ties by id)
/// become seeds unless a neighbour is already a seed; a second pass promotes
/// any node still lacking a seed neighbour.
SeedSplit select_seeds(const Graph& g);

/// Assigns every F-node to the neighbouring seed with the heaviest connecting
/// edge (ties by smallest seed id) and builds the coarse graph. Coarse ids are
/// 0..k-1 in ascending seed-id order.
CoarseLevel aggregate(const Graph& g, const SeedSplit& split);

CoarseLevel coarsen(const Graph& g);

/// False for graphs with at most one node or no edges, graphs at least
/// `cfg.max_density` dense, or when no deeper level has a nonzero edit rate.
bool should_coarsen(const Graph& g, int level, const EditConfig& cfg);

/// Coarsens while should_coarsen holds. Element 0 is `g` itself.
std::vector<HierarchyLevel> build_hierarchy(const Graph& g, const EditConfig& cfg);

}  // namespace netrep
