#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

namespace netrep {

using NodeId = std::uint32_t;
using Rng = std::mt19937_64;
using Annotation = std::optional<std::string>;

/// An undirected edge. Orientation is kept as inserted so that edge lists
/// round-trip, but two edges with swapped endpoints are the same edge.
struct Edge {
  NodeId u = 0;
  NodeId v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Orientation-free 64-bit key for the pair {a, b}.
constexpr std::uint64_t edge_key(NodeId a, NodeId b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

constexpr Edge edge_from_key(std::uint64_t key) {
  return Edge{static_cast<NodeId>(key >> 32), static_cast<NodeId>(key & 0xffffffffu)};
}

struct NodeAttributes {
  // Number of finest-level nodes represented by this node.
  std::uint32_t size = 1;
  // Finest-level edges absorbed inside the aggregate.
  std::uint64_t internal_edge_count = 0;
  Annotation annotation;

  friend bool operator==(const NodeAttributes&, const NodeAttributes&) = default;
};

struct EdgeAttributes {
  double weight = 1.0;
  Annotation annotation;

  friend bool operator==(const EdgeAttributes&, const EdgeAttributes&) = default;
};

/// Simple undirected weighted graph with opaque integer node ids.
///
/// Nodes and edges live in dense vectors (swap-remove on deletion) so that
/// uniform sampling is O(1). Iteration order is a deterministic function of
/// the mutation history. Ids handed out by add_node() never repeat, even after
/// the node carrying the largest id has been removed.
class Graph {
 public:
  Graph() = default;

  NodeId add_node(NodeAttributes attrs = {});
  void add_node_with_id(NodeId id, NodeAttributes attrs = {});
  bool remove_node(NodeId id);
  bool has_node(NodeId id) const { return node_index_.contains(id); }

  /// Returns false when the edge already exists or u == v.
  bool add_edge(NodeId u, NodeId v, EdgeAttributes attrs = {});
  bool remove_edge(NodeId u, NodeId v);
  bool has_edge(NodeId u, NodeId v) const { return edge_index_.contains(edge_key(u, v)); }

  std::size_t num_nodes() const { return node_ids_.size(); }
  std::size_t num_edges() const { return edges_.size(); }
  bool empty() const { return node_ids_.empty(); }

  std::span<const NodeId> node_ids() const { return node_ids_; }
  std::span<const Edge> edges() const { return edges_; }
  NodeId node_at(std::size_t index) const { return node_ids_[index]; }
  const Edge& edge_at(std::size_t index) const { return edges_[index]; }

  std::span<const NodeId> neighbors(NodeId id) const;
  std::size_t degree(NodeId id) const { return neighbors(id).size(); }
  double weighted_degree(NodeId id) const;

  const NodeAttributes& node_attributes(NodeId id) const;
  NodeAttributes& node_attributes(NodeId id);
  const EdgeAttributes& edge_attributes(NodeId u, NodeId v) const;
  EdgeAttributes& edge_attributes(NodeId u, NodeId v);
  const EdgeAttributes& edge_attributes_at(std::size_t index) const { return edge_attrs_[index]; }

  /// Smallest id that add_node() may hand out.
  NodeId next_id() const { return next_id_; }
  /// Raises the id high-water mark so fresh ids start at or above `floor`.
  void reserve_ids(NodeId floor) {
    if (floor > next_id_) next_id_ = floor;
  }

  /// Throws std::logic_error when the internal indices disagree.
  void check_invariants() const;

 private:
  std::size_t index_of(NodeId id) const;
  void detach_neighbor(NodeId owner, NodeId gone);

  std::vector<NodeId> node_ids_;
  std::vector<NodeAttributes> node_attrs_;
  std::vector<std::vector<NodeId>> adjacency_;
  std::unordered_map<NodeId, std::size_t> node_index_;

  std::vector<Edge> edges_;
  std::vector<EdgeAttributes> edge_attrs_;
  std::unordered_map<std::uint64_t, std::size_t> edge_index_;

  NodeId next_id_ = 0;
};

/// Same node-id set and same (unordered) edge set.
bool same_topology(const Graph& a, const Graph& b);

/// Hop distances from `source` to every node within `horizon` hops.
std::unordered_map<NodeId, int> bfs_distances(const Graph& g, NodeId source, int horizon);

/// BFS layers: result[d] holds the nodes at exactly distance d (result[0] = {source}).
/// Stops after `depth` layers or when the frontier empties.
std::vector<std::vector<NodeId>> bfs_layers(const Graph& g, NodeId source, int depth);

NodeId random_node(const Graph& g, Rng& rng);
Edge random_edge(const Graph& g, Rng& rng);

/// |E| / (n(n-1)/2); 0 for graphs with fewer than two nodes.
double density(const Graph& g);

/// Components ordered by size (descending), ties by smallest member id.
std::vector<std::vector<NodeId>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes);
Graph largest_component(const Graph& g);

/// Compact 0..n-1 adjacency used by the metric and simulation kernels.
struct IndexedGraph {
  std::vector<NodeId> ids;
  std::vector<std::vector<std::uint32_t>> adj;  // sorted

  std::size_t size() const { return ids.size(); }
};

IndexedGraph index_graph(const Graph& g);

}  // namespace netrep
