#include "netrep/graph.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace netrep {

std::size_t Graph::index_of(NodeId id) const {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) {
    throw std::invalid_argument("node not found: " + std::to_string(id));
  }
  return it->second;
}

NodeId Graph::add_node(NodeAttributes attrs) {
  const NodeId id = next_id_;
  add_node_with_id(id, std::move(attrs));
  return id;
}

void Graph::add_node_with_id(NodeId id, NodeAttributes attrs) {
  if (attrs.size == 0) throw std::invalid_argument("node size must be positive");
  auto [it, inserted] = node_index_.emplace(id, node_ids_.size());
  if (!inserted) throw std::invalid_argument("duplicate node id: " + std::to_string(id));
  node_ids_.push_back(id);
  node_attrs_.push_back(std::move(attrs));
  adjacency_.emplace_back();
  if (id >= next_id_) next_id_ = id + 1;
}

void Graph::detach_neighbor(NodeId owner, NodeId gone) {
  auto& adj = adjacency_[index_of(owner)];
  auto it = std::find(adj.begin(), adj.end(), gone);
  if (it != adj.end()) {
    *it = adj.back();
    adj.pop_back();
  }
}

bool Graph::remove_node(NodeId id) {
  auto it = node_index_.find(id);
  if (it == node_index_.end()) return false;
  // Copy: remove_edge mutates this adjacency list.
  const std::vector<NodeId> nbrs = adjacency_[it->second];
  for (NodeId other : nbrs) remove_edge(id, other);

  const std::size_t index = node_index_.at(id);
  const std::size_t last = node_ids_.size() - 1;
  if (index != last) {
    node_ids_[index] = node_ids_[last];
    node_attrs_[index] = std::move(node_attrs_[last]);
    adjacency_[index] = std::move(adjacency_[last]);
    node_index_[node_ids_[index]] = index;
  }
  node_ids_.pop_back();
  node_attrs_.pop_back();
  adjacency_.pop_back();
  node_index_.erase(id);
  return true;
}

bool Graph::add_edge(NodeId u, NodeId v, EdgeAttributes attrs) {
  if (u == v) return false;
  const std::size_t iu = index_of(u);
  const std::size_t iv = index_of(v);
  if (!(attrs.weight > 0.0)) throw std::invalid_argument("edge weight must be positive");
  auto [it, inserted] = edge_index_.emplace(edge_key(u, v), edges_.size());
  if (!inserted) return false;
  edges_.push_back(Edge{u, v});
  edge_attrs_.push_back(std::move(attrs));
  adjacency_[iu].push_back(v);
  adjacency_[iv].push_back(u);
  return true;
}

bool Graph::remove_edge(NodeId u, NodeId v) {
  auto it = edge_index_.find(edge_key(u, v));
  if (it == edge_index_.end()) return false;
  const std::size_t index = it->second;
  const std::size_t last = edges_.size() - 1;
  if (index != last) {
    edges_[index] = edges_[last];
    edge_attrs_[index] = std::move(edge_attrs_[last]);
    edge_index_[edge_key(edges_[index].u, edges_[index].v)] = index;
  }
  edges_.pop_back();
  edge_attrs_.pop_back();
  edge_index_.erase(it);
  detach_neighbor(u, v);
  detach_neighbor(v, u);
  return true;
}

std::span<const NodeId> Graph::neighbors(NodeId id) const { return adjacency_[index_of(id)]; }

double Graph::weighted_degree(NodeId id) const {
  double total = 0.0;
  for (NodeId other : neighbors(id)) total += edge_attributes(id, other).weight;
  return total;
}

const NodeAttributes& Graph::node_attributes(NodeId id) const { return node_attrs_[index_of(id)]; }
NodeAttributes& Graph::node_attributes(NodeId id) { return node_attrs_[index_of(id)]; }

const EdgeAttributes& Graph::edge_attributes(NodeId u, NodeId v) const {
  auto it = edge_index_.find(edge_key(u, v));
  if (it == edge_index_.end()) {
    throw std::invalid_argument("edge not found: " + std::to_string(u) + "-" + std::to_string(v));
  }
  return edge_attrs_[it->second];
}

EdgeAttributes& Graph::edge_attributes(NodeId u, NodeId v) {
  return const_cast<EdgeAttributes&>(std::as_const(*this).edge_attributes(u, v));
}

void Graph::check_invariants() const {
  auto fail = [](const std::string& what) { throw std::logic_error("graph invariant violated: " + what); };
  if (node_ids_.size() != node_index_.size() || node_attrs_.size() != node_ids_.size() ||
      adjacency_.size() != node_ids_.size()) {
    fail("node storage sizes");
  }
  for (std::size_t i = 0; i < node_ids_.size(); ++i) {
    auto it = node_index_.find(node_ids_[i]);
    if (it == node_index_.end() || it->second != i) fail("node index");
    if (node_ids_[i] >= next_id_) fail("id above high-water mark");
    if (node_attrs_[i].size == 0) fail("zero node size");
  }
  if (edges_.size() != edge_index_.size() || edge_attrs_.size() != edges_.size()) fail("edge storage sizes");
  std::size_t endpoint_total = 0;
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) fail("self-loop");
    if (!has_node(e.u) || !has_node(e.v)) fail("dangling edge");
    auto it = edge_index_.find(edge_key(e.u, e.v));
    if (it == edge_index_.end() || it->second != i) fail("edge index");
    if (!(edge_attrs_[i].weight > 0.0)) fail("non-positive weight");
  }
  for (const auto& adj : adjacency_) endpoint_total += adj.size();
  if (endpoint_total != 2 * edges_.size()) fail("adjacency does not match edge set");
}

bool same_topology(const Graph& a, const Graph& b) {
  if (a.num_nodes() != b.num_nodes() || a.num_edges() != b.num_edges()) return false;
  for (NodeId id : a.node_ids()) {
    if (!b.has_node(id)) return false;
  }
  for (const Edge& e : a.edges()) {
    if (!b.has_edge(e.u, e.v)) return false;
  }
  return true;
}

std::vector<std::vector<NodeId>> bfs_layers(const Graph& g, NodeId source, int depth) {
  if (!g.has_node(source)) throw std::invalid_argument("node not found: " + std::to_string(source));
  std::vector<std::vector<NodeId>> layers{{source}};
  // Ids are bounded by next_id(), so a per-thread stamp array replaces
  // hashing; bumping the epoch clears it in O(1).
  thread_local std::vector<std::uint32_t> stamp;
  thread_local std::uint32_t epoch = 0;
  if (stamp.size() < g.next_id()) stamp.resize(g.next_id(), 0);
  if (++epoch == 0) {
    std::fill(stamp.begin(), stamp.end(), 0);
    epoch = 1;
  }
  auto seen = [&](NodeId y) {
    if (stamp[y] == epoch) return true;
    stamp[y] = epoch;
    return false;
  };
  seen(source);
  for (int d = 1; d <= depth; ++d) {
    std::vector<NodeId> next;
    for (NodeId x : layers.back()) {
      for (NodeId y : g.neighbors(x)) {
        if (!seen(y)) next.push_back(y);
      }
    }
    if (next.empty()) break;
    layers.push_back(std::move(next));
  }
  return layers;
}

std::unordered_map<NodeId, int> bfs_distances(const Graph& g, NodeId source, int horizon) {
  if (horizon < 1) throw std::invalid_argument("horizon must be at least 1");
  std::unordered_map<NodeId, int> dist;
  const auto layers = bfs_layers(g, source, horizon);
  for (std::size_t d = 0; d < layers.size(); ++d) {
    for (NodeId x : layers[d]) dist.emplace(x, static_cast<int>(d));
  }
  return dist;
}

NodeId random_node(const Graph& g, Rng& rng) {
  if (g.num_nodes() == 0) throw std::invalid_argument("empty graph");
  std::uniform_int_distribution<std::size_t> pick(0, g.num_nodes() - 1);
  return g.node_at(pick(rng));
}

Edge random_edge(const Graph& g, Rng& rng) {
  if (g.num_edges() == 0) throw std::invalid_argument("empty graph");
  std::uniform_int_distribution<std::size_t> pick(0, g.num_edges() - 1);
  return g.edge_at(pick(rng));
}

double density(const Graph& g) {
  const double n = static_cast<double>(g.num_nodes());
  if (n < 2) return 0.0;
  return static_cast<double>(g.num_edges()) / (n * (n - 1) / 2.0);
}

std::vector<std::vector<NodeId>> connected_components(const Graph& g) {
  std::vector<std::vector<NodeId>> components;
  std::unordered_set<NodeId> seen;
  seen.reserve(g.num_nodes());
  for (NodeId start : g.node_ids()) {
    if (!seen.insert(start).second) continue;
    std::vector<NodeId> members{start};
    for (std::size_t head = 0; head < members.size(); ++head) {
      for (NodeId y : g.neighbors(members[head])) {
        if (seen.insert(y).second) members.push_back(y);
      }
    }
    components.push_back(std::move(members));
  }
  std::vector<NodeId> min_id(components.size());
  for (std::size_t i = 0; i < components.size(); ++i) {
    min_id[i] = *std::min_element(components[i].begin(), components[i].end());
  }
  std::vector<std::size_t> order(components.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    if (components[a].size() != components[b].size()) return components[a].size() > components[b].size();
    return min_id[a] < min_id[b];
  });
  std::vector<std::vector<NodeId>> sorted;
  sorted.reserve(components.size());
  for (std::size_t i : order) sorted.push_back(std::move(components[i]));
  return sorted;
}

bool is_connected(const Graph& g) {
  if (g.num_nodes() <= 1) return true;
  std::unordered_set<NodeId> seen{g.node_at(0)};
  std::deque<NodeId> queue{g.node_at(0)};
  while (!queue.empty()) {
    NodeId x = queue.front();
    queue.pop_front();
    for (NodeId y : g.neighbors(x)) {
      if (seen.insert(y).second) queue.push_back(y);
    }
  }
  return seen.size() == g.num_nodes();
}

Graph induced_subgraph(const Graph& g, std::span<const NodeId> nodes) {
  Graph sub;
  std::unordered_set<NodeId> keep(nodes.begin(), nodes.end());
  // Preserve the parent's storage order so the result is deterministic.
  for (NodeId id : g.node_ids()) {
    if (keep.contains(id)) sub.add_node_with_id(id, g.node_attributes(id));
  }
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge_at(i);
    if (keep.contains(e.u) && keep.contains(e.v)) sub.add_edge(e.u, e.v, g.edge_attributes_at(i));
  }
  sub.reserve_ids(g.next_id());
  return sub;
}

Graph largest_component(const Graph& g) {
  if (g.empty()) return Graph{};
  const auto components = connected_components(g);
  if (components.front().size() == g.num_nodes()) return g;
  return induced_subgraph(g, components.front());
}

IndexedGraph index_graph(const Graph& g) {
  IndexedGraph out;
  out.ids.assign(g.node_ids().begin(), g.node_ids().end());
  std::unordered_map<NodeId, std::uint32_t> local;
  local.reserve(out.ids.size());
  for (std::uint32_t i = 0; i < out.ids.size(); ++i) local.emplace(out.ids[i], i);
  out.adj.resize(out.ids.size());
  for (const Edge& e : g.edges()) {
    const std::uint32_t a = local.at(e.u);
    const std::uint32_t b = local.at(e.v);
    out.adj[a].push_back(b);
    out.adj[b].push_back(a);
  }
  for (auto& row : out.adj) std::sort(row.begin(), row.end());
  return out;
}

}  // namespace netrep
