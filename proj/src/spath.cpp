#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "netrep/editing.hpp"

namespace netrep {

std::optional<int> SpathDistribution::sample(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  double r = unit(rng);
  for (const auto& [d, p] : probabilities) {
    if (r < p) return d;
    r -= p;
  }
  if (unreachable_mass > 0.0 || probabilities.empty()) return std::nullopt;
  // Rounding residue: fall back to the largest recorded length.
  return probabilities.rbegin()->first;
}

double SpathDistribution::total_mass() const {
  double total = unreachable_mass;
  for (const auto& [d, p] : probabilities) total += p;
  return total;
}

std::optional<int> spath(const Graph& g, NodeId u, NodeId v, int horizon) {
  if (!g.has_edge(u, v)) {
    throw std::invalid_argument("edge not found: " + std::to_string(u) + "-" + std::to_string(v));
  }
  // Bidirectional BFS in which the edge {u,v} itself is not traversable.
  std::unordered_map<NodeId, int> seen_u{{u, 0}};
  std::unordered_map<NodeId, int> seen_v{{v, 0}};
  std::vector<NodeId> front_u{u};
  std::vector<NodeId> front_v{v};
  int depth_u = 0;
  int depth_v = 0;

  while (!front_u.empty() && !front_v.empty() && depth_u + depth_v < horizon) {
    const bool grow_u = front_u.size() <= front_v.size();
    auto& frontier = grow_u ? front_u : front_v;
    auto& mine = grow_u ? seen_u : seen_v;
    const auto& other = grow_u ? seen_v : seen_u;
    int& depth = grow_u ? depth_u : depth_v;

    int best = std::numeric_limits<int>::max();
    std::vector<NodeId> next;
    for (NodeId x : frontier) {
      for (NodeId y : g.neighbors(x)) {
        if ((x == u && y == v) || (x == v && y == u)) continue;
        if (!mine.emplace(y, depth + 1).second) continue;
        next.push_back(y);
        if (auto it = other.find(y); it != other.end()) best = std::min(best, depth + 1 + it->second);
      }
    }
    ++depth;
    if (best != std::numeric_limits<int>::max()) {
      if (best <= horizon) return best;
      return std::nullopt;
    }
    frontier = std::move(next);
  }
  return std::nullopt;
}

SpathDistribution estimate_spath_distribution(const Graph& g, const EditConfig& cfg, Rng& rng) {
  SpathDistribution dist;
  if (g.num_edges() == 0) {
    dist.unreachable_mass = 1.0;
    dist.degenerate = true;
    return dist;
  }
  const std::size_t samples = cfg.sample_size_for(g.num_edges());
  std::map<int, std::size_t> counts;
  std::size_t unreachable = 0;
  for (std::size_t i = 0; i < samples; ++i) {
    const Edge e = random_edge(g, rng);
    if (auto d = spath(g, e.u, e.v, cfg.bfs_horizon)) {
      ++counts[*d];
    } else {
      ++unreachable;
    }
  }
  const double total = static_cast<double>(samples);
  for (const auto& [d, c] : counts) dist.probabilities[d] = static_cast<double>(c) / total;
  dist.unreachable_mass = static_cast<double>(unreachable) / total;
  dist.sample_size = samples;
  return dist;
}

std::optional<Edge> insert_edge_at_distance(Graph& g, NodeId u, const SpathDistribution& dist,
                                            const EditConfig& cfg, Rng& rng) {
  if (!g.has_node(u)) throw std::invalid_argument("node not found: " + std::to_string(u));
  const int attempts = cfg.loop_safety_factor;
  for (int attempt = 0; attempt < attempts; ++attempt) {
    std::optional<int> d = dist.sample(rng);
    for (int redraw = 1; !d && redraw < attempts; ++redraw) d = dist.sample(rng);

    std::vector<NodeId> candidates;
    if (d) {
      if (*d > cfg.bfs_horizon) continue;
      auto layers = bfs_layers(g, u, *d);
      if (static_cast<int>(layers.size()) > *d) candidates = std::move(layers[*d]);
    } else {
      auto layers = bfs_layers(g, u, cfg.bfs_horizon);
      for (std::size_t k = 2; k < layers.size(); ++k) {
        candidates.insert(candidates.end(), layers[k].begin(), layers[k].end());
      }
    }
    if (candidates.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    const NodeId v = candidates[pick(rng)];
    if (g.add_edge(u, v)) return Edge{u, v};
  }
  return std::nullopt;
}

}  // namespace netrep
