#include "netrep/coarsening.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>

namespace netrep {

SeedSplit select_seeds(const Graph& g) {
  std::vector<std::pair<double, NodeId>> order;
  order.reserve(g.num_nodes());
  for (NodeId id : g.node_ids()) order.emplace_back(g.weighted_degree(id), id);
  std::sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });

  std::unordered_set<NodeId> seeds;
  auto dominated = [&](NodeId id) {
    for (NodeId n : g.neighbors(id)) {
      if (seeds.contains(n)) return true;
    }
    return false;
  };
  for (const auto& [deg, id] : order) {
    if (!dominated(id)) seeds.insert(id);
  }
  // Anything left without a seed neighbour becomes a seed itself.
  for (const auto& [deg, id] : order) {
    if (!seeds.contains(id) && !dominated(id)) seeds.insert(id);
  }

  SeedSplit split;
  for (NodeId id : g.node_ids()) (seeds.contains(id) ? split.seeds : split.others).push_back(id);
  std::sort(split.seeds.begin(), split.seeds.end());
  std::sort(split.others.begin(), split.others.end());
  return split;
}

CoarseLevel aggregate(const Graph& g, const SeedSplit& split) {
  if (split.seeds.size() + split.others.size() != g.num_nodes()) {
    throw std::invalid_argument("seed split does not cover the graph");
  }
  std::vector<NodeId> seeds = split.seeds;
  std::sort(seeds.begin(), seeds.end());

  std::unordered_map<NodeId, NodeId> owner;  // fine node -> coarse id
  owner.reserve(g.num_nodes());
  for (NodeId c = 0; c < seeds.size(); ++c) {
    if (!g.has_node(seeds[c])) throw std::invalid_argument("seed not in graph: " + std::to_string(seeds[c]));
    if (!owner.emplace(seeds[c], c).second) throw std::invalid_argument("duplicate seed");
  }

  CoarseLevel level;
  Projection& proj = level.projection;
  for (NodeId c = 0; c < seeds.size(); ++c) proj.node_map[c].push_back(seeds[c]);

  for (NodeId f : split.others) {
    if (owner.contains(f)) throw std::invalid_argument("node is both seed and non-seed: " + std::to_string(f));
    double best_weight = -1.0;
    NodeId best_seed = 0;
    bool found = false;
    for (NodeId n : g.neighbors(f)) {
      auto it = owner.find(n);
      if (it == owner.end() || seeds[it->second] != n) continue;
      const double w = g.edge_attributes(f, n).weight;
      if (!found || w > best_weight || (w == best_weight && n < best_seed)) {
        best_weight = w;
        best_seed = n;
        found = true;
      }
    }
    if (!found) throw std::invalid_argument("F-node with no seed neighbor: " + std::to_string(f));
    const NodeId c = owner.at(best_seed);
    proj.node_map[c].push_back(f);
    owner.emplace(f, c);
  }
  for (auto& [c, members] : proj.node_map) std::sort(members.begin() + 1, members.end());

  // Accumulate node attributes.
  Graph& coarse = level.coarse;
  std::vector<NodeAttributes> attrs(seeds.size());
  for (NodeId c = 0; c < seeds.size(); ++c) {
    attrs[c].size = 0;
    attrs[c].annotation = g.node_attributes(seeds[c]).annotation;
    for (NodeId f : proj.node_map[c]) {
      const auto& fa = g.node_attributes(f);
      attrs[c].size += fa.size;
      attrs[c].internal_edge_count += fa.internal_edge_count;
    }
  }

  std::vector<std::uint64_t> coarse_order;
  std::unordered_map<std::uint64_t, double> coarse_weight;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge_at(i);
    const double w = g.edge_attributes_at(i).weight;
    const NodeId a = owner.at(e.u);
    const NodeId b = owner.at(e.v);
    if (a == b) {
      proj.internal_edges[a].push_back(e);
      attrs[a].internal_edge_count += static_cast<std::uint64_t>(std::llround(w));
      continue;
    }
    const std::uint64_t key = edge_key(a, b);
    auto [it, inserted] = coarse_weight.emplace(key, 0.0);
    if (inserted) coarse_order.push_back(key);
    it->second += w;
    proj.edge_map[key].push_back(e);
  }

  for (NodeId c = 0; c < seeds.size(); ++c) coarse.add_node_with_id(c, std::move(attrs[c]));
  for (std::uint64_t key : coarse_order) {
    const Edge ce = edge_from_key(key);
    coarse.add_edge(ce.u, ce.v, EdgeAttributes{coarse_weight.at(key), std::nullopt});
  }
  proj.fine = std::make_shared<const Graph>(g);
  return level;
}

CoarseLevel coarsen(const Graph& g) { return aggregate(g, select_seeds(g)); }

bool should_coarsen(const Graph& g, int level, const EditConfig& cfg) {
  if (g.num_nodes() <= 1 || g.num_edges() == 0) return false;
  if (density(g) >= cfg.max_density) return false;
  return cfg.has_edits_below(level);
}

std::vector<HierarchyLevel> build_hierarchy(const Graph& g, const EditConfig& cfg) {
  std::vector<HierarchyLevel> levels;
  levels.push_back(HierarchyLevel{0, g, std::nullopt});
  while (should_coarsen(levels.back().graph, levels.back().level_index, cfg)) {
    CoarseLevel next = coarsen(levels.back().graph);
    const int index = levels.back().level_index + 1;
    levels.push_back(HierarchyLevel{index, std::move(next.coarse), std::move(next.projection)});
  }
  return levels;
}

}  // namespace netrep
