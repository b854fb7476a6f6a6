#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

#include "netrep/metrics.hpp"

namespace netrep {
namespace {

// Weighted graph on 0..n-1. `loop[i]` is the weight of edges folded inside
// node i (each counted once), so strength[i] = sum of adj weights + 2*loop[i].
struct WeightedGraph {
  std::vector<std::vector<std::pair<std::uint32_t, double>>> adj;
  std::vector<double> loop;

  std::size_t size() const { return adj.size(); }
  double strength(std::size_t i) const {
    double s = 2.0 * loop[i];
    for (const auto& [j, w] : adj[i]) s += w;
    return s;
  }
};

WeightedGraph from_graph(const Graph& g) {
  WeightedGraph wg;
  const IndexedGraph ig = index_graph(g);
  wg.adj.resize(ig.size());
  wg.loop.assign(ig.size(), 0.0);
  for (std::size_t i = 0; i < ig.size(); ++i) {
    for (std::uint32_t j : ig.adj[i]) wg.adj[i].emplace_back(j, 1.0);
  }
  return wg;
}

// One round of local moving. Returns true if any node changed community.
bool local_moves(const WeightedGraph& wg, std::vector<std::uint32_t>& comm, double two_m, Rng& rng) {
  const std::size_t n = wg.size();
  std::vector<double> strength(n);
  std::vector<double> total(n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    strength[i] = wg.strength(i);
    total[comm[i]] += strength[i];
  }
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::shuffle(order.begin(), order.end(), rng);

  std::vector<double> link(n, 0.0);
  std::vector<std::uint32_t> touched;
  bool moved_any = false;
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::uint32_t i : order) {
      const std::uint32_t home = comm[i];
      touched.clear();
      for (const auto& [j, w] : wg.adj[i]) {
        if (link[comm[j]] == 0.0) touched.push_back(comm[j]);
        link[comm[j]] += w;
      }
      total[home] -= strength[i];
      // Gain of joining c, up to a constant factor: k_i,c - tot_c * k_i / 2m.
      std::uint32_t best = home;
      double best_gain = link[home] - total[home] * strength[i] / two_m;
      for (std::uint32_t c : touched) {
        const double gain = link[c] - total[c] * strength[i] / two_m;
        if (gain > best_gain + 1e-12) best_gain = gain, best = c;
      }
      total[best] += strength[i];
      for (std::uint32_t c : touched) link[c] = 0.0;
      if (best != home) {
        comm[i] = best;
        improved = true;
        moved_any = true;
      }
    }
  }
  return moved_any;
}

// Relabels communities densely and returns their count.
std::uint32_t compact(std::vector<std::uint32_t>& comm) {
  std::unordered_map<std::uint32_t, std::uint32_t> relabel;
  for (auto& c : comm) {
    auto [it, inserted] = relabel.emplace(c, static_cast<std::uint32_t>(relabel.size()));
    c = it->second;
  }
  return static_cast<std::uint32_t>(relabel.size());
}

WeightedGraph aggregate_communities(const WeightedGraph& wg, const std::vector<std::uint32_t>& comm, std::uint32_t k) {
  WeightedGraph out;
  out.adj.resize(k);
  out.loop.assign(k, 0.0);
  std::vector<std::unordered_map<std::uint32_t, double>> rows(k);
  for (std::size_t i = 0; i < wg.size(); ++i) {
    out.loop[comm[i]] += wg.loop[i];
    for (const auto& [j, w] : wg.adj[i]) {
      if (comm[i] == comm[j]) {
        // Seen from both ends.
        out.loop[comm[i]] += w / 2.0;
      } else {
        rows[comm[i]][comm[j]] += w;
      }
    }
  }
  for (std::uint32_t c = 0; c < k; ++c) {
    out.adj[c].assign(rows[c].begin(), rows[c].end());
    std::sort(out.adj[c].begin(), out.adj[c].end());
  }
  return out;
}

}  // namespace

double modularity(const Graph& g, const std::vector<std::uint32_t>& community) {
  if (g.num_edges() == 0) throw std::invalid_argument("modularity is undefined for an edgeless graph");
  if (community.size() != g.num_nodes()) throw std::invalid_argument("partition size does not match graph");
  const IndexedGraph ig = index_graph(g);
  const double two_m = 2.0 * static_cast<double>(g.num_edges());
  std::unordered_map<std::uint32_t, double> inside;
  std::unordered_map<std::uint32_t, double> total;
  for (std::size_t i = 0; i < ig.size(); ++i) {
    total[community[i]] += static_cast<double>(ig.adj[i].size());
    for (std::uint32_t j : ig.adj[i]) {
      if (community[i] == community[j]) inside[community[i]] += 1.0;
    }
  }
  double q = 0.0;
  for (const auto& [c, t] : total) {
    const double in = inside.contains(c) ? inside.at(c) : 0.0;
    q += in / two_m - (t / two_m) * (t / two_m);
  }
  return q;
}

Partition modularity_louvain(const Graph& g, Rng& rng) {
  if (g.num_edges() == 0) throw std::invalid_argument("modularity is undefined for an edgeless graph");
  const double two_m = 2.0 * static_cast<double>(g.num_edges());

  WeightedGraph level = from_graph(g);
  // membership[i]: community of original node i in the current level.
  std::vector<std::uint32_t> membership(g.num_nodes());
  std::iota(membership.begin(), membership.end(), 0u);

  while (true) {
    std::vector<std::uint32_t> comm(level.size());
    std::iota(comm.begin(), comm.end(), 0u);
    if (!local_moves(level, comm, two_m, rng)) break;
    const std::uint32_t k = compact(comm);
    for (auto& m : membership) m = comm[m];
    if (k == level.size()) break;
    level = aggregate_communities(level, comm, k);
  }

  Partition p;
  p.community = std::move(membership);
  compact(p.community);
  p.modularity = modularity(g, p.community);
  return p;
}

}  // namespace netrep
