#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "netrep/graph.hpp"

namespace netrep {

// All generators label nodes 0..n-1 and are deterministic for a fixed rng state.

/// G(n, p) by geometric skipping over the pair sequence.
Graph erdos_renyi(std::size_t n, double p, Rng& rng);

/// Preferential attachment: an edgeless core of m nodes, then every new node
/// attaches to m distinct existing nodes chosen proportionally to degree
/// (the first arrival links to the whole core). |E| = (n - m) * m.
Graph barabasi_albert(std::size_t n, std::size_t m, Rng& rng);

/// Ring lattice with k/2 neighbours on each side; every lattice edge has its
/// far endpoint moved to a uniform node with probability p, skipping moves
/// that would create a self-loop or duplicate. k must be even and < n.
Graph watts_strogatz(std::size_t n, std::size_t k, double p, Rng& rng);

/// Independent edges with probability min(1, d_i d_j / sum d), no self-loops.
/// Node i carries weight degrees[i].
Graph chung_lu(const std::vector<double>& degrees, Rng& rng);

struct RewireResult {
  Graph graph;
  std::size_t requested = 0;
  std::size_t completed = 0;
};

/// Moves one endpoint of round(fraction * |E|) distinct edges to a uniform
/// node, keeping the graph simple. |E| is preserved exactly.
RewireResult edge_rewire(const Graph& g, double fraction, Rng& rng, int loop_safety_factor = 10);

/// Degree-preserving double swaps {x1,x2},{y1,y2} -> {x1,y1},{x2,y2}. The
/// quota is ceil(fraction * |E| / 2) swaps, so about `fraction` of the edges
/// are replaced. With `keep_connected`, swaps that disconnect the graph are
/// undone. Stops early after loop_safety_factor * quota attempts; `warning`
/// is then non-empty. Throws std::invalid_argument without two disjoint edges.
struct SwapResult {
  Graph graph;
  std::size_t requested = 0;
  std::size_t completed = 0;
  std::string warning;
};
SwapResult edge_swap(const Graph& g, double fraction, Rng& rng, bool keep_connected = true,
                     int loop_safety_factor = 10);

// Parameters matched to an existing graph.
Graph erdos_renyi_like(const Graph& g, Rng& rng);
/// m = max(1, round(|E| / n)).
Graph barabasi_albert_like(const Graph& g, Rng& rng);
/// k = 4, rewiring probability equal to the density of g.
Graph watts_strogatz_like(const Graph& g, Rng& rng);
Graph chung_lu_like(const Graph& g, Rng& rng);

}  // namespace netrep
