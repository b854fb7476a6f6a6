#include "netrep/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace netrep {
namespace {

Graph nodes_only(std::size_t n) {
  Graph g;
  for (std::size_t i = 0; i < n; ++i) g.add_node();
  return g;
}

// Number of failures before the next success of a Bernoulli(p) sequence.
std::size_t geometric_skip(double p, Rng& rng) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = 1.0 - unit(rng);  // (0, 1]
  return static_cast<std::size_t>(std::floor(std::log(r) / std::log1p(-p)));
}

}  // namespace

Graph erdos_renyi(std::size_t n, double p, Rng& rng) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  Graph g = nodes_only(n);
  if (p == 0.0) return g;
  if (p == 1.0) {
    for (NodeId v = 1; v < n; ++v) {
      for (NodeId w = 0; w < v; ++w) g.add_edge(w, v);
    }
    return g;
  }
  // Walk the pairs (w < v) in row order, jumping over non-edges.
  std::size_t v = 1;
  std::size_t w = 0;
  std::size_t skip = geometric_skip(p, rng);
  while (v < n) {
    w += skip;
    while (w >= v && v < n) w -= v, ++v;
    if (v < n) g.add_edge(static_cast<NodeId>(w), static_cast<NodeId>(v));
    skip = geometric_skip(p, rng) + 1;
  }
  return g;
}

Graph barabasi_albert(std::size_t n, std::size_t m, Rng& rng) {
  if (m < 1 || m >= n) throw std::invalid_argument("barabasi_albert needs 1 <= m < n");
  Graph g = nodes_only(n);
  std::vector<NodeId> targets(m);
  std::iota(targets.begin(), targets.end(), NodeId{0});
  // Every edge endpoint appears once, so uniform draws are degree-biased.
  std::vector<NodeId> endpoints;
  endpoints.reserve(2 * (n - m) * m);
  for (NodeId source = static_cast<NodeId>(m); source < n; ++source) {
    for (NodeId t : targets) {
      g.add_edge(source, t);
      endpoints.push_back(t);
      endpoints.push_back(source);
    }
    std::uniform_int_distribution<std::size_t> pick(0, endpoints.size() - 1);
    std::unordered_set<NodeId> chosen;
    targets.clear();
    while (targets.size() < m) {
      const NodeId t = endpoints[pick(rng)];
      if (chosen.insert(t).second) targets.push_back(t);
    }
  }
  return g;
}

Graph watts_strogatz(std::size_t n, std::size_t k, double p, Rng& rng) {
  if (k % 2 != 0 || k >= n) throw std::invalid_argument("watts_strogatz needs even k < n");
  if (!(p >= 0.0 && p <= 1.0)) throw std::invalid_argument("p must lie in [0, 1]");
  Graph g = nodes_only(n);
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) g.add_edge(static_cast<NodeId>(u), static_cast<NodeId>((u + j) % n));
  }
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::uniform_int_distribution<NodeId> pick(0, static_cast<NodeId>(n - 1));
  for (std::size_t j = 1; j <= k / 2; ++j) {
    for (std::size_t u = 0; u < n; ++u) {
      if (unit(rng) >= p) continue;
      const auto a = static_cast<NodeId>(u);
      const auto b = static_cast<NodeId>((u + j) % n);
      const NodeId w = pick(rng);
      if (w == a || g.has_edge(a, w) || g.degree(a) >= n - 1) continue;
      g.remove_edge(a, b);
      g.add_edge(a, w);
    }
  }
  return g;
}

Graph chung_lu(const std::vector<double>& degrees, Rng& rng) {
  const std::size_t n = degrees.size();
  for (double d : degrees) {
    if (!(d >= 0.0)) throw std::invalid_argument("expected degrees must be non-negative");
  }
  Graph g = nodes_only(n);
  const double total = std::accumulate(degrees.begin(), degrees.end(), 0.0);
  if (n < 2 || total <= 0.0) return g;

  std::vector<NodeId> order(n);
  std::iota(order.begin(), order.end(), NodeId{0});
  std::stable_sort(order.begin(), order.end(), [&](NodeId a, NodeId b) { return degrees[a] > degrees[b]; });
  auto weight = [&](std::size_t i) { return degrees[order[i]]; };

  // Weights are non-increasing along `order`, so the probability of u pairing
  // with later nodes only falls; skip geometrically under the current bound
  // and thin by the true probability.
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t u = 0; u + 1 < n; ++u) {
    std::size_t v = u + 1;
    double p = std::min(1.0, weight(u) * weight(v) / total);
    while (v < n && p > 0.0) {
      if (p < 1.0) v += geometric_skip(p, rng);
      if (v >= n) break;
      const double q = std::min(1.0, weight(u) * weight(v) / total);
      if (unit(rng) < q / p) g.add_edge(order[u], order[v]);
      p = q;
      ++v;
    }
  }
  return g;
}

RewireResult edge_rewire(const Graph& g, double fraction, Rng& rng, int loop_safety_factor) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw std::invalid_argument("fraction must lie in [0, 1]");
  RewireResult out{g, 0, 0};
  const std::size_t m = g.num_edges();
  out.requested = static_cast<std::size_t>(std::llround(fraction * static_cast<double>(m)));
  if (out.requested == 0) return out;

  std::vector<Edge> picked(g.edges().begin(), g.edges().end());
  std::shuffle(picked.begin(), picked.end(), rng);
  picked.resize(out.requested);
  std::bernoulli_distribution coin(0.5);
  for (Edge e : picked) {
    if (coin(rng)) std::swap(e.u, e.v);
    for (int attempt = 0; attempt < loop_safety_factor; ++attempt) {
      const NodeId w = random_node(out.graph, rng);
      if (w == e.u || out.graph.has_edge(e.u, w)) continue;
      const EdgeAttributes attrs = out.graph.edge_attributes(e.u, e.v);
      out.graph.remove_edge(e.u, e.v);
      out.graph.add_edge(e.u, w, attrs);
      ++out.completed;
      break;
    }
  }
  return out;
}

SwapResult edge_swap(const Graph& g, double fraction, Rng& rng, bool keep_connected, int loop_safety_factor) {
  if (!(fraction >= 0.0 && fraction <= 1.0)) throw std::invalid_argument("fraction must lie in [0, 1]");
  bool has_disjoint_pair = false;
  for (std::size_t i = 0; i < g.num_edges() && !has_disjoint_pair; ++i) {
    const Edge a = g.edge_at(i);
    for (std::size_t j = i + 1; j < g.num_edges(); ++j) {
      const Edge b = g.edge_at(j);
      if (a.u != b.u && a.u != b.v && a.v != b.u && a.v != b.v) {
        has_disjoint_pair = true;
        break;
      }
    }
  }
  if (!has_disjoint_pair) throw std::invalid_argument("edge swap needs two disjoint edges");

  SwapResult out{g, 0, 0, {}};
  out.requested = static_cast<std::size_t>(std::ceil(fraction * static_cast<double>(g.num_edges()) / 2.0));
  const bool check_connectivity = keep_connected && is_connected(g);
  std::bernoulli_distribution coin(0.5);
  const std::size_t max_attempts = out.requested * static_cast<std::size_t>(loop_safety_factor);
  for (std::size_t attempt = 0; out.completed < out.requested && attempt < max_attempts; ++attempt) {
    const Edge x = random_edge(out.graph, rng);
    Edge y = random_edge(out.graph, rng);
    if (coin(rng)) std::swap(y.u, y.v);
    if (x.u == y.u || x.u == y.v || x.v == y.u || x.v == y.v) continue;
    if (out.graph.has_edge(x.u, y.u) || out.graph.has_edge(x.v, y.v)) continue;
    const EdgeAttributes ax = out.graph.edge_attributes(x.u, x.v);
    const EdgeAttributes ay = out.graph.edge_attributes(y.u, y.v);
    out.graph.remove_edge(x.u, x.v);
    out.graph.remove_edge(y.u, y.v);
    out.graph.add_edge(x.u, y.u, ax);
    out.graph.add_edge(x.v, y.v, ay);
    if (check_connectivity && !is_connected(out.graph)) {
      out.graph.remove_edge(x.u, y.u);
      out.graph.remove_edge(x.v, y.v);
      out.graph.add_edge(x.u, x.v, ax);
      out.graph.add_edge(y.u, y.v, ay);
      continue;
    }
    ++out.completed;
  }
  if (out.completed < out.requested) {
    out.warning = "completed " + std::to_string(out.completed) + " of " + std::to_string(out.requested) + " swaps";
  }
  return out;
}

Graph erdos_renyi_like(const Graph& g, Rng& rng) { return erdos_renyi(g.num_nodes(), density(g), rng); }

Graph barabasi_albert_like(const Graph& g, Rng& rng) {
  const std::size_t n = g.num_nodes();
  const auto ratio = static_cast<std::size_t>(std::llround(static_cast<double>(g.num_edges()) / static_cast<double>(n)));
  return barabasi_albert(n, std::clamp<std::size_t>(ratio, 1, n - 1), rng);
}

Graph watts_strogatz_like(const Graph& g, Rng& rng) { return watts_strogatz(g.num_nodes(), 4, density(g), rng); }

Graph chung_lu_like(const Graph& g, Rng& rng) {
  std::vector<double> degrees;
  degrees.reserve(g.num_nodes());
  for (NodeId id : g.node_ids()) degrees.push_back(static_cast<double>(g.degree(id)));
  return chung_lu(degrees, rng);
}

}  // namespace netrep
