#include "netrep/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace netrep {
namespace {

std::size_t common_count(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) {
  std::size_t count = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++count, ++i, ++j;
    }
  }
  return count;
}

// Single all-sources BFS sweep shared by the distance metrics.
struct PathStats {
  std::vector<double> betweenness;  // normalised
  std::vector<int> eccentricity;
  double distance_sum = 0.0;
  double inverse_distance_sum = 0.0;
};

PathStats path_stats(const IndexedGraph& ig) {
  const std::size_t n = ig.size();
  PathStats out;
  out.betweenness.assign(n, 0.0);
  out.eccentricity.assign(n, 0);

  std::vector<int> dist(n);
  std::vector<double> sigma(n);
  std::vector<double> delta(n);
  std::vector<std::uint32_t> order;
  order.reserve(n);
  for (std::uint32_t s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), -1);
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), 0.0);
    order.clear();
    dist[s] = 0;
    sigma[s] = 1.0;
    order.push_back(s);
    for (std::size_t head = 0; head < order.size(); ++head) {
      const std::uint32_t x = order[head];
      for (std::uint32_t y : ig.adj[x]) {
        if (dist[y] < 0) {
          dist[y] = dist[x] + 1;
          order.push_back(y);
        }
        if (dist[y] == dist[x] + 1) sigma[y] += sigma[x];
      }
    }
    for (std::size_t k = 1; k < order.size(); ++k) {
      const std::uint32_t t = order[k];
      if (t > s) {
        out.distance_sum += dist[t];
        out.inverse_distance_sum += 1.0 / dist[t];
      }
    }
    out.eccentricity[s] = dist[order.back()];
    for (std::size_t k = order.size(); k-- > 1;) {
      const std::uint32_t w = order[k];
      for (std::uint32_t v : ig.adj[w]) {
        if (dist[v] == dist[w] - 1) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      }
      out.betweenness[w] += delta[w];
    }
  }
  // Each unordered pair was visited from both ends.
  const double nd = static_cast<double>(n);
  const double pairs = (nd - 1.0) * (nd - 2.0) / 2.0;
  for (double& b : out.betweenness) b = pairs > 0 ? b / 2.0 / pairs : 0.0;
  return out;
}

PathStats largest_component_paths(const Graph& g) { return path_stats(index_graph(largest_component(g))); }

double pair_count(std::size_t n) { return static_cast<double>(n) * static_cast<double>(n - 1) / 2.0; }

std::vector<std::size_t> positive_degrees(const Graph& g) {
  std::vector<std::size_t> degrees;
  for (NodeId id : g.node_ids()) {
    if (const std::size_t d = g.degree(id); d > 0) degrees.push_back(d);
  }
  return degrees;
}

constexpr std::size_t kMinTail = 10;

double powerlaw_ks(const std::vector<std::size_t>& sorted_degrees, std::size_t d_min, double alpha) {
  auto first = std::lower_bound(sorted_degrees.begin(), sorted_degrees.end(), d_min);
  const double tail = static_cast<double>(sorted_degrees.end() - first);
  const std::size_t d_max = sorted_degrees.back();
  double worst = 0.0;
  auto it = first;
  for (std::size_t x = d_min; x <= d_max + 1; ++x) {
    it = std::lower_bound(it, sorted_degrees.end(), x);
    const double empirical = static_cast<double>(sorted_degrees.end() - it) / tail;
    const double fitted =
        std::pow((static_cast<double>(x) - 0.5) / (static_cast<double>(d_min) - 0.5), 1.0 - alpha);
    worst = std::max(worst, std::abs(empirical - fitted));
  }
  return worst;
}

}  // namespace

double clustering(const Graph& g) {
  const IndexedGraph ig = index_graph(g);
  double closed = 0.0;
  double triples = 0.0;
  for (std::uint32_t u = 0; u < ig.size(); ++u) {
    const double d = static_cast<double>(ig.adj[u].size());
    triples += d * (d - 1.0) / 2.0;
    for (std::uint32_t v : ig.adj[u]) {
      if (v > u) closed += static_cast<double>(common_count(ig.adj[u], ig.adj[v]));
    }
  }
  // closed counts each triangle once per edge, i.e. 3 * triangles.
  return triples > 0 ? closed / triples : 0.0;
}

double avg_local_clustering(const Graph& g) {
  const IndexedGraph ig = index_graph(g);
  if (ig.size() == 0) return 0.0;
  double total = 0.0;
  for (std::uint32_t u = 0; u < ig.size(); ++u) {
    const double d = static_cast<double>(ig.adj[u].size());
    if (d < 2) continue;
    double links = 0.0;
    for (std::uint32_t v : ig.adj[u]) links += static_cast<double>(common_count(ig.adj[u], ig.adj[v]));
    total += (links / 2.0) / (d * (d - 1.0) / 2.0);
  }
  return total / static_cast<double>(ig.size());
}

std::vector<double> betweenness(const Graph& g) { return path_stats(index_graph(g)).betweenness; }

std::vector<double> eigenvector_centrality(const Graph& g) {
  const IndexedGraph ig = index_graph(g);
  const std::size_t n = ig.size();
  if (n == 0) return {};
  constexpr int kMaxIterations = 1000;
  constexpr double kTolerance = 1e-8;
  std::vector<double> x(n, 1.0 / std::sqrt(static_cast<double>(n)));
  std::vector<double> next(n);
  for (int iter = 1; iter <= kMaxIterations; ++iter) {
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      double sum = x[i];
      for (std::uint32_t j : ig.adj[i]) sum += x[j];
      next[i] = sum;
      norm += sum * sum;
    }
    norm = std::sqrt(norm);
    double change = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      next[i] /= norm;
      change = std::max(change, std::abs(next[i] - x[i]));
    }
    x.swap(next);
    if (change < kTolerance) return x;
  }
  throw std::runtime_error("eigenvector centrality did not converge after " + std::to_string(kMaxIterations) +
                           " iterations");
}

double betweenness_avg(const Graph& g) {
  const auto b = largest_component_paths(g).betweenness;
  if (b.empty()) return 0.0;
  double total = 0.0;
  for (double v : b) total += v;
  return total / static_cast<double>(b.size());
}

double eigenvector_centrality_avg(const Graph& g) {
  const auto x = eigenvector_centrality(largest_component(g));
  if (x.empty()) return 0.0;
  double total = 0.0;
  for (double v : x) total += v;
  return total / static_cast<double>(x.size());
}

double mean_eccentricity(const Graph& g) {
  const auto ecc = largest_component_paths(g).eccentricity;
  if (ecc.empty()) return 0.0;
  double total = 0.0;
  for (int e : ecc) total += e;
  return total / static_cast<double>(ecc.size());
}

double avg_distance(const Graph& g) {
  const PathStats ps = largest_component_paths(g);
  const std::size_t n = ps.eccentricity.size();
  return n < 2 ? 0.0 : ps.distance_sum / pair_count(n);
}

double harmonic_avg_distance(const Graph& g) {
  const PathStats ps = largest_component_paths(g);
  const std::size_t n = ps.eccentricity.size();
  return n < 2 ? 0.0 : pair_count(n) / ps.inverse_distance_sum;
}

std::optional<double> newman_assortativity(const Graph& g) {
  if (g.num_edges() == 0) return std::nullopt;
  // Exact integer moments; both orientations of an edge contribute equally.
  __int128 sx = 0;
  __int128 sxx = 0;
  __int128 sxy = 0;
  for (const Edge& e : g.edges()) {
    const __int128 a = static_cast<__int128>(g.degree(e.u));
    const __int128 b = static_cast<__int128>(g.degree(e.v));
    sx += a + b;
    sxx += a * a + b * b;
    sxy += 2 * a * b;
  }
  const __int128 m = 2 * static_cast<__int128>(g.num_edges());
  const __int128 var = m * sxx - sx * sx;
  if (var == 0) return std::nullopt;
  const __int128 cov = m * sxy - sx * sx;
  return static_cast<double>(cov) / static_cast<double>(var);
}

double s_metric(const Graph& g) {
  double total = 0.0;
  for (const Edge& e : g.edges()) total += static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v));
  return total;
}

double powerlaw_exponent_fixed(const std::vector<std::size_t>& degrees, std::size_t d_min) {
  if (d_min < 1) throw std::invalid_argument("d_min must be at least 1");
  double log_sum = 0.0;
  std::size_t count = 0;
  const double shift = static_cast<double>(d_min) - 0.5;
  for (std::size_t d : degrees) {
    if (d < d_min) continue;
    log_sum += std::log(static_cast<double>(d) / shift);
    ++count;
  }
  if (count == 0) throw std::invalid_argument("no degrees at or above d_min");
  return 1.0 + static_cast<double>(count) / log_sum;
}

double powerlaw_exponent(const Graph& g) {
  std::vector<std::size_t> degrees = positive_degrees(g);
  if (degrees.size() < kMinTail) throw std::invalid_argument("fewer than 10 nodes with positive degree");
  std::sort(degrees.begin(), degrees.end());
  if (degrees.front() == degrees.back()) throw std::invalid_argument("degenerate degree sequence");

  double best_alpha = 0.0;
  double best_ks = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    if (i > 0 && degrees[i] == degrees[i - 1]) continue;
    if (degrees.size() - i < kMinTail) break;
    const double alpha = powerlaw_exponent_fixed(degrees, degrees[i]);
    const double ks = powerlaw_ks(degrees, degrees[i], alpha);
    if (ks < best_ks) best_ks = ks, best_alpha = alpha;
  }
  return best_alpha;
}

std::vector<double> degree_survival(const Graph& g) {
  if (g.empty()) return {};
  std::size_t max_degree = 0;
  for (NodeId id : g.node_ids()) max_degree = std::max(max_degree, g.degree(id));
  std::vector<double> counts(max_degree + 2, 0.0);
  for (NodeId id : g.node_ids()) counts[g.degree(id)] += 1.0;
  std::vector<double> survival(max_degree + 1);
  double at_least = 0.0;
  for (std::size_t k = max_degree + 1; k-- > 0;) {
    at_least += counts[k];
    survival[k] = at_least / static_cast<double>(g.num_nodes());
  }
  return survival;
}

MetricsReport compute_metrics(const Graph& g, Rng& rng) {
  MetricsReport r;
  r.num_nodes = g.num_nodes();
  r.num_edges = g.num_edges();
  if (g.empty()) return r;

  const auto components = connected_components(g);
  r.num_components = components.size();
  r.largest_component_size = components.front().size();
  r.distances_on_largest_component = components.size() > 1;
  r.avg_degree = 2.0 * static_cast<double>(r.num_edges) / static_cast<double>(r.num_nodes);
  r.clustering = clustering(g);
  r.avg_local_clustering = avg_local_clustering(g);
  if (r.num_edges > 0) r.modularity = modularity_louvain(g, rng).modularity;
  r.s_metric = s_metric(g);
  r.newman_assortativity = newman_assortativity(g);
  try {
    r.powerlaw_exponent = powerlaw_exponent(g);
  } catch (const std::invalid_argument&) {
    r.powerlaw_exponent.reset();
  }
  r.degree_survival = degree_survival(g);

  const Graph lcc = r.distances_on_largest_component ? induced_subgraph(g, components.front()) : g;
  const PathStats ps = path_stats(index_graph(lcc));
  const std::size_t n = ps.eccentricity.size();
  double b_total = 0.0;
  double e_total = 0.0;
  for (std::size_t i = 0; i < n; ++i) b_total += ps.betweenness[i], e_total += ps.eccentricity[i];
  r.avg_betweenness = b_total / static_cast<double>(n);
  r.mean_eccentricity = e_total / static_cast<double>(n);
  if (n >= 2) {
    r.avg_distance = ps.distance_sum / pair_count(n);
    r.harmonic_avg_distance = pair_count(n) / ps.inverse_distance_sum;
  }
  try {
    double x_total = 0.0;
    for (double x : eigenvector_centrality(lcc)) x_total += x;
    r.avg_eigenvector_centrality = x_total / static_cast<double>(n);
  } catch (const std::runtime_error&) {
    r.avg_eigenvector_centrality.reset();
  }
  return r;
}

std::vector<std::pair<std::string, std::optional<double>>> scalar_metrics(const MetricsReport& r) {
  return {
      {"num_nodes", static_cast<double>(r.num_nodes)},
      {"num_edges", static_cast<double>(r.num_edges)},
      {"num_components", static_cast<double>(r.num_components)},
      {"avg_degree", r.avg_degree},
      {"clustering", r.clustering},
      {"avg_local_clustering", r.avg_local_clustering},
      {"modularity", r.modularity},
      {"avg_betweenness", r.avg_betweenness},
      {"avg_eigenvector_centrality", r.avg_eigenvector_centrality},
      {"mean_eccentricity", r.mean_eccentricity},
      {"avg_distance", r.avg_distance},
      {"harmonic_avg_distance", r.harmonic_avg_distance},
      {"powerlaw_exponent", r.powerlaw_exponent},
      {"newman_assortativity", r.newman_assortativity},
      {"s_metric", r.s_metric},
  };
}

}  // namespace netrep
