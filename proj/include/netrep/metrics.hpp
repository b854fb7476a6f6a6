#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "netrep/graph.hpp"

namespace netrep {

/// Structural statistics of one network.
///
/// Counts, degree statistics, clustering and modularity describe the whole
/// graph. Distance and centrality metrics are taken over the largest
/// component; `distances_on_largest_component` is set when that differs from
/// the whole graph. Values that are undefined for the input are empty.
struct MetricsReport {
  std::size_t num_nodes = 0;
  std::size_t num_edges = 0;
  std::size_t num_components = 0;
  std::size_t largest_component_size = 0;
  bool distances_on_largest_component = false;

  double avg_degree = 0.0;
  double clustering = 0.0;
  double avg_local_clustering = 0.0;
  std::optional<double> modularity;
  double avg_betweenness = 0.0;
  // Empty when power iteration does not converge.
  std::optional<double> avg_eigenvector_centrality;
  double mean_eccentricity = 0.0;
  double avg_distance = 0.0;
  double harmonic_avg_distance = 0.0;
  std::optional<double> powerlaw_exponent;
  std::optional<double> newman_assortativity;
  double s_metric = 0.0;
  // degree_survival[k] = fraction of nodes with degree >= k.
  std::vector<double> degree_survival;
};

/// Global transitivity: 3 * triangles / connected triples (0 without triples).
double clustering(const Graph& g);
/// Mean of local clustering coefficients; nodes of degree < 2 contribute 0.
double avg_local_clustering(const Graph& g);

struct Partition {
  // community[i] labels g.node_at(i).
  std::vector<std::uint32_t> community;
  double modularity = 0.0;
};

/// Newman-Girvan modularity of a labelling indexed like g.node_ids().
/// Throws std::invalid_argument on an edgeless graph.
double modularity(const Graph& g, const std::vector<std::uint32_t>& community);

/// Louvain local moving plus aggregation. Throws std::invalid_argument on an
/// edgeless graph.
Partition modularity_louvain(const Graph& g, Rng& rng);

/// Per-node betweenness normalized by (n-1)(n-2)/2, indexed like node_ids().
std::vector<double> betweenness(const Graph& g);
/// Power iteration on A + I with L2 normalisation; stops once the max-norm
/// change drops below 1e-8. Throws std::runtime_error after 1000 iterations.
std::vector<double> eigenvector_centrality(const Graph& g);

double betweenness_avg(const Graph& g);
double eigenvector_centrality_avg(const Graph& g);
double mean_eccentricity(const Graph& g);
double avg_distance(const Graph& g);
/// C(n,2) / sum over pairs of 1/d.
double harmonic_avg_distance(const Graph& g);

/// Pearson correlation of degrees at the two ends of every edge, both
/// orientations. Empty when the degree variance at edge ends is zero.
std::optional<double> newman_assortativity(const Graph& g);

double s_metric(const Graph& g);

/// Discrete maximum-likelihood exponent 1 + N / sum ln(d / (d_min - 0.5)).
/// d_min is the candidate degree (with at least 10 nodes at or above it)
/// minimising the Kolmogorov-Smirnov distance between the empirical and
/// fitted tail. Throws std::invalid_argument with fewer than 10 nodes of
/// positive degree or when all degrees are equal.
double powerlaw_exponent(const Graph& g);

/// Exponent for a fixed d_min over degrees >= d_min.
double powerlaw_exponent_fixed(const std::vector<std::size_t>& degrees, std::size_t d_min);

std::vector<double> degree_survival(const Graph& g);

/// Everything above. `rng` drives Louvain only.
MetricsReport compute_metrics(const Graph& g, Rng& rng);

/// Scalar metrics by name, in a fixed order.
std::vector<std::pair<std::string, std::optional<double>>> scalar_metrics(const MetricsReport& r);

/// Per-metric distribution of replica values normalised by the original.
struct MetricSummary {
  std::string name;
  std::optional<double> original;
  // False when the original is zero or undefined; values are then raw.
  bool normalized = true;
  std::vector<double> values;
  // Replicas contributing a defined value.
  std::size_t count = 0;
  double median = 0.0;
  double q1 = 0.0;
  double q3 = 0.0;
  double lo_whisker = 0.0;
  double hi_whisker = 0.0;
};

struct EnsembleSummary {
  std::size_t replica_count = 0;
  std::vector<MetricSummary> metrics;

  const MetricSummary& at(const std::string& name) const;
};

/// Quantile with linear interpolation between order statistics.
double quantile(std::vector<double> values, double q);

/// Requires at least one replica. Replicas for which a metric is undefined
/// are left out of that metric's distribution.
EnsembleSummary compare_ensemble(const MetricsReport& original, const std::vector<MetricsReport>& replicas);

}  // namespace netrep
