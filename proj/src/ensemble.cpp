#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "netrep/metrics.hpp"

namespace netrep {

double quantile(std::vector<double> values, double q) {
  if (values.empty()) throw std::invalid_argument("quantile of an empty sample");
  std::sort(values.begin(), values.end());
  const double pos = q * static_cast<double>(values.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, values.size() - 1);
  return values[lo] + (pos - static_cast<double>(lo)) * (values[hi] - values[lo]);
}

const MetricSummary& EnsembleSummary::at(const std::string& name) const {
  for (const auto& m : metrics) {
    if (m.name == name) return m;
  }
  throw std::out_of_range("no metric named " + name);
}

EnsembleSummary compare_ensemble(const MetricsReport& original, const std::vector<MetricsReport>& replicas) {
  if (replicas.empty()) throw std::invalid_argument("ensemble comparison needs at least one replica");
  EnsembleSummary summary;
  summary.replica_count = replicas.size();

  std::vector<std::vector<std::pair<std::string, std::optional<double>>>> rows;
  rows.reserve(replicas.size());
  for (const auto& r : replicas) rows.push_back(scalar_metrics(r));

  const auto base = scalar_metrics(original);
  for (std::size_t k = 0; k < base.size(); ++k) {
    MetricSummary m;
    m.name = base[k].first;
    m.original = base[k].second;
    m.normalized = m.original.has_value() && *m.original != 0.0;
    for (const auto& row : rows) {
      if (!row[k].second) continue;
      m.values.push_back(m.normalized ? *row[k].second / *m.original : *row[k].second);
    }
    m.count = m.values.size();
    if (!m.values.empty()) {
      std::sort(m.values.begin(), m.values.end());
      m.median = quantile(m.values, 0.5);
      m.q1 = quantile(m.values, 0.25);
      m.q3 = quantile(m.values, 0.75);
      const double iqr = m.q3 - m.q1;
      const double lo_fence = m.q1 - 1.5 * iqr;
      const double hi_fence = m.q3 + 1.5 * iqr;
      m.lo_whisker = *std::lower_bound(m.values.begin(), m.values.end(), lo_fence);
      m.hi_whisker = *std::prev(std::upper_bound(m.values.begin(), m.values.end(), hi_fence));
    }
    summary.metrics.push_back(std::move(m));
  }
  return summary;
}

}  // namespace netrep
