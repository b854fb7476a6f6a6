#include "netrep/epidemics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace netrep {
namespace {

enum class State : std::uint8_t { Susceptible, Exposed, Infectious, Recovered };

int draw_duration(int mean, int jitter, Rng& rng) {
  if (jitter == 0) return mean;
  std::uniform_int_distribution<int> pick(mean - jitter, mean + jitter);
  return pick(rng);
}

}  // namespace

void SeirParams::validate() const {
  if (!(transmission_prob_per_day >= 0.0 && transmission_prob_per_day <= 1.0)) {
    throw std::invalid_argument("transmission_prob_per_day must lie in [0, 1]");
  }
  if (latent_jitter < 0 || latent_mean - latent_jitter < 1) {
    throw std::invalid_argument("latent period must be at least one day");
  }
  if (infectious_jitter < 0 || infectious_mean - infectious_jitter < 1) {
    throw std::invalid_argument("infectious period must be at least one day");
  }
  if (horizon_days < 1) throw std::invalid_argument("horizon_days must be positive");
}

std::vector<std::uint32_t> run_seir(const Graph& g, const SeirParams& params, Rng& rng) {
  params.validate();
  if (g.empty()) throw std::invalid_argument("epidemic needs a non-empty graph");
  const IndexedGraph ig = index_graph(g);
  const std::size_t n = ig.size();
  std::unordered_map<NodeId, std::uint32_t> local;
  for (std::uint32_t i = 0; i < n; ++i) local.emplace(ig.ids[i], i);

  std::vector<State> state(n, State::Susceptible);
  std::vector<int> becomes_infectious(n, 0);
  std::vector<int> recovers(n, 0);
  std::vector<std::uint32_t> incidence(static_cast<std::size_t>(params.horizon_days), 0);

  auto expose = [&](std::uint32_t i, int day) {
    state[i] = State::Exposed;
    becomes_infectious[i] = day + draw_duration(params.latent_mean, params.latent_jitter, rng);
    recovers[i] = becomes_infectious[i] + draw_duration(params.infectious_mean, params.infectious_jitter, rng);
    ++incidence[static_cast<std::size_t>(day)];
  };

  if (!params.initial_nodes.empty()) {
    for (NodeId id : params.initial_nodes) {
      auto it = local.find(id);
      if (it == local.end()) throw std::invalid_argument("initial node not in graph: " + std::to_string(id));
      if (state[it->second] == State::Susceptible) expose(it->second, 0);
    }
  } else {
    if (params.initial_count > n) throw std::invalid_argument("more initial cases than nodes");
    std::vector<std::uint32_t> pool(n);
    for (std::uint32_t i = 0; i < n; ++i) pool[i] = i;
    for (std::size_t k = 0; k < params.initial_count; ++k) {
      std::uniform_int_distribution<std::size_t> pick(k, n - 1);
      std::swap(pool[k], pool[pick(rng)]);
      expose(pool[k], 0);
    }
  }

  std::bernoulli_distribution transmit(params.transmission_prob_per_day);
  std::vector<std::uint32_t> infectious;
  for (int day = 1; day < params.horizon_days; ++day) {
    // Infectious set as of the end of the previous day.
    infectious.clear();
    for (std::uint32_t i = 0; i < n; ++i) {
      if (state[i] == State::Infectious) infectious.push_back(i);
    }
    for (std::uint32_t i : infectious) {
      for (std::uint32_t j : ig.adj[i]) {
        if (state[j] == State::Susceptible && transmit(rng)) expose(j, day);
      }
    }
    for (std::uint32_t i = 0; i < n; ++i) {
      if (state[i] == State::Exposed && day >= becomes_infectious[i]) state[i] = State::Infectious;
      if (state[i] == State::Infectious && day >= recovers[i]) state[i] = State::Recovered;
    }
  }
  return incidence;
}

std::size_t IncidenceStats::peak_day() const {
  if (mean.empty()) return 0;
  return static_cast<std::size_t>(std::max_element(mean.begin(), mean.end()) - mean.begin());
}

double IncidenceStats::peak_height() const { return mean.empty() ? 0.0 : mean[peak_day()]; }

IncidenceStats epidemic_ensemble(const std::vector<Graph>& graphs, const SeirParams& params,
                                 std::size_t runs_per_graph, std::uint64_t base_seed) {
  if (graphs.empty()) throw std::invalid_argument("epidemic ensemble needs at least one graph");
  if (runs_per_graph == 0) throw std::invalid_argument("runs_per_graph must be positive");
  const auto days = static_cast<std::size_t>(params.horizon_days);
  std::vector<double> sum(days, 0.0);
  std::vector<double> sum_sq(days, 0.0);
  std::size_t runs = 0;
  for (std::size_t gi = 0; gi < graphs.size(); ++gi) {
    for (std::size_t r = 0; r < runs_per_graph; ++r) {
      Rng rng(base_seed + gi * runs_per_graph + r);
      const auto series = run_seir(graphs[gi], params, rng);
      for (std::size_t d = 0; d < days; ++d) {
        const double x = series[d];
        sum[d] += x;
        sum_sq[d] += x * x;
      }
      ++runs;
    }
  }
  IncidenceStats stats;
  stats.runs = runs;
  stats.mean.resize(days);
  stats.stddev.resize(days);
  const double count = static_cast<double>(runs);
  for (std::size_t d = 0; d < days; ++d) {
    stats.mean[d] = sum[d] / count;
    stats.stddev[d] = std::sqrt(std::max(0.0, sum_sq[d] / count - stats.mean[d] * stats.mean[d]));
  }
  return stats;
}

}  // namespace netrep
