#include "netrep/vcycle.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "netrep/coarsening.hpp"
#include "netrep/interpolation.hpp"

namespace netrep {

Graph keep_connected(const Graph& g, Rng& rng) {
  Graph out = largest_component(g);
  repair_connectivity(out, rng);
  return out;
}

Graph revise_graph(const Graph& g, int level, const EditConfig& cfg, const AdjustHook& adjust, Rng& rng,
                   std::vector<EditLog>* logs, int* depth) {
  int local_depth = 0;
  int& d = depth ? *depth : local_depth;
  d = std::max(d, level + 1);

  EditLog log;
  if (!should_coarsen(g, level, cfg)) {
    Graph edited = edit_edges_and_nodes(g, level, cfg, rng, &log);
    if (logs) logs->push_back(std::move(log));
    return edited;
  }

  CoarseLevel coarse = coarsen(g);
  const Graph revised_coarse = revise_graph(coarse.coarse, level + 1, cfg, adjust, rng, logs, depth);
  const Graph fine = interpolate(revised_coarse, coarse.projection, rng);
  Graph edited = edit_edges_and_nodes(fine, level, cfg, rng, &log);
  if (logs) logs->push_back(std::move(log));
  if (!adjust) return edited;

  Graph adjusted = adjust(edited, rng);
  try {
    adjusted.check_invariants();
  } catch (const std::logic_error&) {
    throw std::runtime_error("adjustment produced invalid graph");
  }
  return adjusted;
}

ReplicaReport replicate(const Graph& g, const EditConfig& cfg, std::uint64_t seed, const AdjustHook& adjust) {
  const auto start = std::chrono::steady_clock::now();
  ReplicaReport report;
  report.rng_seed = seed;
  Rng rng(seed);
  int depth = 0;
  report.replica = revise_graph(g, 0, cfg, adjust, rng, &report.edit_logs, &depth);
  report.hierarchy_depth = depth;
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<ReplicaReport> generate_ensemble(const Graph& g, const EditConfig& cfg, std::size_t count,
                                             std::uint64_t base_seed, unsigned jobs, const AdjustHook& adjust) {
  if (count == 0) throw std::invalid_argument("replica count must be positive");
  cfg.validate();
  if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, count));

  std::vector<ReplicaReport> out(count);
  if (jobs == 1) {
    for (std::size_t i = 0; i < count; ++i) out[i] = replicate(g, cfg, base_seed + i, adjust);
    return out;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        out[i] = replicate(g, cfg, base_seed + i, adjust);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next = count;
      }
    }
  };
  std::vector<std::jthread> pool;
  pool.reserve(jobs);
  for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(worker);
  pool.clear();
  if (failure) std::rethrow_exception(failure);
  return out;
}

std::vector<Graph> evolve(const Graph& g, const EditConfig& cfg, std::size_t steps, Rng& rng,
                          const AdjustHook& adjust) {
  if (steps == 0) throw std::invalid_argument("steps must be positive");
  std::vector<Graph> trajectory;
  trajectory.reserve(steps);
  const Graph* current = &g;
  for (std::size_t s = 0; s < steps; ++s) {
    trajectory.push_back(revise_graph(*current, 0, cfg, adjust, rng));
    current = &trajectory.back();
  }
  return trajectory;
}

}  // namespace netrep
