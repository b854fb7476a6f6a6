#pragma once

#include <cstddef>
#include <vector>

#include "netrep/coarsening.hpp"
#include "netrep/graph.hpp"

namespace netrep {

/// Bookkeeping from one interpolation, mostly for tests and logs.
struct InterpolationStats {
  std::size_t reused_aggregates = 0;
  std::size_t new_aggregates = 0;
  std::size_t reused_coarse_edges = 0;
  // One entry per new coarse edge: resampled pre-image size and the number of
  // distinct fine edges that survived the matching.
  std::vector<std::size_t> requested_multiplicity;
  std::vector<std::size_t> materialized_multiplicity;
};

/// Projects an edited coarse graph back onto the finer level.
///
/// Coarse nodes and edges still present in `proj` are expanded verbatim. A
/// new coarse node becomes a relabelled copy (members and internal wiring) of
/// the aggregate of a random surviving coarse node. A new coarse edge copies
/// the pre-image size l of a random surviving coarse edge and joins l
/// endpoints sampled with replacement from each side by a random matching;
/// repeated pairs are dropped.
///
/// Throws std::invalid_argument("no template for resampling") when a new node
/// needs a template and the projection has no aggregates at all.
Graph interpolate(const Graph& coarse_edited, const Projection& proj, Rng& rng, InterpolationStats* stats = nullptr);

}  // namespace netrep
