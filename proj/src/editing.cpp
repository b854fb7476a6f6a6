#include "netrep/editing.hpp"

#include <algorithm>

namespace netrep {
namespace {

std::size_t draw_binomial(std::size_t trials, double p, Rng& rng) {
  p = std::clamp(p, 0.0, 1.0);
  if (trials == 0 || p == 0.0) return 0;
  std::binomial_distribution<std::size_t> dist(trials, p);
  return dist(rng);
}

std::size_t mutual_neighbors(const Graph& g, NodeId u, NodeId v) {
  auto nu = g.neighbors(u);
  auto nv = g.neighbors(v);
  if (nu.size() > nv.size()) std::swap(nu, nv), std::swap(u, v);
  std::size_t count = 0;
  for (NodeId x : nu) {
    if (x != v && g.has_edge(x, v)) ++count;
  }
  return count;
}

// New edges copy the annotation of a uniformly drawn existing edge, but only
// when the input carries edge annotations at all.
void resample_edge_annotation(Graph& g, const Edge& fresh, bool annotated, Rng& rng) {
  if (!annotated || g.num_edges() < 2) return;
  const Edge donor = random_edge(g, rng);
  if (donor == fresh) return;
  g.edge_attributes(fresh.u, fresh.v).annotation = g.edge_attributes(donor.u, donor.v).annotation;
}

void record(EditLog* log, EditOp op, NodeId a, NodeId b) {
  if (log) log->records.push_back(EditRecord{op, a, b});
}

}  // namespace

const char* to_string(EditOp op) {
  switch (op) {
    case EditOp::DeleteEdge:
      return "delete_edge";
    case EditOp::RepairEdge:
      return "repair_edge";
    case EditOp::InsertEdge:
      return "insert_edge";
    case EditOp::InsertNode:
      return "insert_node";
    case EditOp::DeleteNode:
      return "delete_node";
  }
  return "unknown";
}

bool EditLog::under_achieved() const {
  for (const EditGoal* goal : {&edge_deletions, &edge_insertions, &node_insertions, &node_deletions}) {
    if (goal->achieved < goal->requested) return true;
  }
  return false;
}

std::size_t delete_edges(Graph& g, std::size_t goal, double avg_degree, const EditConfig& cfg, Rng& rng,
                         EditLog* log) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t max_attempts = goal * static_cast<std::size_t>(cfg.loop_safety_factor);
  std::size_t removed = 0;
  for (std::size_t attempt = 0; removed < goal && attempt < max_attempts && g.num_edges() > 0; ++attempt) {
    const Edge e = random_edge(g, rng);
    if (cfg.deferential_detachment) {
      const double product = static_cast<double>(g.degree(e.u)) * static_cast<double>(g.degree(e.v));
      if (unit(rng) > avg_degree / product) continue;
    }
    if (cfg.mutual_neighbor_protection) {
      const std::size_t mutual = mutual_neighbors(g, e.u, e.v);
      if (mutual > 0 && unit(rng) > 0.5 / static_cast<double>(mutual)) continue;
    }
    g.remove_edge(e.u, e.v);
    record(log, EditOp::DeleteEdge, e.u, e.v);
    ++removed;
  }
  return removed;
}

std::size_t repair_connectivity(Graph& g, Rng& rng, EditLog* log) {
  const auto components = connected_components(g);
  if (components.size() <= 1) return 0;
  const auto& largest = components.front();
  std::uniform_int_distribution<std::size_t> pick_main(0, largest.size() - 1);
  std::size_t added = 0;
  for (std::size_t c = 1; c < components.size(); ++c) {
    std::uniform_int_distribution<std::size_t> pick(0, components[c].size() - 1);
    const NodeId a = components[c][pick(rng)];
    const NodeId b = largest[pick_main(rng)];
    if (g.add_edge(a, b)) {
      record(log, EditOp::RepairEdge, a, b);
      ++added;
    }
  }
  if (log) log->repair_edges += added;
  return added;
}

Graph edit_edges_and_nodes(const Graph& input, int level, const EditConfig& cfg, Rng& rng, EditLog* log) {
  EditLog local;
  EditLog& out_log = log ? *log : local;
  out_log.level = level;

  const std::size_t num_edges = input.num_edges();
  const std::size_t num_nodes = input.num_nodes();
  const double edge_rate = cfg.edge_rate(level);
  const double node_rate = cfg.node_rate(level);
  const std::size_t edges_to_delete = draw_binomial(num_edges, edge_rate, rng);
  const std::size_t edges_to_add = draw_binomial(num_edges, edge_rate * (1.0 + cfg.edge_growth(level)), rng);
  const std::size_t nodes_to_delete = draw_binomial(num_nodes, node_rate, rng);
  const std::size_t nodes_to_add = draw_binomial(num_nodes, node_rate * (1.0 + cfg.node_growth(level)), rng);

  out_log.edge_deletions.requested = edges_to_delete;
  out_log.edge_insertions.requested = edges_to_add;
  out_log.node_deletions.requested = nodes_to_delete;
  out_log.node_insertions.requested = nodes_to_add;

  Graph g = input;
  if (edges_to_delete + edges_to_add + nodes_to_delete + nodes_to_add == 0) return g;

  const double avg_degree = num_nodes ? 2.0 * static_cast<double>(num_edges) / static_cast<double>(num_nodes) : 0.0;
  bool edges_annotated = false;
  for (std::size_t i = 0; i < g.num_edges() && !edges_annotated; ++i) {
    edges_annotated = g.edge_attributes_at(i).annotation.has_value();
  }
  SpathDistribution dist;
  if (edges_to_add + nodes_to_add > 0) dist = estimate_spath_distribution(g, cfg, rng);

  const auto factor = static_cast<std::size_t>(cfg.loop_safety_factor);
  out_log.edge_deletions.achieved = delete_edges(g, edges_to_delete, avg_degree, cfg, rng, &out_log);

  if (cfg.enforce_connectivity) repair_connectivity(g, rng, &out_log);

  for (std::size_t attempt = 0; out_log.edge_insertions.achieved < edges_to_add && attempt < factor * edges_to_add &&
                                !g.empty();
       ++attempt) {
    const NodeId u = random_node(g, rng);
    if (auto e = insert_edge_at_distance(g, u, dist, cfg, rng)) {
      resample_edge_annotation(g, *e, edges_annotated, rng);
      record(&out_log, EditOp::InsertEdge, e->u, e->v);
      ++out_log.edge_insertions.achieved;
    }
  }

  for (std::size_t i = 0; i < nodes_to_add; ++i) {
    if (g.empty()) {
      const NodeId u = g.add_node();
      record(&out_log, EditOp::InsertNode, u, u);
      ++out_log.node_insertions.achieved;
      continue;
    }
    const NodeId anchor = random_node(g, rng);
    const NodeId source = random_node(g, rng);
    const std::size_t target_degree = g.degree(source);
    NodeAttributes attrs;
    attrs.annotation = g.node_attributes(source).annotation;
    const NodeId u = g.add_node(std::move(attrs));
    record(&out_log, EditOp::InsertNode, u, source);
    ++out_log.node_insertions.achieved;
    if (target_degree == 0) continue;

    g.add_edge(u, anchor);
    resample_edge_annotation(g, Edge{u, anchor}, edges_annotated, rng);
    record(&out_log, EditOp::InsertEdge, u, anchor);
    const std::size_t max_attempts = factor * (target_degree - 1);
    for (std::size_t attempt = 0; g.degree(u) < target_degree && attempt < max_attempts; ++attempt) {
      if (auto e = insert_edge_at_distance(g, u, dist, cfg, rng)) {
        resample_edge_annotation(g, *e, edges_annotated, rng);
        record(&out_log, EditOp::InsertEdge, e->u, e->v);
      }
    }
  }

  for (std::size_t i = 0; i < nodes_to_delete && !g.empty(); ++i) {
    const NodeId victim = random_node(g, rng);
    g.remove_node(victim);
    record(&out_log, EditOp::DeleteNode, victim, victim);
    ++out_log.node_deletions.achieved;
  }
  return g;
}

}  // namespace netrep
