#include "netrep/interpolation.hpp"

#include <algorithm>
#include <stdexcept>

namespace netrep {
namespace {

template <typename T>
const T& pick_uniform(const std::vector<T>& items, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, items.size() - 1);
  return items[pick(rng)];
}

}  // namespace

Graph interpolate(const Graph& coarse, const Projection& proj, Rng& rng, InterpolationStats* stats) {
  if (!proj.fine) throw std::invalid_argument("projection has no fine graph");
  const Graph& fine = *proj.fine;
  InterpolationStats local;
  InterpolationStats& st = stats ? *stats : local;

  Graph out;
  out.reserve_ids(fine.next_id());

  std::vector<NodeId> survivors;
  std::vector<NodeId> fresh;
  for (NodeId c : coarse.node_ids()) (proj.node_map.contains(c) ? survivors : fresh).push_back(c);

  std::unordered_map<NodeId, std::vector<NodeId>> members;
  members.reserve(coarse.num_nodes());

  for (NodeId c : survivors) {
    const auto& aggregate = proj.node_map.at(c);
    for (NodeId f : aggregate) out.add_node_with_id(f, fine.node_attributes(f));
    if (auto it = proj.internal_edges.find(c); it != proj.internal_edges.end()) {
      for (const Edge& e : it->second) out.add_edge(e.u, e.v, fine.edge_attributes(e.u, e.v));
    }
    members.emplace(c, aggregate);
    ++st.reused_aggregates;
  }

  if (!fresh.empty()) {
    std::vector<NodeId> templates = survivors;
    if (templates.empty()) {
      // Every original aggregate was deleted; fall back to the full projection.
      for (const auto& [c, aggregate] : proj.node_map) templates.push_back(c);
      std::sort(templates.begin(), templates.end());
    }
    if (templates.empty()) throw std::invalid_argument("no template for resampling");

    for (NodeId c : fresh) {
      const NodeId t = pick_uniform(templates, rng);
      std::unordered_map<NodeId, NodeId> relabel;
      std::vector<NodeId> copy;
      for (NodeId f : proj.node_map.at(t)) {
        const NodeId nf = out.add_node(fine.node_attributes(f));
        relabel.emplace(f, nf);
        copy.push_back(nf);
      }
      if (auto it = proj.internal_edges.find(t); it != proj.internal_edges.end()) {
        for (const Edge& e : it->second) {
          out.add_edge(relabel.at(e.u), relabel.at(e.v), fine.edge_attributes(e.u, e.v));
        }
      }
      members.emplace(c, std::move(copy));
      ++st.new_aggregates;
    }
  }

  // Partition coarse edges into reproduced and resampled ones.
  std::vector<std::uint64_t> edge_templates;
  std::vector<Edge> new_edges;
  for (const Edge& ce : coarse.edges()) {
    const std::uint64_t key = edge_key(ce.u, ce.v);
    const bool old_endpoints = proj.node_map.contains(ce.u) && proj.node_map.contains(ce.v);
    auto it = old_endpoints ? proj.edge_map.find(key) : proj.edge_map.end();
    if (it == proj.edge_map.end()) {
      new_edges.push_back(ce);
      continue;
    }
    for (const Edge& e : it->second) out.add_edge(e.u, e.v, fine.edge_attributes(e.u, e.v));
    edge_templates.push_back(key);
    ++st.reused_coarse_edges;
  }

  if (!new_edges.empty() && edge_templates.empty()) {
    for (const auto& [key, pre] : proj.edge_map) edge_templates.push_back(key);
    std::sort(edge_templates.begin(), edge_templates.end());
  }

  for (const Edge& ce : new_edges) {
    const std::vector<Edge>* pre_image = nullptr;
    if (!edge_templates.empty()) pre_image = &proj.edge_map.at(pick_uniform(edge_templates, rng));
    const std::size_t l = pre_image ? pre_image->size() : 1;

    const auto& side_u = members.at(ce.u);
    const auto& side_v = members.at(ce.v);
    std::vector<NodeId> us(l);
    std::vector<NodeId> vs(l);
    for (auto& x : us) x = pick_uniform(side_u, rng);
    for (auto& x : vs) x = pick_uniform(side_v, rng);
    std::shuffle(us.begin(), us.end(), rng);
    std::shuffle(vs.begin(), vs.end(), rng);

    std::size_t made = 0;
    for (std::size_t i = 0; i < l; ++i) {
      EdgeAttributes attrs;
      if (pre_image) attrs = fine.edge_attributes((*pre_image)[i].u, (*pre_image)[i].v);
      if (out.add_edge(us[i], vs[i], std::move(attrs))) ++made;
    }
    st.requested_multiplicity.push_back(l);
    st.materialized_multiplicity.push_back(made);
  }
  return out;
}

}  // namespace netrep
