#include "netrep/edge_list.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <unordered_map>

namespace netrep {
namespace {

bool parses_as_number(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  return ec == std::errc{} && ptr == last;
}

}  // namespace

EdgeListData read_edge_list(std::istream& in) {
  EdgeListData data;
  std::unordered_map<std::string, NodeId> ids;
  auto intern = [&](const std::string& token) {
    auto [it, inserted] = ids.emplace(token, static_cast<NodeId>(data.names.size()));
    if (inserted) {
      data.names.push_back(token);
      data.graph.add_node_with_id(it->second);
    }
    return it->second;
  };

  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(std::move(t));
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.size() == 1) {
      intern(tokens[0]);
      continue;
    }
    if (tokens.size() > 3) throw EdgeListError(line_no, "expected 'node node [weight]', got " + std::to_string(tokens.size()) + " fields");
    if (tokens.size() == 3) {
      if (!parses_as_number(tokens[2])) throw EdgeListError(line_no, "third field is not a number: '" + tokens[2] + "'");
      ++data.weights_ignored;
    }
    const NodeId a = intern(tokens[0]);
    const NodeId b = intern(tokens[1]);
    if (a == b) {
      ++data.self_loops_skipped;
    } else if (!data.graph.add_edge(a, b)) {
      ++data.duplicates_skipped;
    }
  }
  return data;
}

EdgeListData read_edge_list(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open edge list: " + path.string());
  try {
    return read_edge_list(in);
  } catch (const EdgeListError& e) {
    throw EdgeListError(e.line(), e.detail(), path.string());
  }
}

void write_edge_list(std::ostream& out, const Graph& g, const NodeNamer& name) {
  auto label = [&](NodeId id) { return name ? name(id) : std::to_string(id); };
  for (const Edge& e : g.edges()) out << label(e.u) << ' ' << label(e.v) << '\n';
  for (NodeId id : g.node_ids()) {
    if (g.degree(id) == 0) out << label(id) << '\n';
  }
}

void write_edge_list(const std::filesystem::path& path, const Graph& g, const NodeNamer& name) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write edge list: " + path.string());
  write_edge_list(out, g, name);
}

}  // namespace netrep
