#pragma once

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include "netrep/graph.hpp"

namespace netrep {

/// Raised for unparsable edge-list input; carries the 1-based line number.
class EdgeListError : public std::runtime_error {
 public:
  EdgeListError(std::size_t line, std::string detail, const std::string& source = "")
      : std::runtime_error((source.empty() ? "" : source + ":") + "line " + std::to_string(line) + ": " + detail),
        line_(line),
        detail_(std::move(detail)) {}
  std::size_t line() const { return line_; }
  const std::string& detail() const { return detail_; }

 private:
  std::size_t line_;
  std::string detail_;
};

struct EdgeListData {
  Graph graph;
  // names[id] is the token that produced dense id `id`.
  std::vector<std::string> names;
  std::size_t self_loops_skipped = 0;
  std::size_t duplicates_skipped = 0;
  std::size_t weights_ignored = 0;
};

// Format: one edge per line ("a b"), optionally with a numeric third column
// that is ignored (all input edges get weight 1). A single token on a line
// declares an isolated node. Blank lines and lines starting with '#' are skipped.
EdgeListData read_edge_list(std::istream& in);
EdgeListData read_edge_list(const std::filesystem::path& path);

using NodeNamer = std::function<std::string(NodeId)>;

/// Writes edges in storage order, then isolated nodes. Without a namer, ids
/// are written in decimal.
void write_edge_list(std::ostream& out, const Graph& g, const NodeNamer& name = {});
void write_edge_list(const std::filesystem::path& path, const Graph& g, const NodeNamer& name = {});

}  // namespace netrep
