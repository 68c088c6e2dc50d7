#pragma once

#include <cstdint>
#include <istream>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace nucleus {

using VertexId = std::uint32_t;
using Label = std::uint64_t;

/// Immutable undirected simple graph with sorted compressed adjacency.
/// Internal vertex ids are 0..n-1, assigned in ascending order of the
/// original labels.
class Graph {
 public:
  Graph() = default;

  /// Build from internal-id edges; vertices are 0..n-1, labels identity.
  /// Self-loops and duplicate edges are dropped.
  static Graph from_simple(VertexId n,
                           std::vector<std::pair<VertexId, VertexId>> edges);

  /// Build from labeled edges plus any labels seen without a surviving
  /// edge. Self-loops are dropped (their endpoints still count as seen),
  /// duplicates collapse, labels are remapped ascending.
  static Graph from_edge_list(const std::vector<std::pair<Label, Label>>& edges,
                              const std::vector<Label>& bare_labels = {});

  VertexId vertex_count() const { return n_; }
  std::uint64_t edge_count() const { return m_; }

  std::uint32_t degree(VertexId u) const {
    return static_cast<std::uint32_t>(xadj_[u + 1] - xadj_[u]);
  }
  std::span<const VertexId> neighbors(VertexId u) const {
    return {adj_.data() + xadj_[u], adj_.data() + xadj_[u + 1]};
  }
  bool has_edge(VertexId u, VertexId v) const;

  Label label(VertexId u) const { return labels_[u]; }

 private:
  VertexId n_ = 0;
  std::uint64_t m_ = 0;
  std::vector<std::uint64_t> xadj_;
  std::vector<VertexId> adj_;
  std::vector<Label> labels_;
};

/// Parse a whitespace-separated edge list: one "u v" pair per line, lines
/// starting with '#' or '%' ignored. Throws std::runtime_error naming the
/// offending line on malformed input.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

}  // namespace nucleus
