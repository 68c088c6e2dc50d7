#include "nucleus/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace nucleus {

Graph Graph::from_simple(VertexId n,
                         std::vector<std::pair<VertexId, VertexId>> edges) {
  std::erase_if(edges, [](const auto& e) { return e.first == e.second; });
  for (auto& [u, v] : edges) {
    if (u > v) std::swap(u, v);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

  Graph g;
  g.n_ = n;
  g.m_ = edges.size();
  g.labels_.resize(n);
  for (VertexId i = 0; i < n; ++i) g.labels_[i] = i;

  g.xadj_.assign(n + 1, 0);
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) throw std::invalid_argument("edge endpoint out of range");
    ++g.xadj_[u + 1];
    ++g.xadj_[v + 1];
  }
  for (VertexId i = 0; i < n; ++i) g.xadj_[i + 1] += g.xadj_[i];
  g.adj_.resize(2 * g.m_);
  std::vector<std::uint64_t> pos(g.xadj_.begin(), g.xadj_.end() - 1);
  for (const auto& [u, v] : edges) {
    g.adj_[pos[u]++] = v;
    g.adj_[pos[v]++] = u;
  }
  for (VertexId i = 0; i < n; ++i)
    std::sort(g.adj_.begin() + g.xadj_[i], g.adj_.begin() + g.xadj_[i + 1]);
  return g;
}

Graph Graph::from_edge_list(const std::vector<std::pair<Label, Label>>& edges,
                            const std::vector<Label>& bare_labels) {
  std::vector<Label> labels;
  labels.reserve(2 * edges.size() + bare_labels.size());
  for (const auto& [a, b] : edges) {
    labels.push_back(a);
    labels.push_back(b);
  }
  labels.insert(labels.end(), bare_labels.begin(), bare_labels.end());
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.size() > std::numeric_limits<VertexId>::max())
    throw std::runtime_error("too many distinct vertex labels");

  auto id_of = [&](Label l) {
    return static_cast<VertexId>(
        std::lower_bound(labels.begin(), labels.end(), l) - labels.begin());
  };
  std::vector<std::pair<VertexId, VertexId>> mapped;
  mapped.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    if (a == b) continue;
    mapped.emplace_back(id_of(a), id_of(b));
  }
  Graph g = from_simple(static_cast<VertexId>(labels.size()), std::move(mapped));
  g.labels_ = std::move(labels);
  return g;
}

bool Graph::has_edge(VertexId u, VertexId v) const {
  auto ns = neighbors(u);
  return std::binary_search(ns.begin(), ns.end(), v);
}

namespace {

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

}  // namespace

Graph load_graph(std::istream& in) {
  std::vector<std::pair<Label, Label>> edges;
  std::string line;
  std::uint64_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::size_t first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#' || line[first] == '%') continue;
    std::istringstream ls(line);
    std::string ta, tb, extra;
    ls >> ta >> tb;
    if (tb.empty() || (ls >> extra))
      throw std::runtime_error("edge list parse error at line " +
                               std::to_string(line_no) +
                               ": expected exactly two vertex labels");
    if (!all_digits(ta) || !all_digits(tb))
      throw std::runtime_error("edge list parse error at line " +
                               std::to_string(line_no) +
                               ": labels must be non-negative integers");
    Label a, b;
    try {
      a = std::stoull(ta);
      b = std::stoull(tb);
    } catch (const std::exception&) {
      throw std::runtime_error("edge list parse error at line " +
                               std::to_string(line_no) + ": label out of range");
    }
    edges.emplace_back(a, b);
  }
  return Graph::from_edge_list(edges);
}

Graph load_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return load_graph(in);
}

}  // namespace nucleus
