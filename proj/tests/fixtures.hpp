#pragma once

#include "nucleus/graph.hpp"

namespace fixtures {

using nucleus::Graph;
using nucleus::VertexId;

inline Graph triangle() {
  return Graph::from_simple(3, {{0, 1}, {0, 2}, {1, 2}});
}

inline Graph path(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph::from_simple(n, e);
}

inline Graph cycle(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::from_simple(n, e);
}

inline Graph complete(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < n; ++i)
    for (VertexId j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::from_simple(n, e);
}

/// Leaves 0..n-2, center n-1 (highest id, so leaves peel first by id too).
inline Graph star(VertexId n) {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i + 1 < n; ++i) e.emplace_back(i, n - 1);
  return Graph::from_simple(n, e);
}

/// Two triangles sharing vertex 2.
inline Graph bowtie() {
  return Graph::from_simple(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}});
}

/// K4 on 0..3 and K4 on 5..8, joined through vertex 4 by edges 3-4, 4-5.
inline Graph two_k4_path() {
  std::vector<std::pair<VertexId, VertexId>> e;
  for (VertexId i = 0; i < 4; ++i)
    for (VertexId j = i + 1; j < 4; ++j) e.emplace_back(i, j);
  for (VertexId i = 5; i < 9; ++i)
    for (VertexId j = i + 1; j < 9; ++j) e.emplace_back(i, j);
  e.emplace_back(3, 4);
  e.emplace_back(4, 5);
  return Graph::from_simple(9, e);
}

/// K8 on 0..7, K6 on 8..13, K4 on 14..17, bridge edges 7-8 and 13-14.
/// The vertex core hierarchy is a chain (3-core covers everything, the
/// 5-core the first two cliques, the 7-core the K8); the edge and
/// triangle hierarchies are flat with one leaf per clique.
inline Graph clique_chain() {
  std::vector<std::pair<VertexId, VertexId>> e;
  auto clique = [&](VertexId lo, VertexId hi) {
    for (VertexId i = lo; i < hi; ++i)
      for (VertexId j = i + 1; j < hi; ++j) e.emplace_back(i, j);
  };
  clique(0, 8);
  clique(8, 14);
  clique(14, 18);
  e.emplace_back(7, 8);
  e.emplace_back(13, 14);
  return Graph::from_simple(18, e);
}

}  // namespace fixtures
