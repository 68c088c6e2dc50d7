#pragma once

#include <cassert>
#include <cstdint>
#include <span>
#include <vector>

#include "nucleus/graph.hpp"

namespace nucleus {

using KrId = std::uint32_t;
inline constexpr KrId kInvalidClique = 0xFFFFFFFFu;

/// A K_s handed to callers as the ids of its s constituent K_rs (s = r+1).
using KsClique = std::span<const KrId>;

/// Materialized K_r inventory: vertices (r=1), edges (r=2) or triangles
/// (r=3), each a strictly ascending vertex tuple under a dense id, tuples
/// in lexicographic order. Triangles come from a degree-ordered oriented
/// enumeration. K_4s are never materialized; the (3,4) neighborhood
/// expansion generates them on demand.
class CliqueIndex {
 public:
  int order() const { return r_; }
  KrId count() const { return count_; }

  std::span<const VertexId> tuple(KrId id) const {
    return {tuples_.data() + static_cast<std::size_t>(id) * r_,
            static_cast<std::size_t>(r_)};
  }

  // edge layer (r >= 2)
  KrId edge_count() const { return edge_count_; }
  KrId edge_id(VertexId u, VertexId v) const;
  std::span<const KrId> edges_of_vertex(VertexId v) const {
    return {vinc_.data() + vinc_x_[v], vinc_.data() + vinc_x_[v + 1]};
  }

  // triangle layer (r == 3)
  KrId triangle_id(VertexId a, VertexId b, VertexId c) const;
  std::span<const KrId> triangles_of_edge(KrId e) const {
    return {einc_.data() + einc_x_[e], einc_.data() + einc_x_[e + 1]};
  }

  /// Visit every K_s (s = order()+1) containing u. fn receives the ids of
  /// the s constituent K_rs, u itself first. Enumeration order is
  /// deterministic: ascending completion vertex.
  template <class F>
  void for_each_containing_ks(const Graph& g, KrId u, F&& fn) const;

 private:
  friend CliqueIndex build_clique_index(const Graph& g, int r);

  int r_ = 1;
  KrId count_ = 0;
  std::vector<VertexId> tuples_;

  KrId edge_count_ = 0;
  std::vector<VertexId> etuples_;       // flat (a,b) pairs, lex order
  std::vector<std::uint64_t> xupper_;   // per-vertex offsets into upper_
  std::vector<VertexId> upper_;         // neighbors > v, ascending
  std::vector<std::uint64_t> vinc_x_;   // vertex -> incident edge ids
  std::vector<KrId> vinc_;

  std::vector<std::uint64_t> einc_x_;   // edge -> containing triangle ids
  std::vector<KrId> einc_;
};

CliqueIndex build_clique_index(const Graph& g, int r);

/// K_s cliques containing a given K_r, each as its constituent K_r ids.
struct KsNeighborhood {
  int arity = 0;
  std::vector<KrId> flat;
  std::size_t size() const {
    return arity == 0 ? 0 : flat.size() / static_cast<std::size_t>(arity);
  }
  KsClique clique(std::size_t i) const {
    return {flat.data() + i * static_cast<std::size_t>(arity),
            static_cast<std::size_t>(arity)};
  }
};

KsNeighborhood s_cliques_of(const Graph& g, const CliqueIndex& idx, KrId u, int s);

struct DegreeTable {
  std::vector<std::uint32_t> omega;
};

/// K_s-degree of every K_r.
DegreeTable s_degrees(const Graph& g, const CliqueIndex& idx, int r, int s);

template <class F>
void CliqueIndex::for_each_containing_ks(const Graph& g, KrId u, F&& fn) const {
  KrId cs[4];
  cs[0] = u;
  if (r_ == 1) {
    for (VertexId v : g.neighbors(static_cast<VertexId>(u))) {
      cs[1] = v;
      fn(KsClique(cs, 2));
    }
  } else if (r_ == 2) {
    auto t = tuple(u);
    const VertexId a = t[0], b = t[1];
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::size_t i = 0, j = 0;
    while (i < na.size() && j < nb.size()) {
      if (na[i] < nb[j]) {
        ++i;
      } else if (na[i] > nb[j]) {
        ++j;
      } else {
        const VertexId c = na[i];
        cs[1] = edge_id(a, c);
        cs[2] = edge_id(b, c);
        assert(cs[1] != kInvalidClique && cs[2] != kInvalidClique);
        fn(KsClique(cs, 3));
        ++i;
        ++j;
      }
    }
  } else {
    auto t = tuple(u);
    const VertexId a = t[0], b = t[1], c = t[2];
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    auto nc = g.neighbors(c);
    std::size_t i = 0, j = 0, k = 0;
    while (i < na.size() && j < nb.size() && k < nc.size()) {
      VertexId x = na[i], y = nb[j], z = nc[k];
      if (x == y && y == z) {
        const VertexId d = x;
        cs[1] = triangle_id(a, b, d);
        cs[2] = triangle_id(a, c, d);
        cs[3] = triangle_id(b, c, d);
        assert(cs[1] != kInvalidClique && cs[2] != kInvalidClique &&
               cs[3] != kInvalidClique);
        fn(KsClique(cs, 4));
        ++i;
        ++j;
        ++k;
      } else {
        VertexId mx = x > y ? x : y;
        if (z > mx) mx = z;
        if (x < mx) ++i;
        if (y < mx) ++j;
        if (z < mx) ++k;
      }
    }
  }
}

}  // namespace nucleus
