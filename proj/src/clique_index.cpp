#include "nucleus/clique_index.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

namespace nucleus {

KrId CliqueIndex::edge_id(VertexId u, VertexId v) const {
  if (u > v) std::swap(u, v);
  const VertexId* lo = upper_.data() + xupper_[u];
  const VertexId* hi = upper_.data() + xupper_[u + 1];
  const VertexId* it = std::lower_bound(lo, hi, v);
  if (it == hi || *it != v) return kInvalidClique;
  return static_cast<KrId>(xupper_[u] + (it - lo));
}

KrId CliqueIndex::triangle_id(VertexId a, VertexId b, VertexId c) const {
  std::array<VertexId, 3> key{a, b, c};
  std::sort(key.begin(), key.end());
  KrId lo = 0, hi = count_;
  while (lo < hi) {
    KrId mid = lo + (hi - lo) / 2;
    const VertexId* t = tuples_.data() + static_cast<std::size_t>(mid) * 3;
    if (t[0] < key[0] || (t[0] == key[0] && (t[1] < key[1] || (t[1] == key[1] && t[2] < key[2]))))
      lo = mid + 1;
    else
      hi = mid;
  }
  if (lo == count_) return kInvalidClique;
  const VertexId* t = tuples_.data() + static_cast<std::size_t>(lo) * 3;
  if (t[0] != key[0] || t[1] != key[1] || t[2] != key[2]) return kInvalidClique;
  return lo;
}

CliqueIndex build_clique_index(const Graph& g, int r) {
  if (r < 1 || r > 3)
    throw std::invalid_argument("clique order must be 1, 2 or 3");
  CliqueIndex idx;
  idx.r_ = r;
  const VertexId n = g.vertex_count();

  if (r == 1) {
    idx.count_ = n;
    idx.tuples_.resize(n);
    for (VertexId v = 0; v < n; ++v) idx.tuples_[v] = v;
    return idx;
  }

  // edge layer: ids follow lexicographic (u,v) order with u < v
  idx.xupper_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    auto ns = g.neighbors(u);
    auto it = std::upper_bound(ns.begin(), ns.end(), u);
    idx.xupper_[u + 1] = idx.xupper_[u] + (ns.end() - it);
  }
  idx.edge_count_ = static_cast<KrId>(idx.xupper_[n]);
  idx.upper_.resize(idx.xupper_[n]);
  idx.etuples_.resize(2 * static_cast<std::size_t>(idx.edge_count_));
  {
    std::size_t pos = 0;
    for (VertexId u = 0; u < n; ++u) {
      auto ns = g.neighbors(u);
      for (VertexId v : ns) {
        if (v <= u) continue;
        idx.upper_[pos] = v;
        idx.etuples_[2 * pos] = u;
        idx.etuples_[2 * pos + 1] = v;
        ++pos;
      }
    }
  }
  // vertex -> incident edges
  idx.vinc_x_.assign(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) idx.vinc_x_[u + 1] = idx.vinc_x_[u] + g.degree(u);
  idx.vinc_.resize(idx.vinc_x_[n]);
  {
    std::vector<std::uint64_t> pos(idx.vinc_x_.begin(), idx.vinc_x_.end() - 1);
    for (KrId e = 0; e < idx.edge_count_; ++e) {
      VertexId a = idx.etuples_[2 * static_cast<std::size_t>(e)];
      VertexId b = idx.etuples_[2 * static_cast<std::size_t>(e) + 1];
      idx.vinc_[pos[a]++] = e;
      idx.vinc_[pos[b]++] = e;
    }
  }

  if (r == 2) {
    idx.count_ = idx.edge_count_;
    idx.tuples_ = idx.etuples_;
    return idx;
  }

  // triangles off the degree-ordered orientation (ties by vertex id)
  auto before = [&](VertexId a, VertexId b) {
    std::uint32_t da = g.degree(a), db = g.degree(b);
    return da < db || (da == db && a < b);
  };
  std::vector<std::uint64_t> ox(n + 1, 0);
  for (VertexId u = 0; u < n; ++u) {
    std::uint64_t c = 0;
    for (VertexId v : g.neighbors(u))
      if (before(u, v)) ++c;
    ox[u + 1] = ox[u] + c;
  }
  std::vector<VertexId> oadj(ox[n]);
  for (VertexId u = 0; u < n; ++u) {
    std::uint64_t p = ox[u];
    for (VertexId v : g.neighbors(u))
      if (before(u, v)) oadj[p++] = v;
  }
  std::vector<std::array<VertexId, 3>> tris;
  for (VertexId u = 0; u < n; ++u) {
    const VertexId* ub = oadj.data() + ox[u];
    const VertexId* ue = oadj.data() + ox[u + 1];
    for (const VertexId* pv = ub; pv != ue; ++pv) {
      VertexId v = *pv;
      const VertexId* vb = oadj.data() + ox[v];
      const VertexId* ve = oadj.data() + ox[v + 1];
      const VertexId* i = ub;
      const VertexId* j = vb;
      while (i != ue && j != ve) {
        if (*i < *j) {
          ++i;
        } else if (*i > *j) {
          ++j;
        } else {
          std::array<VertexId, 3> t{u, v, *i};
          std::sort(t.begin(), t.end());
          tris.push_back(t);
          ++i;
          ++j;
        }
      }
    }
  }
  std::sort(tris.begin(), tris.end());
  idx.count_ = static_cast<KrId>(tris.size());
  idx.tuples_.resize(3 * tris.size());
  for (std::size_t i = 0; i < tris.size(); ++i) {
    idx.tuples_[3 * i] = tris[i][0];
    idx.tuples_[3 * i + 1] = tris[i][1];
    idx.tuples_[3 * i + 2] = tris[i][2];
  }
  // edge -> containing triangles
  idx.einc_x_.assign(idx.edge_count_ + 1, 0);
  auto tri_edges = [&](std::size_t t, KrId out[3]) {
    VertexId a = idx.tuples_[3 * t], b = idx.tuples_[3 * t + 1], c = idx.tuples_[3 * t + 2];
    out[0] = idx.edge_id(a, b);
    out[1] = idx.edge_id(a, c);
    out[2] = idx.edge_id(b, c);
  };
  KrId es[3];
  for (std::size_t t = 0; t < tris.size(); ++t) {
    tri_edges(t, es);
    for (int i = 0; i < 3; ++i) ++idx.einc_x_[es[i] + 1];
  }
  for (KrId e = 0; e < idx.edge_count_; ++e) idx.einc_x_[e + 1] += idx.einc_x_[e];
  idx.einc_.resize(idx.einc_x_[idx.edge_count_]);
  {
    std::vector<std::uint64_t> pos(idx.einc_x_.begin(), idx.einc_x_.end() - 1);
    for (std::size_t t = 0; t < tris.size(); ++t) {
      tri_edges(t, es);
      for (int i = 0; i < 3; ++i) idx.einc_[pos[es[i]]++] = static_cast<KrId>(t);
    }
  }
  return idx;
}

KsNeighborhood s_cliques_of(const Graph& g, const CliqueIndex& idx, KrId u, int s) {
  if (s != idx.order() + 1 || s < 2 || s > 4)
    throw std::invalid_argument("unsupported (r,s) pair for clique index");
  KsNeighborhood out;
  out.arity = s;
  idx.for_each_containing_ks(g, u, [&](KsClique cs) {
    out.flat.insert(out.flat.end(), cs.begin(), cs.end());
  });
  return out;
}

DegreeTable s_degrees(const Graph& g, const CliqueIndex& idx, int r, int s) {
  if (r != idx.order() || s != r + 1 || r < 1 || r > 3)
    throw std::invalid_argument("unsupported (r,s) pair for s_degrees");
  DegreeTable t;
  t.omega.assign(idx.count(), 0);
  for (KrId u = 0; u < idx.count(); ++u) {
    std::uint32_t c = 0;
    idx.for_each_containing_ks(g, u, [&](KsClique) { ++c; });
    t.omega[u] = c;
  }
  return t;
}

}  // namespace nucleus
