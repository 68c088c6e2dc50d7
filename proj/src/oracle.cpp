#include "nucleus/oracle.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <stdexcept>
#include <vector>

namespace nucleus {

namespace {

void enum_cliques_rec(const Graph& g, int size, std::vector<VertexId>& cur,
                      VertexId start,
                      std::vector<std::vector<VertexId>>& out) {
  if (static_cast<int>(cur.size()) == size) {
    out.push_back(cur);
    return;
  }
  for (VertexId v = start; v < g.vertex_count(); ++v) {
    bool ok = true;
    for (VertexId u : cur)
      if (!g.has_edge(u, v)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    cur.push_back(v);
    enum_cliques_rec(g, size, cur, v + 1, out);
    cur.pop_back();
  }
}

std::vector<std::vector<VertexId>> enum_cliques(const Graph& g, int size) {
  std::vector<std::vector<VertexId>> out;
  std::vector<VertexId> cur;
  enum_cliques_rec(g, size, cur, 0, out);
  return out;
}

struct Inventory {
  std::vector<std::vector<VertexId>> krs;
  std::vector<std::vector<KrId>> kss;  // each K_s as its s constituent K_rs
};

Inventory build_inventory(const Graph& g, int r, int s) {
  if (r < 1 || r > 3 || s != r + 1)
    throw std::invalid_argument("unsupported (r,s)");
  Inventory inv;
  inv.krs = enum_cliques(g, r);
  std::map<std::vector<VertexId>, KrId> id_of;
  for (KrId i = 0; i < inv.krs.size(); ++i) id_of[inv.krs[i]] = i;
  for (const auto& ks : enum_cliques(g, s)) {
    std::vector<KrId> members;
    std::vector<VertexId> sub;
    for (std::size_t drop = 0; drop < ks.size(); ++drop) {
      sub.clear();
      for (std::size_t i = 0; i < ks.size(); ++i)
        if (i != drop) sub.push_back(ks[i]);
      members.push_back(id_of.at(sub));
    }
    inv.kss.push_back(std::move(members));
  }
  return inv;
}

/// K_rs with lambda >= k: delete low-degree ones until stable.
std::vector<char> survivors_at(const Inventory& inv, std::uint32_t k) {
  const std::size_t n = inv.krs.size();
  std::vector<char> alive(n, 1);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<std::uint32_t> deg(n, 0);
    for (const auto& ks : inv.kss) {
      bool whole = true;
      for (KrId u : ks)
        if (!alive[u]) {
          whole = false;
          break;
        }
      if (whole)
        for (KrId u : ks) ++deg[u];
    }
    for (std::size_t u = 0; u < n; ++u)
      if (alive[u] && deg[u] < k) {
        alive[u] = 0;
        changed = true;
      }
  }
  return alive;
}

}  // namespace

LambdaTable oracle_lambda(const Graph& g, int r, int s) {
  Inventory inv = build_inventory(g, r, s);
  LambdaTable t;
  t.lambda.assign(inv.krs.size(), 0);
  for (std::uint32_t k = 1;; ++k) {
    auto alive = survivors_at(inv, k);
    bool any = false;
    for (std::size_t u = 0; u < alive.size(); ++u)
      if (alive[u]) {
        t.lambda[u] = k;
        t.max_lambda = k;
        any = true;
      }
    if (!any) break;
  }
  return t;
}

NucleusTree oracle_nuclei(const Graph& g, int r, int s) {
  Inventory inv = build_inventory(g, r, s);
  const auto n = static_cast<KrId>(inv.krs.size());

  // Highest k seen for each distinct member set.
  std::map<std::vector<KrId>, std::uint32_t> by_members;
  for (std::uint32_t k = 1;; ++k) {
    auto alive = survivors_at(inv, k);
    if (std::find(alive.begin(), alive.end(), 1) == alive.end()) break;

    std::vector<char> seen(n, 0);
    for (KrId seed = 0; seed < n; ++seed) {
      if (!alive[seed] || seen[seed]) continue;
      std::vector<KrId> comp, queue{seed};
      seen[seed] = 1;
      while (!queue.empty()) {
        KrId u = queue.back();
        queue.pop_back();
        comp.push_back(u);
        for (const auto& ks : inv.kss) {
          bool whole = true, has_u = false;
          for (KrId v : ks) {
            if (!alive[v]) whole = false;
            if (v == u) has_u = true;
          }
          if (!whole || !has_u) continue;
          for (KrId v : ks)
            if (!seen[v]) {
              seen[v] = 1;
              queue.push_back(v);
            }
        }
      }
      std::sort(comp.begin(), comp.end());
      auto [it, fresh] = by_members.emplace(std::move(comp), k);
      if (!fresh && it->second < k) it->second = k;
    }
  }

  NucleusTree tree;
  tree.r = r;
  tree.s = s;
  auto& ns = tree.nodes;
  NucleusNode root;
  root.k = 0;
  root.members.resize(n);
  for (KrId i = 0; i < n; ++i) root.members[i] = i;
  ns.push_back(std::move(root));
  for (auto& [members, k] : by_members) {
    NucleusNode nd;
    nd.k = k;
    nd.members = members;
    ns.push_back(std::move(nd));
  }
  std::sort(ns.begin(), ns.end(), [](const NucleusNode& a, const NucleusNode& b) {
    return a.k != b.k ? a.k < b.k : a.members < b.members;
  });

  // Parent: strict superset of highest k. Supersets have strictly lower k
  // (the family is laminar), so scanning backwards from i the first strict
  // superset is the parent; none found means the root.
  for (std::size_t i = 1; i < ns.size(); ++i) {
    ns[i].parent = 0;
    for (std::size_t j = i; j-- > 1;) {
      if (ns[j].members.size() > ns[i].members.size() &&
          std::includes(ns[j].members.begin(), ns[j].members.end(),
                        ns[i].members.begin(), ns[i].members.end())) {
        ns[i].parent = static_cast<std::int32_t>(j);
        break;
      }
    }
  }
  return tree;
}

}  // namespace nucleus
