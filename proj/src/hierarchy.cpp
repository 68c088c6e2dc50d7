#include "nucleus/hierarchy.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace nucleus {

void attach_root(HierarchySkeleton& skel) {
  const std::int32_t root = static_cast<std::int32_t>(skel.hrc.size());
  skel.hrc.push_back(SubnucleusNode{});
  for (std::int32_t i = 0; i < root; ++i)
    if (skel.hrc[i].parent == kNoNode) skel.hrc[i].parent = root;
  for (auto& c : skel.comp)
    if (c == kNoNode) c = root;
  skel.root = root;
}

namespace {

void canonicalize(NucleusTree& t) {
  const std::size_t n = t.nodes.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    if (t.nodes[a].k != t.nodes[b].k) return t.nodes[a].k < t.nodes[b].k;
    return t.nodes[a].members < t.nodes[b].members;
  });
  std::vector<std::int32_t> newpos(n);
  for (std::uint32_t i = 0; i < n; ++i) newpos[order[i]] = static_cast<std::int32_t>(i);
  std::vector<NucleusNode> sorted;
  sorted.reserve(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    NucleusNode nd = std::move(t.nodes[order[i]]);
    if (nd.parent != kNoNode) nd.parent = newpos[nd.parent];
    sorted.push_back(std::move(nd));
  }
  t.nodes = std::move(sorted);
}

}  // namespace

NucleusTree tree_from_protos(int r, int s, std::vector<ProtoNode> protos,
                             std::int32_t root) {
  assert(root >= 0 && static_cast<std::size_t>(root) < protos.size());
  assert(protos[root].k == 0 && protos[root].parent == kNoNode);
  (void)root;

  const std::size_t n = protos.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return protos[a].k > protos[b].k;
  });

  // close members downward: children precede parents in `order`
  std::vector<std::vector<KrId>> closed(n);
  for (std::uint32_t i : order) {
    auto& own = closed[i];
    own.insert(own.end(), protos[i].natives.begin(), protos[i].natives.end());
    std::sort(own.begin(), own.end());
    if (protos[i].parent != kNoNode) {
      assert(protos[protos[i].parent].k < protos[i].k);
      auto& up = closed[protos[i].parent];
      up.insert(up.end(), own.begin(), own.end());
    }
  }

  NucleusTree t;
  t.r = r;
  t.s = s;
  t.nodes.resize(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    t.nodes[i].k = protos[i].k;
    t.nodes[i].parent = protos[i].parent;
    t.nodes[i].members = std::move(closed[i]);
  }
  canonicalize(t);
  return t;
}

NucleusTree condense(const HierarchySkeleton& skel, int r, int s) {
  const std::size_t h = skel.hrc.size();
  assert(skel.root != kNoNode);

  // representative of each node's equal-lambda parent chain
  std::vector<std::int32_t> rep(h, kNoNode);
  std::vector<std::int32_t> stack;
  for (std::size_t i = 0; i < h; ++i) {
    if (rep[i] != kNoNode) continue;
    std::int32_t x = static_cast<std::int32_t>(i);
    stack.clear();
    while (rep[x] == kNoNode) {
      std::int32_t p = skel.hrc[x].parent;
      if (p == kNoNode || skel.hrc[p].lambda < skel.hrc[x].lambda) {
        rep[x] = x;
        break;
      }
      assert(skel.hrc[p].lambda == skel.hrc[x].lambda);
      stack.push_back(x);
      x = p;
    }
    std::int32_t top = rep[x];
    for (std::int32_t y : stack) rep[y] = top;
  }

  // one proto node per contracted group, ascending by representative id
  std::vector<std::int32_t> group(h, kNoNode);
  std::vector<ProtoNode> protos;
  for (std::size_t i = 0; i < h; ++i) {
    if (rep[i] == static_cast<std::int32_t>(i)) {
      group[i] = static_cast<std::int32_t>(protos.size());
      protos.push_back(ProtoNode{skel.hrc[i].lambda, kNoNode, {}});
    }
  }
  std::int32_t root_group = kNoNode;
  for (std::size_t i = 0; i < h; ++i) {
    if (rep[i] != static_cast<std::int32_t>(i)) continue;
    std::int32_t p = skel.hrc[i].parent;
    if (p == kNoNode) {
      if (root_group != kNoNode)
        throw std::logic_error("skeleton has more than one parentless group");
      if (skel.hrc[i].lambda != 0)
        throw std::logic_error("parentless skeleton group with nonzero lambda");
      root_group = group[i];
    } else {
      assert(skel.hrc[p].lambda < skel.hrc[i].lambda);
      protos[group[i]].parent = group[rep[p]];
    }
  }
  if (root_group == kNoNode)
    throw std::logic_error("skeleton has no root group");

  for (std::size_t u = 0; u < skel.comp.size(); ++u) {
    std::int32_t c = skel.comp[u];
    if (c < 0 || static_cast<std::size_t>(c) >= h)
      throw std::logic_error("dangling comp entry for K_r " + std::to_string(u));
    protos[group[rep[c]]].natives.push_back(static_cast<KrId>(u));
  }

  return tree_from_protos(r, s, std::move(protos), root_group);
}

bool trees_equal(const NucleusTree& a, const NucleusTree& b) {
  return a.r == b.r && a.s == b.s && a.nodes == b.nodes;
}

std::string tree_diff(const NucleusTree& a, const NucleusTree& b) {
  std::ostringstream os;
  if (a.r != b.r || a.s != b.s) {
    os << "(r,s) mismatch";
    return os.str();
  }
  if (a.nodes.size() != b.nodes.size()) {
    os << "node count " << a.nodes.size() << " vs " << b.nodes.size();
    return os.str();
  }
  for (std::size_t i = 0; i < a.nodes.size(); ++i) {
    const auto& x = a.nodes[i];
    const auto& y = b.nodes[i];
    if (x == y) continue;
    os << "node " << i << ": k " << x.k << "/" << y.k << ", size "
       << x.members.size() << "/" << y.members.size() << ", parent "
       << x.parent << "/" << y.parent;
    return os.str();
  }
  return "equal";
}

NucleusTree build_tree_by_containment(
    int r, int s, KrId universe,
    std::vector<std::pair<std::uint32_t, std::vector<KrId>>> nuclei) {
  const std::size_t n = nuclei.size();
  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0u);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t a, std::uint32_t b) {
    return nuclei[a].first > nuclei[b].first;
  });

  // current innermost processed nucleus per K_r; processing runs from the
  // deepest level up, so the first lower-k superset claims parenthood
  std::vector<std::int32_t> cur(universe, kNoNode);
  std::vector<std::int32_t> parent(n, kNoNode);
  for (std::uint32_t i : order) {
    for (KrId v : nuclei[i].second) {
      std::int32_t c = cur[v];
      if (c != kNoNode && c != static_cast<std::int32_t>(i) && parent[c] == kNoNode)
        parent[c] = static_cast<std::int32_t>(i);
    }
    for (KrId v : nuclei[i].second) cur[v] = static_cast<std::int32_t>(i);
  }

  NucleusTree t;
  t.r = r;
  t.s = s;
  t.nodes.resize(n + 1);
  const std::int32_t root = static_cast<std::int32_t>(n);
  t.nodes[root].k = 0;
  t.nodes[root].parent = kNoNode;
  t.nodes[root].members.resize(universe);
  std::iota(t.nodes[root].members.begin(), t.nodes[root].members.end(), 0u);
  for (std::size_t i = 0; i < n; ++i) {
    t.nodes[i].k = nuclei[i].first;
    t.nodes[i].members = std::move(nuclei[i].second);
    t.nodes[i].parent = parent[i] == kNoNode ? root : parent[i];
  }
  canonicalize(t);
  return t;
}

std::string serialize(const NucleusTree& t, const Graph& g,
                      const CliqueIndex& idx, bool with_members) {
  assert(idx.order() == t.r);
  nlohmann::ordered_json j;
  j["r"] = t.r;
  j["s"] = t.s;
  j["n"] = g.vertex_count();
  j["m"] = g.edge_count();
  std::uint32_t mk = 0;
  for (const auto& nd : t.nodes) mk = std::max(mk, nd.k);
  j["max_k"] = mk;
  j["node_count"] = t.nodes.size();
  nlohmann::ordered_json nodes = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < t.nodes.size(); ++i) {
    const auto& nd = t.nodes[i];
    nlohmann::ordered_json n;
    n["id"] = i;
    n["k"] = nd.k;
    n["size"] = nd.members.size();
    if (nd.parent == kNoNode)
      n["parent"] = nullptr;
    else
      n["parent"] = nd.parent;
    if (with_members) {
      nlohmann::ordered_json ms = nlohmann::ordered_json::array();
      for (KrId kr : nd.members) {
        nlohmann::ordered_json tup = nlohmann::ordered_json::array();
        for (VertexId v : idx.tuple(kr)) tup.push_back(g.label(v));
        ms.push_back(std::move(tup));
      }
      n["members"] = std::move(ms);
    }
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  return j.dump(2) + "\n";
}

}  // namespace nucleus
