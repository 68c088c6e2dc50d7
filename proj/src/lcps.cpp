#include "nucleus/lcps.hpp"

#include <cassert>
#include <functional>
#include <queue>
#include <stdexcept>
#include <vector>

namespace nucleus {

NucleusTree lcps_core(const Graph& g, const LambdaTable& t, int r,
                      LcpsStats* stats) {
  if (r != 1)
    throw std::invalid_argument("connection-level search applies to vertex cores only");
  if (t.lambda.size() != g.vertex_count())
    throw std::invalid_argument("lambda table does not match graph");

  const VertexId n = g.vertex_count();
  LcpsStats local;

  std::vector<ProtoNode> protos;
  protos.push_back(ProtoNode{0, kNoNode, {}});
  std::vector<std::int32_t> stack{0};  // stack[i]: open node at level i

  std::vector<std::int64_t> best(n, -1);
  std::vector<char> done(n, 0);
  using MinHeap =
      std::priority_queue<VertexId, std::vector<VertexId>, std::greater<>>;
  std::vector<MinHeap> buckets(t.max_lambda + 1);
  std::uint32_t cur_max = 0;

  auto push = [&](VertexId v, std::uint32_t p) {
    buckets[p].push(v);
    best[v] = p;
    if (p > cur_max) cur_max = p;
    ++local.pushes;
  };

  VertexId next_seed = 0;
  VertexId processed = 0;
  while (processed < n) {
    while (cur_max > 0 && buckets[cur_max].empty()) --cur_max;
    if (buckets[cur_max].empty()) {
      while (next_seed < n && done[next_seed]) ++next_seed;
      assert(next_seed < n);
      push(next_seed, 0);
      ++local.restarts;
      continue;
    }

    const std::uint32_t p = cur_max;
    VertexId v = buckets[p].top();
    buckets[p].pop();
    ++local.pops;
    if (done[v] || best[v] != static_cast<std::int64_t>(p)) continue;
    done[v] = 1;
    ++processed;

    assert(p <= t.lambda[v] && stack.size() > p);
    if (stack.size() > p + 1) stack.resize(p + 1);
    for (auto lvl = static_cast<std::uint32_t>(stack.size());
         lvl <= t.lambda[v]; ++lvl) {
      protos.push_back(ProtoNode{lvl, stack.back(), {}});
      stack.push_back(static_cast<std::int32_t>(protos.size()) - 1);
    }
    protos[stack.back()].natives.push_back(v);

    for (VertexId w : g.neighbors(v)) {
      if (done[w]) continue;
      std::uint32_t q = std::min(t.lambda[v], t.lambda[w]);
      if (static_cast<std::int64_t>(q) > best[w]) push(w, q);
    }
  }

  // Levels skipped over by a chain carry no vertex of their own; drop them
  // and splice their children onto the nearest surviving ancestor.
  std::vector<std::int32_t> kept_id(protos.size(), kNoNode);
  std::vector<ProtoNode> kept;
  for (std::size_t i = 0; i < protos.size(); ++i) {
    if (i != 0 && protos[i].natives.empty()) continue;
    auto par = protos[i].parent;
    while (par != kNoNode && kept_id[par] == kNoNode)
      par = protos[par].parent;
    kept_id[i] = static_cast<std::int32_t>(kept.size());
    kept.push_back(ProtoNode{protos[i].k, par == kNoNode ? kNoNode : kept_id[par],
                             std::move(protos[i].natives)});
  }

  if (stats) *stats = local;
  return tree_from_protos(1, 2, std::move(kept), 0);
}

}  // namespace nucleus
