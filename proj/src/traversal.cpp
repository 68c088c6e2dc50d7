#include "nucleus/traversal.hpp"

#include <algorithm>
#include <cassert>
#include <queue>
#include <stdexcept>
#include <vector>

namespace nucleus {

namespace {

std::vector<std::vector<KrId>> bucket_by_lambda(const LambdaTable& t) {
  std::vector<std::vector<KrId>> buckets(t.max_lambda + 1);
  for (KrId u = 0; u < t.lambda.size(); ++u)
    buckets[t.lambda[u]].push_back(u);
  return buckets;
}

}  // namespace

NucleusTree naive_traversal(const Graph& g, const CliqueIndex& idx,
                            const LambdaTable& t, int r, int s) {
  if (idx.order() != r || s != r + 1)
    throw std::invalid_argument("clique index order does not match (r,s)");
  assert(t.lambda.size() == idx.count());

  const KrId n = idx.count();
  auto buckets = bucket_by_lambda(t);

  std::vector<std::pair<std::uint32_t, std::vector<KrId>>> nuclei;
  // visited_at[u] == k means u was already claimed by some k-nucleus.
  std::vector<std::uint32_t> visited_at(n, 0);
  std::vector<KrId> queue;

  for (std::uint32_t k = 1; k <= t.max_lambda; ++k) {
    for (KrId seed : buckets[k]) {
      if (visited_at[seed] == k) continue;
      std::vector<KrId> members;
      queue.clear();
      queue.push_back(seed);
      visited_at[seed] = k;
      while (!queue.empty()) {
        KrId u = queue.back();
        queue.pop_back();
        members.push_back(u);
        idx.for_each_containing_ks(g, u, [&](KsClique c) {
          if (lambda_rs(c, t) < k) return;
          for (KrId v : c) {
            if (visited_at[v] != k) {
              visited_at[v] = k;
              queue.push_back(v);
            }
          }
        });
      }
      std::sort(members.begin(), members.end());
      nuclei.emplace_back(k, std::move(members));
    }
  }
  return build_tree_by_containment(r, s, n, std::move(nuclei));
}

HierarchySkeleton df_traversal(const Graph& g, const CliqueIndex& idx,
                               const LambdaTable& t, int r, int s) {
  if (idx.order() != r || s != r + 1)
    throw std::invalid_argument("clique index order does not match (r,s)");
  assert(t.lambda.size() == idx.count());

  const KrId n = idx.count();
  HierarchySkeleton skel;
  skel.comp.assign(n, kNoNode);
  skel.max_lambda = t.max_lambda;

  auto buckets = bucket_by_lambda(t);

  // Deduplicates sub-nucleus indices touched while scanning one seed's
  // component; entries are lazily extended as hrc grows.
  std::vector<std::uint32_t> seen;
  std::uint32_t epoch = 0;

  std::vector<KrId> queue;
  std::vector<std::int32_t> merge;

  for (std::uint32_t k = t.max_lambda; k >= 1; --k) {
    for (KrId seed : buckets[k]) {
      if (skel.comp[seed] != kNoNode) continue;

      const auto sn = static_cast<std::int32_t>(skel.hrc.size());
      skel.hrc.push_back(SubnucleusNode{k, 0, kNoNode, kNoNode});
      skel.comp[seed] = sn;
      ++epoch;
      merge.clear();
      merge.push_back(sn);

      queue.clear();
      queue.push_back(seed);
      while (!queue.empty()) {
        KrId u = queue.back();
        queue.pop_back();
        idx.for_each_containing_ks(g, u, [&](KsClique c) {
          if (lambda_rs(c, t) != k) return;
          for (KrId v : c) {
            if (t.lambda[v] == k) {
              if (skel.comp[v] == kNoNode) {
                skel.comp[v] = sn;
                queue.push_back(v);
              }
              continue;
            }
            // lambda[v] > k: tie the representative of v's sub-nucleus
            // under sn, once per representative and per raw id.
            auto raw = skel.comp[v];
            assert(raw != kNoNode);
            seen.resize(skel.hrc.size(), 0);
            if (seen[raw] == epoch) continue;
            seen[raw] = epoch;
            auto rep = find_r(skel.hrc, raw);
            if (rep != raw) {
              if (seen[rep] == epoch) continue;
              seen[rep] = epoch;
            }
            if (rep == sn) continue;
            if (skel.hrc[rep].lambda > k) {
              assert(skel.hrc[rep].parent == kNoNode);
              skel.hrc[rep].parent = sn;
              skel.hrc[rep].root = sn;
            } else {
              assert(skel.hrc[rep].lambda == k);
              merge.push_back(rep);
            }
          }
        });
      }
      for (std::size_t i = 1; i < merge.size(); ++i)
        union_r(skel.hrc, merge[0], merge[i]);
    }
  }

  attach_root(skel);
  return skel;
}

HypoStats hypo_traversal(const Graph& g, const CliqueIndex& idx) {
  const KrId n = idx.count();
  HypoStats st;
  std::vector<char> visited(n, 0);
  std::vector<KrId> queue;
  for (KrId seed = 0; seed < n; ++seed) {
    if (visited[seed]) continue;
    ++st.components;
    visited[seed] = 1;
    queue.clear();
    queue.push_back(seed);
    while (!queue.empty()) {
      KrId u = queue.back();
      queue.pop_back();
      ++st.visited;
      idx.for_each_containing_ks(g, u, [&](KsClique c) {
        for (KrId v : c) {
          if (!visited[v]) {
            visited[v] = 1;
            queue.push_back(v);
          }
        }
      });
    }
  }
  return st;
}

}  // namespace nucleus
