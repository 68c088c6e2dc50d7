#include "nucleus/fnd.hpp"

#include <cassert>
#include <chrono>
#include <random>
#include <stdexcept>

namespace nucleus {

namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

FndResult fast_nucleus_decomposition(const Graph& g, const CliqueIndex& idx,
                                     int r, int s, TieBreak tie,
                                     std::uint64_t seed) {
  if (idx.order() != r || s != r + 1)
    throw std::invalid_argument("clique index order does not match (r,s)");

  const KrId n = idx.count();
  FndResult res;
  res.lambdas.lambda.assign(n, 0);
  res.skeleton.comp.assign(n, kNoNode);
  auto& hrc = res.skeleton.hrc;
  auto& comp = res.skeleton.comp;
  auto& lambda = res.lambdas.lambda;

  std::mt19937_64 rng(seed);

  auto t0 = std::chrono::steady_clock::now();

  DegreeTable deg = s_degrees(g, idx, r, s);
  std::uint32_t max_omega = 0;
  for (KrId u = 0; u < n; ++u) max_omega = std::max(max_omega, deg.omega[u]);

  BucketQueue bq(max_omega, n);
  for (KrId u = 0; u < n; ++u)
    if (deg.omega[u] > 0) bq.insert(u, deg.omega[u]);

  std::vector<char> processed(n, 0);
  AdjPairList pairs;
  std::vector<std::size_t> pending;  // pair slots awaiting comp[u]

  while (auto top = bq.pop_min()) {
    auto [u, val] = *top;
    lambda[u] = val;
    res.lambdas.max_lambda = std::max(res.lambdas.max_lambda, val);
    pending.clear();

    idx.for_each_containing_ks(g, u, [&](KsClique c) {
      // Witness: processed constituent of minimum lambda, if any.
      KrId w = kInvalidClique;
      std::uint32_t w_lambda = 0;
      std::uint64_t ties = 0;
      for (KrId v : c) {
        if (v == u || !processed[v]) continue;
        if (w == kInvalidClique || lambda[v] < w_lambda) {
          w = v;
          w_lambda = lambda[v];
          ties = 1;
        } else if (lambda[v] == w_lambda) {
          if (tie == TieBreak::lowest_id) {
            if (v < w) w = v;
          } else {
            ++ties;
            if (std::uniform_int_distribution<std::uint64_t>(0, ties - 1)(
                    rng) == 0)
              w = v;
          }
        }
      }

      if (w == kInvalidClique) {
        // Clique still intact: peel it away from the others.
        for (KrId v : c)
          if (v != u && bq.value(v) > val) bq.decrement(v);
        return;
      }

      assert(w_lambda <= val);
      if (w_lambda == val) {
        if (comp[u] == kNoNode)
          comp[u] = comp[w];
        else
          union_r(hrc, comp[u], comp[w]);
      } else {
        pairs.push_back(AdjacencyPair{comp[u], comp[w]});
        if (comp[u] == kNoNode) pending.push_back(pairs.size() - 1);
      }
    });

    if (comp[u] == kNoNode) {
      comp[u] = static_cast<std::int32_t>(hrc.size());
      hrc.push_back(SubnucleusNode{val, 0, kNoNode, kNoNode});
    }
    for (std::size_t slot : pending) pairs[slot].higher = comp[u];
    processed[u] = 1;
  }

  res.skeleton.max_lambda = res.lambdas.max_lambda;
  res.tstar_count = hrc.size();
  res.adj_pair_count = pairs.size();
  res.peel_seconds = seconds_since(t0);

  auto t1 = std::chrono::steady_clock::now();
  build_hierarchy(pairs, res.skeleton);
  attach_root(res.skeleton);
  res.post_seconds = seconds_since(t1);
  return res;
}

void build_hierarchy(const AdjPairList& pairs, HierarchySkeleton& skel) {
  auto& hrc = skel.hrc;
  std::vector<std::vector<std::uint32_t>> bins(skel.max_lambda + 1);
  for (std::uint32_t i = 0; i < pairs.size(); ++i) {
    const auto& p = pairs[i];
    assert(p.higher != kNoNode && p.lower != kNoNode);
    auto low = hrc[p.lower].lambda;
    if (hrc[p.higher].lambda <= low)
      throw std::logic_error("adjacency pair does not cross levels");
    assert(low >= 1);
    bins[low].push_back(i);
  }

  std::vector<std::pair<std::int32_t, std::int32_t>> merges;
  for (std::uint32_t b = skel.max_lambda; b >= 1; --b) {
    merges.clear();
    for (auto pi : bins[b]) {
      const auto& p = pairs[pi];
      auto rs = find_r(hrc, p.higher);
      auto rt = find_r(hrc, p.lower);
      if (rs == rt) continue;
      auto ls = hrc[rs].lambda;
      auto lt = hrc[rt].lambda;
      assert(lt == b && ls >= b);
      if (ls == lt) {
        merges.emplace_back(rs, rt);
      } else {
        assert(hrc[rs].parent == kNoNode && hrc[rs].root == kNoNode);
        hrc[rs].parent = rt;
        hrc[rs].root = rt;
      }
    }
    for (auto [a, c] : merges) union_r(hrc, a, c);
  }
}

}  // namespace nucleus
