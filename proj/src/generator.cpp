#include "nucleus/generator.hpp"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

namespace nucleus {

namespace {

using EdgeVec = std::vector<std::pair<VertexId, VertexId>>;

}  // namespace

Graph gen_erdos_renyi(VertexId n, double p, std::uint64_t seed) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("p outside [0,1]");
  std::mt19937_64 rng(seed);
  // Threshold compare on 53 uniform bits keeps the draw bit-identical
  // across standard libraries, unlike the float distributions.
  const auto threshold =
      p >= 1.0 ? (1ull << 53)
               : static_cast<std::uint64_t>(p * 9007199254740992.0);
  EdgeVec edges;
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if ((rng() >> 11) < threshold) edges.emplace_back(u, v);
  return Graph::from_simple(n, edges);
}

Graph gen_barabasi_albert(VertexId n, std::uint32_t attach,
                          std::uint64_t seed) {
  if (attach < 1) throw std::invalid_argument("attach must be positive");
  std::mt19937_64 rng(seed);
  const VertexId m0 = attach + 1;
  if (n < m0) throw std::invalid_argument("n too small for attach");
  EdgeVec edges;
  std::vector<VertexId> ends;  // one entry per edge endpoint
  for (VertexId u = 0; u < m0; ++u)
    for (VertexId v = u + 1; v < m0; ++v) {
      edges.emplace_back(u, v);
      ends.push_back(u);
      ends.push_back(v);
    }
  std::vector<VertexId> picked;
  for (VertexId v = m0; v < n; ++v) {
    picked.clear();
    while (picked.size() < attach) {
      VertexId t = ends[rng() % ends.size()];
      bool dup = false;
      for (VertexId q : picked) dup |= (q == t);
      if (!dup) picked.push_back(t);
    }
    for (VertexId t : picked) {
      edges.emplace_back(t, v);
      ends.push_back(t);
      ends.push_back(v);
    }
  }
  return Graph::from_simple(n, edges);
}

Graph gen_planted_nested_cliques(VertexId n, std::uint64_t target_m,
                                 int chains, int top, int levels,
                                 double ratio, std::uint64_t seed) {
  if (chains < 1 || top < 3 || levels < 1 || ratio <= 0.0 || ratio >= 1.0)
    throw std::invalid_argument("bad planted parameters");
  std::mt19937_64 rng(seed);
  EdgeVec edges;
  VertexId cur = 0;
  for (int c = 0; c < chains; ++c) {
    VertexId prev_first = 0;
    bool have_prev = false;
    for (int l = 0; l < levels; ++l) {
      auto size = static_cast<VertexId>(
          std::lround(top * std::pow(ratio, l)));
      if (size < 3) size = 3;
      if (cur + size > n)
        throw std::invalid_argument("n too small for the planted cliques");
      for (VertexId i = 0; i < size; ++i)
        for (VertexId j = i + 1; j < size; ++j)
          edges.emplace_back(cur + i, cur + j);
      if (have_prev) edges.emplace_back(prev_first, cur);
      prev_first = cur;
      have_prev = true;
      cur += size;
    }
  }
  while (edges.size() < target_m) {
    auto u = static_cast<VertexId>(rng() % n);
    auto v = static_cast<VertexId>(rng() % n);
    if (u != v) edges.emplace_back(u, v);
  }
  return Graph::from_simple(n, edges);
}

}  // namespace nucleus
