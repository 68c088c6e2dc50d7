#include "nucleus/peeling.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace nucleus {

LambdaTable set_lambda(const Graph& g, const CliqueIndex& idx, int r, int s,
                       std::vector<KrId>* extraction_order) {
  if (r != idx.order() || s != r + 1)
    throw std::invalid_argument("set_lambda: index order does not match (r,s)");

  const KrId n = idx.count();
  DegreeTable deg = s_degrees(g, idx, r, s);
  std::uint32_t max_deg = 0;
  for (std::uint32_t d : deg.omega) max_deg = std::max(max_deg, d);

  LambdaTable t;
  t.lambda.assign(n, 0);

  BucketQueue bq(max_deg, n);
  for (KrId u = 0; u < n; ++u)
    if (deg.omega[u] > 0) bq.insert(u, deg.omega[u]);

  std::vector<char> processed(n, 0);
  while (auto top = bq.pop_min()) {
    const auto [u, val] = *top;
    assert(val >= t.max_lambda);
    t.lambda[u] = val;
    t.max_lambda = val;
    idx.for_each_containing_ks(g, u, [&](KsClique cs) {
      for (KrId c : cs)
        if (c != u && processed[c]) return;  // K_s already broken
      for (KrId c : cs)
        if (c != u && bq.value(c) > val) bq.decrement(c);
    });
    processed[u] = 1;
    if (extraction_order) extraction_order->push_back(u);
  }
  return t;
}

}  // namespace nucleus
