#pragma once

#include <cstdint>
#include <vector>

#include "nucleus/hierarchy.hpp"
#include "nucleus/peeling.hpp"

namespace nucleus {

/// Link between a sub-nucleus and one of strictly lower lambda, recorded
/// during peeling and resolved afterwards. `higher` may momentarily hold a
/// placeholder that is patched before the owning K_r finishes processing.
struct AdjacencyPair {
  std::int32_t higher;
  std::int32_t lower;
};

using AdjPairList = std::vector<AdjacencyPair>;

/// How to pick the witness among processed constituents that share the
/// minimum lambda. `lowest_id` is deterministic; `randomized` exists to
/// demonstrate the result does not depend on the choice.
enum class TieBreak { lowest_id, randomized };

struct FndResult {
  LambdaTable lambdas;
  HierarchySkeleton skeleton;
  std::uint64_t tstar_count = 0;    // sub-nuclei before the root is added
  std::uint64_t adj_pair_count = 0;
  double peel_seconds = 0.0;
  double post_seconds = 0.0;
};

/// Computes lambdas and the full hierarchy in one peeling pass plus a
/// linear post-processing step, with no per-level traversal.
FndResult fast_nucleus_decomposition(const Graph& g, const CliqueIndex& idx,
                                     int r, int s,
                                     TieBreak tie = TieBreak::lowest_id,
                                     std::uint64_t seed = 0);

/// Resolves the recorded pairs bottom-up: processed by the lambda of the
/// lower side from the highest level down, each pair either parents the
/// higher representative under the lower one or merges equal-lambda
/// representatives. Throws std::logic_error on a pair whose sides were
/// recorded with equal lambda.
void build_hierarchy(const AdjPairList& pairs, HierarchySkeleton& skel);

}  // namespace nucleus
