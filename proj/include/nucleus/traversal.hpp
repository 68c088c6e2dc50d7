#pragma once

#include <cstdint>

#include "nucleus/hierarchy.hpp"
#include "nucleus/peeling.hpp"

namespace nucleus {

/// Per-k breadth-first closure over K_rs: for each k from 1 to max lambda,
/// grow each unvisited lambda=k seed through K_ss whose min lambda is at
/// least k, then assemble the containment tree. Reference back-end.
NucleusTree naive_traversal(const Graph& g, const CliqueIndex& idx,
                            const LambdaTable& t, int r, int s);

/// Single pass per lambda level in decreasing order. Each scan claims one
/// sub-nucleus of strongly connected equal-lambda K_rs and ties the
/// representatives of touched higher-lambda sub-nuclei under it (strictly
/// higher: permanent parent; equal after find: deferred union). Returns
/// the finalized skeleton; condense() turns it into the tree.
HierarchySkeleton df_traversal(const Graph& g, const CliqueIndex& idx,
                               const LambdaTable& t, int r, int s);

struct HypoStats {
  std::uint64_t components = 0;
  std::uint64_t visited = 0;
};

/// Baseline cost probe: plain BFS over all K_rs through their K_ss with no
/// lambda conditions and no hierarchy bookkeeping.
HypoStats hypo_traversal(const Graph& g, const CliqueIndex& idx);

}  // namespace nucleus
