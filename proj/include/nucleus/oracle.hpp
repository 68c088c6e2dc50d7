#pragma once

#include "nucleus/graph.hpp"
#include "nucleus/hierarchy.hpp"
#include "nucleus/peeling.hpp"

namespace nucleus {

// Brute-force references for small graphs. Cliques are enumerated from
// scratch in lexicographic vertex order, so K_r ids coincide with the
// clique index numbering and results are directly comparable.

/// Per-k repeated deletion: for each k, strip K_rs whose K_s-degree in the
/// surviving set is below k until stable; survivors have lambda >= k.
LambdaTable oracle_lambda(const Graph& g, int r, int s);

/// Literal nucleus enumeration: for each k, the K_s-connected components
/// of the k-surviving set, duplicates across k kept at their highest k,
/// assembled into a tree by set containment.
NucleusTree oracle_nuclei(const Graph& g, int r, int s);

}  // namespace nucleus
