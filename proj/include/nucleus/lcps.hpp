#pragma once

#include <cstdint>

#include "nucleus/hierarchy.hpp"
#include "nucleus/peeling.hpp"

namespace nucleus {

struct LcpsStats {
  std::uint64_t pushes = 0;    // queue insertions, duplicates included
  std::uint64_t pops = 0;      // extractions, stale entries included
  std::uint64_t restarts = 0;  // seeds, one per connected component
};

/// Priority-first search building the vertex core hierarchy in one pass.
/// A vertex's priority is its connection level: the best min(lambda(u),
/// lambda(v)) over processed neighbors u. Visiting in descending priority
/// keeps the open cores on a single stack, so each pop either deepens the
/// current chain or closes the chain down to the connection level.
/// Applies to (r,s) = (1,2) only; r is taken to make that explicit.
/// Throws std::invalid_argument for r != 1 or a mismatched lambda table.
NucleusTree lcps_core(const Graph& g, const LambdaTable& t, int r,
                      LcpsStats* stats = nullptr);

}  // namespace nucleus
