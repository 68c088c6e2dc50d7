#pragma once

#include <cstdint>
#include <vector>

namespace nucleus {

inline constexpr std::int32_t kNoNode = -1;

/// Node of the hierarchy-skeleton. `parent` is the permanent skeleton edge
/// toward the enclosing (lower-lambda) structure; `root` is the mutable
/// union-find shortcut toward the current representative. find never reads
/// or rewrites parent.
struct SubnucleusNode {
  std::uint32_t lambda = 0;
  std::uint32_t rank = 0;
  std::int32_t parent = kNoNode;
  std::int32_t root = kNoNode;
};

/// Representative of x's set: the end of the root chain. All nodes along
/// the chain are rewired to point at it directly.
std::int32_t find_r(std::vector<SubnucleusNode>& nodes, std::int32_t x);

/// Link two distinct representatives by rank; the loser gets both parent
/// and root set to the winner. On equal ranks the second argument wins and
/// its rank grows.
void link_r(std::vector<SubnucleusNode>& nodes, std::int32_t x, std::int32_t y);

/// Union by representatives; no-op when x and y already share one.
void union_r(std::vector<SubnucleusNode>& nodes, std::int32_t x, std::int32_t y);

}  // namespace nucleus
