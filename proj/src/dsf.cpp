#include "nucleus/dsf.hpp"

#include <cassert>

namespace nucleus {

std::int32_t find_r(std::vector<SubnucleusNode>& nodes, std::int32_t x) {
  std::int32_t rep = x;
  while (nodes[rep].root != kNoNode) rep = nodes[rep].root;
  while (x != rep) {
    std::int32_t next = nodes[x].root;
    nodes[x].root = rep;
    x = next;
  }
  return rep;
}

void link_r(std::vector<SubnucleusNode>& nodes, std::int32_t x, std::int32_t y) {
  assert(x != y);
  assert(nodes[x].root == kNoNode && nodes[y].root == kNoNode);
  assert(nodes[x].parent == kNoNode && nodes[y].parent == kNoNode);
  if (nodes[x].rank > nodes[y].rank) {
    assert(nodes[y].lambda >= nodes[x].lambda);
    nodes[y].parent = x;
    nodes[y].root = x;
  } else {
    assert(nodes[x].lambda >= nodes[y].lambda);
    nodes[x].parent = y;
    nodes[x].root = y;
    if (nodes[x].rank == nodes[y].rank) ++nodes[y].rank;
  }
}

void union_r(std::vector<SubnucleusNode>& nodes, std::int32_t x, std::int32_t y) {
  std::int32_t rx = find_r(nodes, x);
  std::int32_t ry = find_r(nodes, y);
  if (rx == ry) return;
  link_r(nodes, rx, ry);
}

}  // namespace nucleus
