#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nucleus/clique_index.hpp"
#include "nucleus/dsf.hpp"

namespace nucleus {

/// Forest of sub-nuclei as produced by the traversal or decomposition
/// back-ends. comp maps each K_r to the sub-nucleus that first claimed it;
/// members are closed downward only when the tree is reported.
struct HierarchySkeleton {
  std::vector<SubnucleusNode> hrc;
  std::vector<std::int32_t> comp;  // per K_r, kNoNode until claimed
  std::uint32_t max_lambda = 0;
  std::int32_t root = kNoNode;
};

/// Append the lambda=0 root, parent every parentless node to it and let it
/// claim every still-unassigned K_r (those with lambda 0).
void attach_root(HierarchySkeleton& skel);

struct NucleusNode {
  std::uint32_t k = 0;
  std::vector<KrId> members;  // downward-closed, ascending
  std::int32_t parent = kNoNode;

  bool operator==(const NucleusNode&) const = default;
};

/// Output tree in canonical order: nodes sorted by (k, members), parents
/// remapped accordingly, the k=0 root at index 0.
struct NucleusTree {
  int r = 1;
  int s = 2;
  std::vector<NucleusNode> nodes;
};

/// Contract every skeleton edge joining equal-lambda nodes and report the
/// resulting nucleus tree with downward-closed member sets. Throws
/// std::logic_error on a dangling comp entry.
NucleusTree condense(const HierarchySkeleton& skel, int r, int s);

bool trees_equal(const NucleusTree& a, const NucleusTree& b);

/// First structural difference between two canonical trees, for messages.
std::string tree_diff(const NucleusTree& a, const NucleusTree& b);

/// Assemble a tree from already-closed (k, member set) nuclei: each
/// nucleus is parented to its minimal strict superset, the rest to a
/// synthesized k=0 root covering all `universe` K_rs.
NucleusTree build_tree_by_containment(
    int r, int s, KrId universe,
    std::vector<std::pair<std::uint32_t, std::vector<KrId>>> nuclei);

/// Node with native members only; used by back-ends that already know the
/// parent structure and need closure plus canonical ordering.
struct ProtoNode {
  std::uint32_t k = 0;
  std::int32_t parent = kNoNode;
  std::vector<KrId> natives;
};

NucleusTree tree_from_protos(int r, int s, std::vector<ProtoNode> protos,
                             std::int32_t root);

/// Canonical JSON rendering: header with (r,s) and graph size, nodes with
/// id, k, size, parent and optionally the member tuples (original labels).
std::string serialize(const NucleusTree& t, const Graph& g,
                      const CliqueIndex& idx, bool with_members);

}  // namespace nucleus
