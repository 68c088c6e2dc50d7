#include <random>
#include <vector>

#include "doctest.h"
#include "nucleus/dsf.hpp"

using namespace nucleus;

namespace {

std::vector<SubnucleusNode> make_nodes(std::size_t n, std::uint32_t lambda = 4) {
  return std::vector<SubnucleusNode>(n, SubnucleusNode{lambda, 0, kNoNode, kNoNode});
}

// Same linking rules, but find never rewrites anything.
struct PlainDsu {
  std::vector<std::int32_t> parent;
  std::vector<std::uint32_t> rank;
  explicit PlainDsu(std::size_t n) : parent(n, kNoNode), rank(n, 0) {}
  std::int32_t find(std::int32_t x) const {
    while (parent[x] != kNoNode) x = parent[x];
    return x;
  }
  void unite(std::int32_t a, std::int32_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank[a] > rank[b]) {
      parent[b] = a;
    } else {
      parent[a] = b;
      if (rank[a] == rank[b]) ++rank[b];
    }
  }
};

}  // namespace

TEST_CASE("find on a fresh node returns itself and leaves root unset") {
  auto ns = make_nodes(3);
  CHECK(find_r(ns, 2) == 2);
  CHECK(ns[2].root == kNoNode);
  CHECK(ns[2].parent == kNoNode);
}

TEST_CASE("equal ranks: second argument wins and gains rank") {
  auto ns = make_nodes(2);
  link_r(ns, 0, 1);
  CHECK(find_r(ns, 0) == 1);
  CHECK(find_r(ns, 1) == 1);
  CHECK(ns[0].parent == 1);
  CHECK(ns[0].root == 1);
  CHECK(ns[1].rank == 1);
  CHECK(ns[1].parent == kNoNode);
}

TEST_CASE("higher rank wins regardless of argument order") {
  auto ns = make_nodes(3);
  link_r(ns, 0, 1);         // 1 wins, rank 1
  union_r(ns, 2, 1);        // 1 wins again (rank 1 vs 0)
  CHECK(find_r(ns, 2) == 1);
  CHECK(ns[2].parent == 1);
}

TEST_CASE("union is a no-op inside one set") {
  auto ns = make_nodes(3);
  union_r(ns, 0, 1);
  union_r(ns, 1, 0);
  union_r(ns, 0, 0);
  CHECK(find_r(ns, 0) == find_r(ns, 1));
  CHECK(ns[2].parent == kNoNode);
}

TEST_CASE("find compresses the root chain but not the terminal") {
  auto ns = make_nodes(4);
  link_r(ns, 0, 1);  // rep 1, rank 1
  link_r(ns, 2, 3);  // rep 3, rank 1
  union_r(ns, 1, 3); // equal rank: 3 wins, rank 2
  CHECK(find_r(ns, 0) == 3);
  CHECK(ns[0].root == 3);    // rewritten from 1
  CHECK(ns[0].parent == 1);  // permanent link untouched
  CHECK(ns[3].root == kNoNode);
}

TEST_CASE("parents stay acyclic and permanent over random operations") {
  const std::size_t n = 300;
  auto ns = make_nodes(n);
  std::vector<std::int32_t> first_parent(n, kNoNode);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 3000; ++i) {
    auto a = static_cast<std::int32_t>(rng() % n);
    auto b = static_cast<std::int32_t>(rng() % n);
    union_r(ns, a, b);
    for (std::size_t v = 0; v < n; ++v) {
      if (first_parent[v] == kNoNode) first_parent[v] = ns[v].parent;
      CHECK(first_parent[v] == ns[v].parent);
    }
  }
  for (std::size_t v = 0; v < n; ++v) {
    std::size_t hops = 0;
    std::int32_t x = static_cast<std::int32_t>(v);
    while (ns[x].parent != kNoNode && hops <= n) {
      x = ns[x].parent;
      ++hops;
    }
    CHECK(hops <= n);
  }
}

TEST_CASE("differential against a compression-free reference") {
  const std::size_t n = 500;
  auto ns = make_nodes(n);
  PlainDsu ref(n);
  std::mt19937_64 rng(42);
  for (int i = 0; i < 10000; ++i) {
    auto a = static_cast<std::int32_t>(rng() % n);
    auto b = static_cast<std::int32_t>(rng() % n);
    if (rng() % 10 < 7) {
      union_r(ns, a, b);
      ref.unite(a, b);
    } else {
      CHECK(find_r(ns, a) == ref.find(a));
    }
  }
  for (std::size_t v = 0; v < n; ++v)
    CHECK(find_r(ns, static_cast<std::int32_t>(v)) ==
          ref.find(static_cast<std::int32_t>(v)));
}
