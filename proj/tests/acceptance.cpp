// Acceptance gate: one line per criterion, nonzero exit if any fails.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "corpus.hpp"
#include "def2_check.hpp"
#include "fixtures.hpp"
#include "nucleus/dsf.hpp"
#include "nucleus/fnd.hpp"
#include "nucleus/generator.hpp"
#include "nucleus/hierarchy.hpp"
#include "nucleus/lcps.hpp"
#include "nucleus/oracle.hpp"
#include "nucleus/peeling.hpp"
#include "nucleus/traversal.hpp"

using namespace nucleus;
using Clock = std::chrono::steady_clock;

namespace {

constexpr double kOracleBudgetSeconds = 60.0;
constexpr double kPlantedBudgetSeconds = 120.0;
constexpr double kTraversalOverPeelRatio = 3.0;
constexpr std::size_t kDsfOps = 100000;
constexpr std::pair<int, int> kFlavors[] = {{1, 2}, {2, 3}, {3, 4}};

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<Graph> full_corpus() {
  std::vector<Graph> graphs = corpus::tiny();
  std::vector<Graph> rnd = corpus::random_graphs();
  graphs.insert(graphs.end(), rnd.begin(), rnd.end());
  return graphs;
}

std::vector<Graph> named_fixtures() {
  return {fixtures::star(10), fixtures::bowtie(), fixtures::two_k4_path(),
          fixtures::clique_chain()};
}

NucleusTree reference_tree(const Graph& g, const CliqueIndex& idx,
                           const LambdaTable& t, int r, int s) {
  return naive_traversal(g, idx, t, r, s);
}

// C1: peeling lambdas equal the brute-force reference on every small graph.
bool c1(std::string& detail) {
  auto t0 = Clock::now();
  std::vector<Graph> graphs = full_corpus();
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    for (auto [r, s] : kFlavors) {
      CliqueIndex idx = build_clique_index(g, r);
      LambdaTable fast = set_lambda(g, idx, r, s);
      LambdaTable slow = oracle_lambda(g, r, s);
      if (fast.lambda != slow.lambda || fast.max_lambda != slow.max_lambda) {
        detail = "mismatch on corpus graph " + std::to_string(i) + " at (" +
                 std::to_string(r) + "," + std::to_string(s) + ")";
        return false;
      }
    }
  }
  double sec = seconds_since(t0);
  char buf[128];
  std::snprintf(buf, sizeof buf, "%zu graphs, 3 flavors each, %.1fs",
                graphs.size(), sec);
  detail = buf;
  return sec < kOracleBudgetSeconds;
}

// C2: every back-end serializes to the identical hierarchy tree.
bool c2(std::string& detail) {
  std::vector<Graph> graphs = full_corpus();
  std::vector<Graph> fx = named_fixtures();
  graphs.insert(graphs.end(), fx.begin(), fx.end());
  std::size_t trees = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    for (auto [r, s] : kFlavors) {
      CliqueIndex idx = build_clique_index(g, r);
      LambdaTable t = set_lambda(g, idx, r, s);
      NucleusTree ref = reference_tree(g, idx, t, r, s);

      NucleusTree dft = condense(df_traversal(g, idx, t, r, s), r, s);
      if (!trees_equal(ref, dft)) {
        detail = "traversal disagreement on graph " + std::to_string(i) +
                 ": " + tree_diff(ref, dft);
        return false;
      }
      FndResult fr = fast_nucleus_decomposition(g, idx, r, s);
      NucleusTree fnd = condense(fr.skeleton, r, s);
      if (!trees_equal(ref, fnd)) {
        detail = "one-pass disagreement on graph " + std::to_string(i) +
                 ": " + tree_diff(ref, fnd);
        return false;
      }
      trees += 2;
      if (r == 1) {
        NucleusTree lc = lcps_core(g, t, 1);
        if (!trees_equal(ref, lc)) {
          detail = "connection-level disagreement on graph " +
                   std::to_string(i) + ": " + tree_diff(ref, lc);
          return false;
        }
        ++trees;
      }
    }
  }
  detail = std::to_string(trees) + " trees compared, zero tolerance";
  return true;
}

// C3: each reported nucleus satisfies the degree, connectivity and
// maximality conditions when rechecked directly against the graph.
bool c3(std::string& detail) {
  std::vector<Graph> graphs = full_corpus();
  graphs.push_back(fixtures::star(6));
  graphs.push_back(fixtures::bowtie());
  graphs.push_back(fixtures::two_k4_path());
  std::size_t nodes = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    if (g.vertex_count() > 12) continue;
    for (auto [r, s] : kFlavors) {
      CliqueIndex idx = build_clique_index(g, r);
      FndResult fr = fast_nucleus_decomposition(g, idx, r, s);
      NucleusTree t = condense(fr.skeleton, r, s);
      std::string err = def2::check_tree(g, idx, t);
      if (!err.empty()) {
        detail = "graph " + std::to_string(i) + " (" + std::to_string(r) +
                 "," + std::to_string(s) + "): " + err;
        return false;
      }
      nodes += t.nodes.size() - 1;
    }
  }
  detail = std::to_string(nodes) + " nuclei rechecked against the definition";
  return true;
}

// C4: the one-pass decomposition reproduces peeling lambdas exactly.
bool c4(std::string& detail) {
  std::vector<Graph> graphs = full_corpus();
  std::size_t tables = 0;
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    for (auto [r, s] : kFlavors) {
      CliqueIndex idx = build_clique_index(g, r);
      LambdaTable ref = set_lambda(g, idx, r, s);
      FndResult fr = fast_nucleus_decomposition(g, idx, r, s);
      if (fr.lambdas.lambda != ref.lambda) {
        detail = "lambda mismatch on corpus graph " + std::to_string(i);
        return false;
      }
      ++tables;
    }
  }
  detail = std::to_string(tables) + " lambda tables, exact equality";
  return true;
}

// C5: sub-nucleus and adjacency counts respect their analytic bounds.
bool c5(std::string& detail) {
  std::vector<Graph> graphs = full_corpus();
  std::vector<Graph> fx = named_fixtures();
  graphs.insert(graphs.end(), fx.begin(), fx.end());
  for (std::size_t i = 0; i < graphs.size(); ++i) {
    const Graph& g = graphs[i];
    for (auto [r, s] : kFlavors) {
      CliqueIndex idx = build_clique_index(g, r);
      LambdaTable t = set_lambda(g, idx, r, s);
      HierarchySkeleton skel = df_traversal(g, idx, t, r, s);
      std::uint64_t traversal_subnuclei = skel.hrc.size() - 1;
      FndResult fr = fast_nucleus_decomposition(g, idx, r, s);
      if (fr.tstar_count < traversal_subnuclei) {
        detail = "graph " + std::to_string(i) + " (" + std::to_string(r) +
                 "," + std::to_string(s) +
                 "): one-pass made fewer sub-nuclei than traversal";
        return false;
      }
      DegreeTable deg = s_degrees(g, idx, r, s);
      std::uint64_t total = 0;
      for (std::uint32_t w : deg.omega) total += w;
      std::uint64_t ks_count = total / static_cast<std::uint64_t>(s);
      if (fr.adj_pair_count > static_cast<std::uint64_t>(s) * ks_count) {
        detail = "graph " + std::to_string(i) +
                 ": adjacency pairs exceed s times the K_s count";
        return false;
      }
    }
  }
  for (VertexId n : {5u, 10u, 50u}) {
    Graph star = fixtures::star(n);
    CliqueIndex idx = build_clique_index(star, 1);
    FndResult fr = fast_nucleus_decomposition(star, idx, 1, 2);
    LambdaTable t = set_lambda(star, idx, 1, 2);
    HierarchySkeleton skel = df_traversal(star, idx, t, 1, 2);
    if (fr.tstar_count != n - 1 || skel.hrc.size() - 1 != 1) {
      detail = "star on " + std::to_string(n) +
               " vertices: expected n-1 one-pass sub-nuclei and 1 traversal "
               "sub-nucleus";
      return false;
    }
  }
  detail = "bounds held on all instances; stars split as predicted";
  return true;
}

// C6: planted-clique benchmark obeys the work and time bounds.
bool c6(std::string& detail) {
  auto t0 = Clock::now();
  Graph g = gen_planted_nested_cliques(4000, 50000, 6, 40, 4, 0.7, 2026);
  std::uint64_t m = g.edge_count();
  if (m < 45000 || m > 55000) {
    detail = "planted graph has " + std::to_string(m) +
             " edges, outside [45000, 55000]";
    return false;
  }

  CliqueIndex edges = build_clique_index(g, 2);
  auto tp = Clock::now();
  LambdaTable trusses = set_lambda(g, edges, 2, 3);
  double t_peel = seconds_since(tp);
  tp = Clock::now();
  HierarchySkeleton skel = df_traversal(g, edges, trusses, 2, 3);
  double t_dft = seconds_since(tp);
  (void)skel;
  tp = Clock::now();
  NucleusTree ref = naive_traversal(g, edges, trusses, 2, 3);
  double t_naive = seconds_since(tp);
  FndResult fr = fast_nucleus_decomposition(g, edges, 2, 3);
  tp = Clock::now();
  NucleusTree fnd = condense(fr.skeleton, 2, 3);
  double t_condense = seconds_since(tp);
  double fnd_total = fr.peel_seconds + fr.post_seconds + t_condense;
  double naive_total = t_peel + t_naive;
  if (!trees_equal(ref, fnd)) {
    detail = "back-ends disagree on the planted graph: " + tree_diff(ref, fnd);
    return false;
  }

  CliqueIndex verts = build_clique_index(g, 1);
  LambdaTable cores = set_lambda(g, verts, 1, 2);
  LcpsStats st;
  NucleusTree lc = lcps_core(g, cores, 1, &st);
  (void)lc;

  double wall = seconds_since(t0);
  char buf[256];
  std::snprintf(buf, sizeof buf,
                "m=%llu, traversal %.3fs vs peel %.3fs, one-pass %.3fs vs "
                "level-by-level %.3fs, pushes %llu of %llu allowed, %.1fs",
                static_cast<unsigned long long>(m), t_dft, t_peel, fnd_total,
                naive_total, static_cast<unsigned long long>(st.pushes),
                static_cast<unsigned long long>(2 * m), wall);
  detail = buf;
  if (t_dft > kTraversalOverPeelRatio * t_peel) return false;
  if (fnd_total > naive_total) return false;
  if (st.pushes > 2 * m) return false;
  return wall < kPlantedBudgetSeconds;
}

// Compression-free mirror of the same union rules.
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

// C7: the path-compressed forest stays equivalent to a plain reference.
bool c7(std::string& detail) {
  const std::size_t n = 5000;
  std::vector<SubnucleusNode> ns(n, SubnucleusNode{0, 0, kNoNode, kNoNode});
  PlainDsu ref(n);
  std::mt19937_64 rng(20260815ull);
  std::uniform_int_distribution<std::int32_t> pick(0,
                                                   static_cast<int>(n) - 1);
  for (std::size_t op = 0; op < kDsfOps; ++op) {
    std::int32_t a = pick(rng), b = pick(rng);
    if (rng() % 10 < 7) {
      union_r(ns, a, b);
      ref.unite(a, b);
    } else if (find_r(ns, a) != ref.find(a)) {
      detail = "find diverged at op " + std::to_string(op);
      return false;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (find_r(ns, static_cast<std::int32_t>(i)) !=
        ref.find(static_cast<std::int32_t>(i))) {
      detail = "final representative differs at node " + std::to_string(i);
      return false;
    }
    std::int32_t x = static_cast<std::int32_t>(i);
    std::size_t steps = 0;
    while (ns[x].parent != kNoNode) {
      x = ns[x].parent;
      if (++steps > n) {
        detail = "parent cycle through node " + std::to_string(i);
        return false;
      }
    }
  }
  detail = std::to_string(kDsfOps) + " ops over " + std::to_string(n) +
           " nodes, finds and parents verified";
  return true;
}

int run(int num, const char* name, bool (*fn)(std::string&)) {
  std::string detail;
  bool ok = fn(detail);
  std::printf("[%s] C%d %s%s%s%s\n", ok ? "PASS" : "FAIL", num, name,
              detail.empty() ? "" : " (", detail.c_str(),
              detail.empty() ? "" : ")");
  std::fflush(stdout);
  return ok ? 0 : 1;
}

}  // namespace

int main() {
  int failures = 0;
  failures += run(1, "peeling matches the brute-force reference", c1);
  failures += run(2, "all back-ends emit the identical hierarchy", c2);
  failures += run(3, "reported nuclei satisfy the defining conditions", c3);
  failures += run(4, "one-pass lambdas equal peeling lambdas", c4);
  failures += run(5, "sub-nucleus and adjacency counts stay in bounds", c5);
  failures += run(6, "planted benchmark meets the work and time bounds", c6);
  failures += run(7, "compressed set forest matches the plain reference", c7);
  return failures == 0 ? 0 : 1;
}
