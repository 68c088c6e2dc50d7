#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "nucleus/clique_index.hpp"
#include "nucleus/fnd.hpp"
#include "nucleus/generator.hpp"
#include "nucleus/graph.hpp"
#include "nucleus/hierarchy.hpp"
#include "nucleus/lcps.hpp"
#include "nucleus/oracle.hpp"
#include "nucleus/peeling.hpp"
#include "nucleus/traversal.hpp"

namespace {

using namespace nucleus;

struct Stopwatch {
  std::chrono::steady_clock::time_point t = std::chrono::steady_clock::now();
  double lap() {
    auto n = std::chrono::steady_clock::now();
    double d = std::chrono::duration<double>(n - t).count();
    t = n;
    return d;
  }
};

struct RunOut {
  NucleusTree tree;
  double peel_s = 0.0;
  double post_s = 0.0;
  std::uint64_t t_count = 0;     // sub-nuclei (or nuclei) the back-end built
  std::int64_t tstar = -1;       // fnd only
  std::int64_t adj = -1;         // fnd only
  LcpsStats lcps;                // lcps only
};

RunOut run_algo(const std::string& algo, const Graph& g,
                const CliqueIndex& idx, int r, int s) {
  RunOut out;
  Stopwatch sw;
  if (algo == "naive") {
    LambdaTable t = set_lambda(g, idx, r, s);
    out.peel_s = sw.lap();
    out.tree = naive_traversal(g, idx, t, r, s);
    out.post_s = sw.lap();
    out.t_count = out.tree.nodes.size() - 1;
  } else if (algo == "dft") {
    LambdaTable t = set_lambda(g, idx, r, s);
    out.peel_s = sw.lap();
    HierarchySkeleton skel = df_traversal(g, idx, t, r, s);
    out.t_count = skel.hrc.size() - 1;  // without the root
    out.tree = condense(skel, r, s);
    out.post_s = sw.lap();
  } else if (algo == "fnd") {
    FndResult res = fast_nucleus_decomposition(g, idx, r, s);
    out.tree = condense(res.skeleton, r, s);
    sw.lap();
    out.peel_s = res.peel_seconds;
    out.post_s = res.post_seconds;
    out.tstar = static_cast<std::int64_t>(res.tstar_count);
    out.adj = static_cast<std::int64_t>(res.adj_pair_count);
    out.t_count = out.tree.nodes.size() - 1;
  } else if (algo == "lcps") {
    LambdaTable t = set_lambda(g, idx, r, s);
    out.peel_s = sw.lap();
    out.tree = lcps_core(g, t, r, &out.lcps);
    out.post_s = sw.lap();
    out.t_count = out.tree.nodes.size() - 1;
  }
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot open output file: " + path);
  f << text;
}

std::string fmt_count(std::int64_t v) {
  return v < 0 ? std::string("-") : std::to_string(v);
}

int run_bench(const Graph& g, int r, int s, const std::string& output) {
  std::ostringstream rep;
  char line[256];

  Stopwatch sw;
  CliqueIndex idx = build_clique_index(g, r);
  double index_s = sw.lap();
  rep << "graph: n=" << g.vertex_count() << " m=" << g.edge_count() << "\n";
  std::snprintf(line, sizeof line, "index: r=%d count=%u build_s=%.6f\n",
                r, idx.count(), index_s);
  rep << line;
  std::snprintf(line, sizeof line, "%-8s %-11s %-11s %-11s %-9s %-9s %-9s\n",
                "algo", "peel_s", "post_s", "total_s", "|T|", "|T*|",
                "|ADJ|");
  rep << line;

  std::vector<std::string> algos{"naive", "dft", "fnd"};
  if (r == 1) algos.push_back("lcps");
  LcpsStats lcps_stats;
  for (const auto& a : algos) {
    RunOut out = run_algo(a, g, idx, r, s);
    std::snprintf(line, sizeof line,
                  "%-8s %-11.6f %-11.6f %-11.6f %-9s %-9s %-9s\n", a.c_str(),
                  out.peel_s, out.post_s, out.peel_s + out.post_s,
                  fmt_count(static_cast<std::int64_t>(out.t_count)).c_str(),
                  fmt_count(out.tstar).c_str(), fmt_count(out.adj).c_str());
    rep << line;
    if (a == "lcps") lcps_stats = out.lcps;
  }
  {
    Stopwatch hw;
    LambdaTable t = set_lambda(g, idx, r, s);
    double peel = hw.lap();
    HypoStats hs = hypo_traversal(g, idx);
    double post = hw.lap();
    std::snprintf(line, sizeof line,
                  "%-8s %-11.6f %-11.6f %-11.6f %-9s %-9s %-9s\n", "hypo",
                  peel, post, peel + post,
                  std::to_string(hs.components).c_str(), "-", "-");
    rep << line;
    (void)t;
  }
  if (r == 1) {
    rep << "lcps stats: pushes=" << lcps_stats.pushes
        << " pops=" << lcps_stats.pops
        << " restarts=" << lcps_stats.restarts << "\n";
  }
  write_text(output, rep.str());
  return 0;
}

int run_verify(const Graph& g, const CliqueIndex& idx, const NucleusTree& tree,
               int r, int s) {
  const VertexId limit = r == 3 ? 15 : 20;
  if (g.vertex_count() > limit) {
    std::cerr << "error: --verify is limited to " << limit
              << " vertices for --rs " << r << s << "\n";
    return 2;
  }
  LambdaTable fast = set_lambda(g, idx, r, s);
  LambdaTable ref = oracle_lambda(g, r, s);
  if (fast.lambda != ref.lambda) {
    for (KrId u = 0; u < fast.lambda.size(); ++u)
      if (fast.lambda[u] != ref.lambda[u]) {
        std::cerr << "verify: lambda mismatch at K_r " << u << ": got "
                  << fast.lambda[u] << ", reference says " << ref.lambda[u]
                  << "\n";
        break;
      }
    return 1;
  }
  NucleusTree ref_tree = oracle_nuclei(g, r, s);
  if (!trees_equal(tree, ref_tree)) {
    std::cerr << "verify: hierarchy mismatch: " << tree_diff(tree, ref_tree)
              << "\n";
    return 1;
  }
  std::cerr << "verify: ok (" << ref_tree.nodes.size() << " nodes)\n";
  return 0;
}

int run_gen(const std::string& model, VertexId n, double p,
            std::uint32_t attach, std::uint64_t target_m, int chains, int top,
            int levels, double ratio, std::uint64_t seed,
            const std::string& output) {
  Graph g;
  if (model == "er")
    g = gen_erdos_renyi(n, p, seed);
  else if (model == "ba")
    g = gen_barabasi_albert(n, attach, seed);
  else if (model == "nested")
    g = gen_planted_nested_cliques(n, target_m, chains, top, levels, ratio,
                                   seed);
  else {
    std::cerr << "error: unknown model '" << model << "'\n";
    return 2;
  }
  std::ostringstream body;
  for (VertexId u = 0; u < g.vertex_count(); ++u)
    for (VertexId v : g.neighbors(u))
      if (u < v) body << g.label(u) << ' ' << g.label(v) << '\n';
  write_text(output, body.str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"nucleus decomposition: vertex cores, edge trusses and "
               "triangle nuclei with their containment hierarchy"};

  int rs = 12;
  std::string algo = "fnd";
  std::string input, output;
  bool members = false, verify = false, bench = false;
  app.add_option("--rs", rs,
                 "flavor: 12 (vertex cores), 23 (edge trusses), 34 "
                 "(triangle nuclei)");
  app.add_option("--algo", algo, "naive | dft | fnd | lcps");
  app.add_option("--input", input, "edge list file (one 'u v' pair per line)");
  app.add_option("--output", output, "write here instead of stdout");
  app.add_flag("--members", members, "include member tuples in the output");
  app.add_flag("--verify", verify,
               "cross-check against the brute-force reference (small graphs)");
  app.add_flag("--bench", bench,
               "time every applicable back-end instead of emitting the tree");

  std::uint64_t seed = 12345;
  if (const char* env = std::getenv("NUCLEUS_SEED"))
    seed = std::strtoull(env, nullptr, 10);
  std::string model = "er", gen_output;
  VertexId gen_n = 1000;
  double gen_p = 0.05, gen_ratio = 0.7;
  std::uint32_t gen_attach = 3;
  std::uint64_t gen_target_m = 50000;
  int gen_chains = 6, gen_top = 40, gen_levels = 4;
  auto* gen = app.add_subcommand("gen", "emit a synthetic edge list");
  gen->add_option("--model", model, "er | ba | nested");
  gen->add_option("--n", gen_n, "vertex count");
  gen->add_option("--p", gen_p, "er edge probability");
  gen->add_option("--attach", gen_attach, "ba edges per vertex");
  gen->add_option("--target-m", gen_target_m, "nested: rough edge total");
  gen->add_option("--chains", gen_chains, "nested: clique chains");
  gen->add_option("--top", gen_top, "nested: largest clique size");
  gen->add_option("--levels", gen_levels, "nested: cliques per chain");
  gen->add_option("--ratio", gen_ratio, "nested: size decay per level");
  gen->add_option("--seed", seed, "rng seed (default: $NUCLEUS_SEED or 12345)");
  gen->add_option("--output", gen_output, "write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (gen->parsed())
      return run_gen(model, gen_n, gen_p, gen_attach, gen_target_m,
                     gen_chains, gen_top, gen_levels, gen_ratio, seed,
                     gen_output);

    if (rs != 12 && rs != 23 && rs != 34) {
      std::cerr << "error: --rs must be 12, 23 or 34\n";
      return 2;
    }
    if (algo != "naive" && algo != "dft" && algo != "fnd" && algo != "lcps") {
      std::cerr << "error: --algo must be naive, dft, fnd or lcps\n";
      return 2;
    }
    if (algo == "lcps" && rs != 12) {
      std::cerr << "error: --algo lcps applies to --rs 12 only\n";
      return 2;
    }
    if (input.empty()) {
      std::cerr << "error: --input is required\n";
      return 2;
    }
    const int r = rs / 10, s = rs % 10;

    Graph g = load_graph_file(input);
    if (bench) return run_bench(g, r, s, output);

    CliqueIndex idx = build_clique_index(g, r);
    RunOut out = run_algo(algo, g, idx, r, s);
    write_text(output, serialize(out.tree, g, idx, members));
    if (verify) return run_verify(g, idx, out.tree, r, s);
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
