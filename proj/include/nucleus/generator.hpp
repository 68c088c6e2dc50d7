#pragma once

#include <cstdint>

#include "nucleus/graph.hpp"

namespace nucleus {

Graph gen_erdos_renyi(VertexId n, double p, std::uint64_t seed);

/// Preferential attachment, `attach` edges per new vertex.
Graph gen_barabasi_albert(VertexId n, std::uint32_t attach, std::uint64_t seed);

/// Several chains of disjoint cliques with geometrically shrinking sizes,
/// consecutive cliques in a chain bridged by one edge, plus uniform random
/// background edges until roughly `target_m` edges exist in total. Gives a
/// deep, branchy hierarchy with a known shape at controllable scale.
Graph gen_planted_nested_cliques(VertexId n, std::uint64_t target_m,
                                 int chains, int top, int levels,
                                 double ratio, std::uint64_t seed);

}  // namespace nucleus
