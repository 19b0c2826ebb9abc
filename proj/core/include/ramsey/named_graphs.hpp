#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "ramsey/graph.hpp"

namespace ramsey {

Graph complete_graph(int n);
Graph edgeless_graph(int n);
/// Path on n vertices.
Graph path_graph(int n);
Graph cycle_graph(int n);
/// K_{1,q}, center is vertex 0.
Graph star_graph(int q);

/// Built-in graph names: kN, eN (edgeless), pN (path on N vertices), cN, star-Q,
/// and joins written "A+B" (e.g. "k2+e3"). Throws std::invalid_argument on
/// unknown names.
Graph named_graph(std::string_view name);

/// The 5-cycle coloring of K_5: cycle edges red, diagonals blue.
TwoColoring pentagon_coloring();

/// Each pair is blue independently with the given probability. The stream is
/// a fixed mt19937_64 consumed one draw per pair in row-major order, so the
/// result depends only on (n, blue_probability, seed).
TwoColoring random_coloring(int n, double blue_probability, std::uint64_t seed);

/// Built-in coloring names: all-red:N, all-blue:N, pentagon, random:N:P:SEED.
TwoColoring named_coloring(std::string_view name);

}  // namespace ramsey
