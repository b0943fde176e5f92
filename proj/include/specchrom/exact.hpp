#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specchrom/graph.hpp"

namespace specchrom {

/// Vertex coloring; colors[i] is the color (1..colors_used) of vertex index i.
struct Coloring {
  std::vector<int> colors;
  int colors_used = 0;
};

/// Largest-degree-first greedy (ties by lowest index), smallest free color.
Coloring greedy_coloring(const Graph& g);

struct ChromaticResult {
  std::optional<int> exact;  ///< empty when the node budget ran out
  int lower = 0;
  int upper = 0;
  Coloring best;  ///< proper coloring with `upper` colors
  std::uint64_t nodes = 0;
};

/// Exact chromatic number by DSATUR branch and bound. Branches on the
/// uncolored vertex with the highest saturation, then highest degree, then
/// lowest index. A greedy clique is precolored and gives the lower bound;
/// greedy and DSATUR colorings seed the upper bound. Deterministic.
ChromaticResult chromatic_number(const Graph& g, std::uint64_t node_budget = 10'000'000);

struct CliqueResult {
  std::optional<int> exact;
  int lower = 0;
  int upper = 0;
  std::vector<int> witness;  ///< vertex indices of the best clique found
  std::uint64_t nodes = 0;
};

/// Maximum clique by branch and bound with a greedy-coloring bound.
CliqueResult max_clique(const Graph& g, std::uint64_t node_budget = 10'000'000);

/// Maximum independent set, as a maximum clique of the complement.
CliqueResult independence_number(const Graph& g, std::uint64_t node_budget = 10'000'000);

/// True when `colors` has one entry per vertex, all in 1..c, and no edge is
/// monochromatic.
bool is_proper(const Graph& g, const std::vector<int>& colors, int c);

}  // namespace specchrom
