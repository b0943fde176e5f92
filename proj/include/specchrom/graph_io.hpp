#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "specchrom/graph.hpp"

namespace specchrom::io {

/// DIMACS .col: `c` comment lines, one `p edge <n> <m>` line (the format
/// token `col` is also accepted), then `e <u> <v>` lines. A declared edge
/// count that differs from the deduplicated count is reported through
/// `warnings`, not as an error.
Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings = nullptr);
Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings = nullptr);

/// Plain edge list: vertex count on the first line, then one `u v` pair per
/// line. Blank lines and lines starting with '#' are skipped.
Graph parse_edge_list(std::istream& in);

void write_dimacs(std::ostream& out, const Graph& g);

/// One color per line, line k is the color of vertex k.
std::vector<int> parse_coloring(std::istream& in);

/// Whitespace-separated n x n real matrix, one row per line.
WeightMatrix parse_weights(std::istream& in);

Graph read_graph_file(const std::string& path, bool dimacs, std::vector<std::string>* warnings = nullptr);

}  // namespace specchrom::io
