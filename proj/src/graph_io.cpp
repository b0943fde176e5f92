#include "specchrom/graph_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "specchrom/errors.hpp"

namespace specchrom::io {

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

// Reads exactly the listed integer fields from `ss` and rejects trailing junk.
template <class... Ts>
void fields(std::istringstream& ss, std::size_t lineno, const char* what, Ts&... out) {
  if (!((ss >> out) && ...)) throw ParseError(lineno, std::string("malformed ") + what + " line");
  std::string rest;
  if (ss >> rest) throw ParseError(lineno, std::string("unexpected token '") + rest + "' on " + what + " line");
}

Graph build(int n, const std::vector<std::pair<int, int>>& pairs, const std::vector<std::size_t>& lines) {
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    auto [u, v] = pairs[i];
    if (u < 1 || u > n || v < 1 || v > n)
      throw ParseError(lines[i], "vertex out of range 1.." + std::to_string(n));
    if (u == v) throw ParseError(lines[i], "self-loop at vertex " + std::to_string(u));
  }
  return Graph::from_edge_list(n, pairs);
}

}  // namespace

Graph parse_dimacs(std::istream& in, std::vector<std::string>* warnings) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  long declared_m = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream ss(line);
    std::string tag;
    ss >> tag;
    if (tag == "c") continue;
    if (tag == "p") {
      if (n >= 0) throw ParseError(lineno, "duplicate problem line");
      std::string format;
      if (!(ss >> format) || (format != "edge" && format != "col"))
        throw ParseError(lineno, "expected 'p edge <n> <m>'");
      fields(ss, lineno, "problem", n, declared_m);
      if (n < 0 || declared_m < 0) throw ParseError(lineno, "negative count on problem line");
    } else if (tag == "e") {
      if (n < 0) throw ParseError(lineno, "edge line before problem line");
      int u = 0, v = 0;
      fields(ss, lineno, "edge", u, v);
      pairs.emplace_back(u, v);
      lines.push_back(lineno);
    } else {
      throw ParseError(lineno, "unknown line type '" + tag + "'");
    }
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing 'p edge' problem line");
  Graph g = build(n, pairs, lines);
  if (warnings && static_cast<long>(g.m()) != declared_m)
    warnings->push_back("declared " + std::to_string(declared_m) + " edges, parsed " + std::to_string(g.m()) +
                        " distinct edges");
  return g;
}

Graph parse_dimacs(const std::string& text, std::vector<std::string>* warnings) {
  std::istringstream in(text);
  return parse_dimacs(in, warnings);
}

Graph parse_edge_list(std::istream& in) {
  std::string line;
  std::size_t lineno = 0;
  int n = -1;
  std::vector<std::pair<int, int>> pairs;
  std::vector<std::size_t> lines;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line) || line[line.find_first_not_of(" \t")] == '#') continue;
    std::istringstream ss(line);
    if (n < 0) {
      fields(ss, lineno, "vertex count", n);
      if (n < 0) throw ParseError(lineno, "negative vertex count");
      continue;
    }
    int u = 0, v = 0;
    fields(ss, lineno, "edge", u, v);
    pairs.emplace_back(u, v);
    lines.push_back(lineno);
  }
  if (n < 0) throw ParseError(lineno == 0 ? 1 : lineno, "missing vertex count line");
  return build(n, pairs, lines);
}

void write_dimacs(std::ostream& out, const Graph& g) {
  if (!g.name().empty()) out << "c " << g.name() << '\n';
  out << "p edge " << g.n() << ' ' << g.m() << '\n';
  for (const Edge& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
}

std::vector<int> parse_coloring(std::istream& in) {
  std::vector<int> colors;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (blank(line)) continue;
    std::istringstream ss(line);
    int c = 0;
    fields(ss, lineno, "color", c);
    if (c < 1) throw ParseError(lineno, "colors start at 1");
    colors.push_back(c);
  }
  return colors;
}

WeightMatrix parse_weights(std::istream& in) {
  std::vector<std::vector<double>> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (blank(line)) continue;
    std::istringstream ss(line);
    std::vector<double> row;
    double x = 0;
    while (ss >> x) row.push_back(x);
    if (!ss.eof()) throw ParseError(rows.size() + 1, "non-numeric weight entry");
    rows.push_back(std::move(row));
  }
  Matrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) throw ParseError(i + 1, "weight matrix must be square");
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = rows[i][j];
  }
  return WeightMatrix(std::move(m));
}

Graph read_graph_file(const std::string& path, bool dimacs, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  Graph g = dimacs ? parse_dimacs(in, warnings) : parse_edge_list(in);
  return g.renamed(path);
}

}  // namespace specchrom::io
