#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "specchrom/errors.hpp"
#include "specchrom/generators.hpp"
#include "specchrom/graph.hpp"
#include "specchrom/graph_io.hpp"
#include "specchrom/rng.hpp"

using namespace specchrom;

namespace {

int degree_sum(const Graph& g) {
  int s = 0;
  for (int i = 0; i < g.n(); ++i) s += g.degree(i);
  return s;
}

}  // namespace

TEST_CASE("from_edge_list builds and deduplicates") {
  const Graph k3 = Graph::from_edge_list(3, {{1, 2}, {2, 3}, {1, 3}});
  CHECK(k3.n() == 3);
  CHECK(k3.m() == 3);

  const Graph k2 = Graph::from_edge_list(2, {{1, 2}, {2, 1}});
  CHECK(k2.m() == 1);
  CHECK(k2.edges().front() == Edge{1, 2});
}

TEST_CASE("from_edge_list rejects bad input") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 1}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{1, 4}}), InputError);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 2}}), InputError);
}

TEST_CASE("adjacency matrix") {
  const Matrix k2 = adjacency_matrix(gen::complete(2));
  CHECK(k2(0, 1) == 1.0);
  CHECK(k2(1, 0) == 1.0);
  CHECK(k2(0, 0) == 0.0);

  const Matrix e3 = adjacency_matrix(gen::empty(3));
  CHECK(e3.max_abs() == 0.0);

  const Matrix c3 = adjacency_matrix(gen::cycle(3));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) CHECK(c3(i, j) == (i == j ? 0.0 : 1.0));

  const Graph p = gen::petersen();
  const Matrix a = adjacency_matrix(p);
  CHECK(a == a.transposed());
  for (int i = 0; i < p.n(); ++i) {
    const auto row = a.row(static_cast<std::size_t>(i));
    CHECK(std::accumulate(row.begin(), row.end(), 0.0) == p.degree(i));
  }
}

TEST_CASE("schur product") {
  const Graph p = gen::petersen();
  const Matrix a = adjacency_matrix(p);
  CHECK(schur_product(WeightMatrix::all_ones(10), a) == a);
  CHECK(schur_product(WeightMatrix(Matrix(10, 10)), a).max_abs() == 0.0);

  Matrix w(2, 2, 1.0);
  w(0, 1) = w(1, 0) = 2.0;
  const Matrix r = schur_product(WeightMatrix(w), adjacency_matrix(gen::complete(2)));
  CHECK(r(0, 1) == 2.0);
  CHECK(r(1, 0) == 2.0);
  CHECK(r(0, 0) == 0.0);

  CHECK_THROWS_AS(schur_product(WeightMatrix::all_ones(3), a), InputError);
  Matrix asym(2, 2);
  asym(0, 1) = 1.0;
  CHECK_THROWS_AS(WeightMatrix{asym}, InputError);
}

TEST_CASE("random symmetric weights are reproducible") {
  const auto w1 = WeightMatrix::random_symmetric(6, 42);
  const auto w2 = WeightMatrix::random_symmetric(6, 42);
  CHECK(w1.matrix() == w2.matrix());
  CHECK(w1.matrix() == w1.matrix().transposed());
  CHECK_FALSE(WeightMatrix::random_symmetric(6, 43).matrix() == w1.matrix());
}

TEST_CASE("generator sizes") {
  CHECK(gen::complete(4).m() == 6);
  CHECK(gen::cycle(7).m() == 7);
  CHECK(gen::path(5).m() == 4);
  CHECK(gen::star(4).m() == 3);
  CHECK(gen::complete_multipartite({2, 3}).m() == 6);
  CHECK(gen::complete_multipartite({3, 3, 3}).m() == 27);
  CHECK(gen::hypercube(4).m() == 32);

  const Graph bb = gen::barbell(8);
  CHECK(bb.n() == 16);
  CHECK(bb.m() == 8 * 7 + 1);
  CHECK(bb.adjacent(7, 8));

  const Graph bp = gen::barbell_path(5, 2);
  CHECK(bp.n() == 12);
  CHECK(bp.m() == 20 + 3);
}

TEST_CASE("petersen is kneser(5,2)") {
  const Graph p = gen::petersen();
  CHECK(p.n() == 10);
  CHECK(p.m() == 15);
  for (int i = 0; i < 10; ++i) CHECK(p.degree(i) == 3);

  // Independent construction: 2-subsets as bitmasks, joined when disjoint.
  std::vector<unsigned> sets;
  for (unsigned s = 0; s < 32; ++s)
    if (std::popcount(s) == 2) sets.push_back(s);
  int disjoint_pairs = 0;
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) disjoint_pairs += (sets[i] & sets[j]) == 0;
  CHECK(disjoint_pairs == 15);
}

TEST_CASE("kneser parameter checks") {
  CHECK_THROWS_AS(gen::kneser(3, 2), InputError);
  CHECK(gen::kneser(6, 2).n() == 15);
  CHECK(gen::kneser(7, 3).n() == 35);
  CHECK(gen::kneser(7, 3).m() == 35 * 4 / 2);
}

TEST_CASE("hadamard adjacency matches popcount") {
  for (int N : {2, 4, 6}) {
    const Graph g = gen::hadamard(N);
    CHECK(g.n() == (1 << N));
    for (int x = 0; x < g.n(); ++x)
      for (int y = 0; y < g.n(); ++y)
        if (x != y) CHECK(g.adjacent(x, y) == (std::popcount(static_cast<unsigned>(x ^ y)) == N / 2));
  }
  const Graph h4 = gen::hadamard(4);
  for (int i = 0; i < h4.n(); ++i) CHECK(h4.degree(i) == 6);
  CHECK_THROWS_AS(gen::hadamard(3), InputError);
}

TEST_CASE("coxeter graph") {
  const Graph c = gen::coxeter();
  CHECK(c.n() == 28);
  CHECK(c.m() == 42);
  for (int i = 0; i < 28; ++i) CHECK(c.degree(i) == 3);
}

TEST_CASE("handshake identity on every generator") {
  for (const char* spec : {"petersen", "coxeter", "complete:6", "cycle:9", "path:7", "star:6", "kneser:7:2",
                           "hadamard:4", "barbell:8", "barbell_path:4:3", "hypercube:5", "complete_bipartite:3:4",
                           "complete_multipartite:1,2,3,4", "gnp:30:0.4:11", "empty:4"}) {
    CAPTURE(spec);
    const Graph g = gen::from_spec(spec);
    CHECK(degree_sum(g) == static_cast<int>(2 * g.m()));
  }
}

TEST_CASE("gnp is reproducible and follows the documented draw order") {
  const Graph a = gen::gnp(25, 0.3, 99);
  const Graph b = gen::gnp(25, 0.3, 99);
  CHECK(a == b);
  CHECK_FALSE(a == gen::gnp(25, 0.3, 100));

  Rng rng(5);
  std::vector<std::pair<int, int>> expected;
  for (int i = 1; i <= 8; ++i)
    for (int j = i + 1; j <= 8; ++j)
      if (rng.uniform01() < 0.5) expected.emplace_back(i, j);
  CHECK(gen::gnp(8, 0.5, 5) == Graph::from_edge_list(8, expected));

  CHECK(gen::gnp(6, 0.0, 1).m() == 0);
  CHECK(gen::gnp(6, 1.0, 1).m() == 15);
  CHECK_THROWS_AS(gen::gnp(6, 1.5, 1), InputError);
}

TEST_CASE("family spec parsing") {
  CHECK(gen::from_spec("complete:4") == gen::complete(4));
  CHECK(gen::from_spec("kneser:5:2") == gen::petersen());
  CHECK(gen::from_spec("complete_multipartite:2,2,2") == gen::complete_multipartite({2, 2, 2}));
  CHECK_THROWS_AS(gen::from_spec("dodecahedron"), InputError);
  CHECK_THROWS_AS(gen::from_spec("complete"), InputError);
  CHECK_THROWS_AS(gen::from_spec("complete:x"), InputError);
  CHECK_THROWS_AS(gen::from_spec("hadamard:5"), InputError);
}

TEST_CASE("DIMACS parsing") {
  CHECK(io::parse_dimacs("p edge 3 3\ne 1 2\ne 2 3\ne 1 3") == gen::complete(3));
  CHECK(io::parse_dimacs("c comment\np edge 2 1\ne 1 2") == gen::complete(2));

  std::vector<std::string> warnings;
  const Graph g = io::parse_dimacs("p edge 3 5\ne 1 2\ne 2 1\n", &warnings);
  CHECK(g.m() == 1);
  REQUIRE(warnings.size() == 1);

  CHECK_THROWS_AS(io::parse_dimacs("e 1 2"), ParseError);
  try {
    io::parse_dimacs("c x\np edge 3 1\ne 1 9\n");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 3);
  }
  CHECK_THROWS_AS(io::parse_dimacs("p edge 3 1\ne 1 x\n"), ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("p edge 3 1\ne 2 2\n"), ParseError);
  CHECK_THROWS_AS(io::parse_dimacs("p edge 3 1\nq 1 2\n"), ParseError);
}

TEST_CASE("DIMACS write/read preserves the graph") {
  for (const char* spec : {"petersen", "coxeter", "gnp:15:0.5:3"}) {
    const Graph g = gen::from_spec(spec);
    std::stringstream ss;
    io::write_dimacs(ss, g);
    CHECK(io::parse_dimacs(ss) == g);
  }
}

TEST_CASE("edge list parsing") {
  std::istringstream in("# triangle\n3\n1 2\n2 3\n\n1 3\n");
  CHECK(io::parse_edge_list(in) == gen::complete(3));
  std::istringstream bad("3\n1 4\n");
  CHECK_THROWS_AS(io::parse_edge_list(bad), ParseError);
  std::istringstream none("");
  CHECK_THROWS_AS(io::parse_edge_list(none), ParseError);
}

TEST_CASE("coloring and weight files") {
  std::istringstream colors("1\n2\n3\n");
  CHECK(io::parse_coloring(colors) == std::vector<int>{1, 2, 3});
  std::istringstream zero("0\n");
  CHECK_THROWS_AS(io::parse_coloring(zero), ParseError);

  std::istringstream w("0 2\n2 0\n");
  CHECK(io::parse_weights(w)(0, 1) == 2.0);
  std::istringstream asym("0 2\n1 0\n");
  CHECK_THROWS_AS(io::parse_weights(asym), InputError);
}

TEST_CASE("monochromatic edge detection") {
  const Graph k3 = gen::complete(3);
  CHECK_FALSE(monochromatic_edge(k3, {1, 2, 3}).has_value());
  const auto e = monochromatic_edge(k3, {1, 1, 3});
  REQUIRE(e.has_value());
  CHECK(*e == Edge{1, 2});
  CHECK_THROWS_AS(monochromatic_edge(k3, {1, 2}), InputError);
}
