#include "specchrom/graph.hpp"

#include <algorithm>

#include "specchrom/errors.hpp"
#include "specchrom/rng.hpp"

namespace specchrom {

Graph Graph::from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs, std::string name) {
  if (n < 0) throw InputError("vertex count must be non-negative");
  Graph g;
  g.n_ = n;
  g.name_ = std::move(name);
  g.edges_.reserve(pairs.size());
  for (auto [u, v] : pairs) {
    if (u < 1 || u > n || v < 1 || v > n)
      throw InputError("edge (" + std::to_string(u) + "," + std::to_string(v) +
                       ") has a vertex outside 1.." + std::to_string(n));
    if (u == v) throw InputError("self-loop at vertex " + std::to_string(u));
    g.edges_.push_back(Edge{std::min(u, v), std::max(u, v)});
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());

  const auto nn = static_cast<std::size_t>(n);
  g.adj_.assign(nn, {});
  g.bits_.assign(nn * nn, 0);
  for (const Edge& e : g.edges_) {
    const int i = e.u - 1;
    const int j = e.v - 1;
    g.adj_[static_cast<std::size_t>(i)].push_back(j);
    g.adj_[static_cast<std::size_t>(j)].push_back(i);
    g.bits_[static_cast<std::size_t>(i) * nn + static_cast<std::size_t>(j)] = 1;
    g.bits_[static_cast<std::size_t>(j) * nn + static_cast<std::size_t>(i)] = 1;
  }
  for (auto& list : g.adj_) std::sort(list.begin(), list.end());
  return g;
}

Graph Graph::complement() const {
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < n_; ++i)
    for (int j = i + 1; j < n_; ++j)
      if (!adjacent(i, j)) pairs.emplace_back(i + 1, j + 1);
  return from_edge_list(n_, pairs, name_.empty() ? std::string{} : "complement(" + name_ + ")");
}

Matrix adjacency_matrix(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.n());
  Matrix a(n, n);
  for (const Edge& e : g.edges()) {
    a(static_cast<std::size_t>(e.u - 1), static_cast<std::size_t>(e.v - 1)) = 1.0;
    a(static_cast<std::size_t>(e.v - 1), static_cast<std::size_t>(e.u - 1)) = 1.0;
  }
  return a;
}

WeightMatrix::WeightMatrix(Matrix m) : m_(std::move(m)) {
  if (!m_.square()) throw InputError("weight matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j)
      if (m_(i, j) != m_(j, i)) throw InputError("weight matrix must be symmetric");
}

WeightMatrix WeightMatrix::random_symmetric(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      const double w = rng.uniform(-1.0, 1.0);
      m(i, j) = w;
      m(j, i) = w;
    }
  return WeightMatrix(std::move(m));
}

Matrix schur_product(const WeightMatrix& w, const Matrix& a) {
  if (!a.square() || w.size() != a.rows())
    throw InputError("Schur product needs matching square matrices");
  Matrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = w(i, j) * a(i, j);
  return r;
}

std::optional<Edge> monochromatic_edge(const Graph& g, const std::vector<int>& colors) {
  if (colors.size() != static_cast<std::size_t>(g.n()))
    throw InputError("coloring has " + std::to_string(colors.size()) + " entries for " +
                     std::to_string(g.n()) + " vertices");
  for (const Edge& e : g.edges())
    if (colors[static_cast<std::size_t>(e.u - 1)] == colors[static_cast<std::size_t>(e.v - 1)])
      return e;
  return std::nullopt;
}

}  // namespace specchrom
