#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "specchrom/matrix.hpp"

namespace specchrom {

/// Undirected edge between 1-based vertex labels, stored with u < v.
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple undirected graph on vertices 1..n. Immutable after construction.
///
/// Edges are reported with 1-based labels. Neighbor lists and the adjacency
/// test use 0-based vertex indices (label - 1), which is what the solvers
/// iterate over.
class Graph {
public:
  Graph() = default;

  /// Validates and deduplicates `pairs`. Throws InputError on a self-loop or
  /// a label outside 1..n.
  static Graph from_edge_list(int n, const std::vector<std::pair<int, int>>& pairs,
                              std::string name = {});

  int n() const noexcept { return n_; }
  std::size_t m() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const std::string& name() const noexcept { return name_; }
  Graph renamed(std::string name) const {
    Graph g = *this;
    g.name_ = std::move(name);
    return g;
  }

  const std::vector<int>& neighbors(int index) const { return adj_[static_cast<std::size_t>(index)]; }
  int degree(int index) const { return static_cast<int>(adj_[static_cast<std::size_t>(index)].size()); }
  bool adjacent(int i, int j) const {
    return bits_[static_cast<std::size_t>(i) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(j)] != 0;
  }

  Graph complement() const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> bits_;
  std::string name_;
};

/// Symmetric 0/1 adjacency matrix with zero diagonal.
Matrix adjacency_matrix(const Graph& g);

/// Real symmetric weight matrix for Schur-weighted bounds. Symmetry is exact.
class WeightMatrix {
public:
  /// Throws InputError unless `m` is square and exactly symmetric.
  explicit WeightMatrix(Matrix m);

  static WeightMatrix all_ones(std::size_t n) { return WeightMatrix(Matrix(n, n, 1.0)); }
  /// Entries i.i.d. uniform on [-1, 1] for i <= j (row-major upper triangle
  /// draw order), mirrored below the diagonal.
  static WeightMatrix random_symmetric(std::size_t n, std::uint64_t seed);

  std::size_t size() const noexcept { return m_.rows(); }
  const Matrix& matrix() const noexcept { return m_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return m_(i, j); }

private:
  Matrix m_;
};

/// Entrywise product (W*A)_kl = w_kl * a_kl. Throws InputError on size mismatch.
Matrix schur_product(const WeightMatrix& w, const Matrix& a);

/// Proper-coloring check. `colors` is indexed by 0-based vertex, values 1..c.
/// Returns the first monochromatic edge in edge order, if any.
std::optional<Edge> monochromatic_edge(const Graph& g, const std::vector<int>& colors);

}  // namespace specchrom
