#include "specchrom/conversion.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace specchrom {

namespace {

void check_colors(const std::vector<int>& colors, int c) {
  if (c < 1) throw InputError("need at least one color");
  for (int x : colors)
    if (x < 1 || x > c)
      throw InputError("color " + std::to_string(x) + " outside 1.." + std::to_string(c));
}

void check_proper(const Graph& g, const std::vector<int>& colors, int c) {
  check_colors(colors, c);
  if (auto e = monochromatic_edge(g, colors)) throw ImproperColoring(*e, colors[static_cast<std::size_t>(e->u - 1)]);
}

// zeta^k with the exponent reduced mod c so large products stay exact.
cplx power_of_root(int c, long long k) {
  const long long r = ((k % c) + c) % c;
  if (r == 0) return 1.0;
  return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(r) / static_cast<double>(c));
}

ComplexMatrix conjugation_sum(const ComplexMatrix& x, const std::vector<ComplexMatrix>& us, std::size_t count,
                              bool inverse) {
  ComplexMatrix sum(x.rows(), x.cols());
  for (std::size_t s = 0; s < count; ++s) {
    const ComplexMatrix& u = us[s];
    const ComplexMatrix term = inverse ? multiply(multiply(adjoint(u), x), u) : multiply(multiply(u, x), adjoint(u));
    sum = add(sum, term);
  }
  return sum;
}

ComplexMatrix weighted_adjacency(const Graph& g, const WeightMatrix& w) {
  return ComplexMatrix(schur_product(w, adjacency_matrix(g)));
}

}  // namespace

cplx root_of_unity(int c) { return power_of_root(c, 1); }

ComplexMatrix fourier_matrix(int c) {
  if (c < 1) throw InputError("Fourier matrix order must be >= 1");
  ComplexMatrix f(static_cast<std::size_t>(c), static_cast<std::size_t>(c));
  for (int j = 1; j <= c; ++j)
    for (int k = 1; k <= c; ++k)
      f(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(k - 1)) = power_of_root(c, static_cast<long long>(j) * k);
  return f;
}

std::vector<ComplexMatrix> diagonal_unitaries(const std::vector<int>& colors, int c) {
  check_colors(colors, c);
  std::vector<ComplexMatrix> out;
  out.reserve(static_cast<std::size_t>(c));
  std::vector<cplx> d(colors.size());
  for (int s = 1; s <= c; ++s) {
    for (std::size_t k = 0; k < colors.size(); ++k) d[k] = power_of_root(c, static_cast<long long>(colors[k]) * s);
    out.push_back(diag_from(d));
  }
  return out;
}

std::vector<ComplexMatrix> build_unitaries(const Graph& g, const std::vector<int>& colors, int c) {
  check_proper(g, colors, c);
  return diagonal_unitaries(colors, c);
}

double annihilation_residual(const ComplexMatrix& x, const std::vector<int>& colors, int c) {
  const auto us = diagonal_unitaries(colors, c);
  const double forward = max_abs_norm(conjugation_sum(x, us, us.size(), false));
  const double inverse = max_abs_norm(conjugation_sum(x, us, us.size(), true));
  return std::max(forward, inverse);
}

double reversal_residual(const ComplexMatrix& x, const std::vector<int>& colors, int c) {
  const auto us = diagonal_unitaries(colors, c);
  const ComplexMatrix neg = scale(x, -1.0);
  const std::size_t count = us.size() - 1;
  const double forward = max_abs_norm(subtract(conjugation_sum(neg, us, count, false), x));
  const double inverse = max_abs_norm(subtract(conjugation_sum(neg, us, count, true), x));
  return std::max(forward, inverse);
}

double verify_annihilation(const Graph& g, const WeightMatrix& w, const std::vector<int>& colors, int c) {
  check_proper(g, colors, c);
  return annihilation_residual(weighted_adjacency(g, w), colors, c);
}

double verify_reversal(const Graph& g, const WeightMatrix& w, const std::vector<int>& colors, int c) {
  check_proper(g, colors, c);
  return reversal_residual(weighted_adjacency(g, w), colors, c);
}

double pinching_check(const ComplexMatrix& x, const std::vector<int>& colors, int c) {
  if (x.rows() != colors.size() || x.cols() != colors.size())
    throw InputError("pinching check needs an n x n matrix for n colored vertices");
  const auto us = diagonal_unitaries(colors, c);
  const ComplexMatrix lhs = conjugation_sum(x, us, us.size(), false);

  const std::size_t n = colors.size();
  ComplexMatrix rhs(n, n);
  for (int b = 1; b <= c; ++b) {
    std::vector<cplx> mask(n);
    for (std::size_t k = 0; k < n; ++k) mask[k] = colors[k] == b ? 1.0 : 0.0;
    const ComplexMatrix p = diag_from(mask);
    rhs = add(rhs, multiply(multiply(p, x), p));
  }
  return max_abs_norm(subtract(lhs, scale(rhs, static_cast<double>(c))));
}

RepresentationCheck check_representation(const Graph& g, const OrthogonalRepresentation& rep) {
  if (rep.vectors.size() != static_cast<std::size_t>(g.n()))
    throw InputError("representation has the wrong number of vectors");
  RepresentationCheck out;
  for (const auto& v : rep.vectors) {
    if (v.size() != static_cast<std::size_t>(rep.dimension)) throw InputError("representation vector of wrong dimension");
    for (const cplx& z : v) out.modulus = std::max(out.modulus, std::abs(std::abs(z) - 1.0));
  }
  for (const Edge& e : g.edges()) {
    const auto& a = rep.vectors[static_cast<std::size_t>(e.u - 1)];
    const auto& b = rep.vectors[static_cast<std::size_t>(e.v - 1)];
    cplx dot{};
    for (std::size_t s = 0; s < a.size(); ++s) dot += std::conj(a[s]) * b[s];
    out.orthogonality = std::max(out.orthogonality, std::abs(dot));
  }
  return out;
}

OrthogonalRepresentation hadamard_representation(int N) {
  if (N < 2 || N % 2 != 0) throw InputError("Hadamard representation needs an even N >= 2");
  if (N > 16) throw InputError("Hadamard N too large");
  OrthogonalRepresentation rep;
  rep.dimension = N;
  rep.normalized = true;
  const unsigned count = 1u << N;
  rep.vectors.resize(count);
  for (unsigned x = 0; x < count; ++x) {
    auto& v = rep.vectors[x];
    v.resize(static_cast<std::size_t>(N));
    for (int s = 0; s < N; ++s) v[static_cast<std::size_t>(s)] = ((x >> s) & 1u) ? -1.0 : 1.0;
  }
  return rep;
}

OrthogonalRepresentation coloring_to_representation(const Graph& g, const std::vector<int>& colors, int c) {
  check_proper(g, colors, c);
  const ComplexMatrix f = fourier_matrix(c);
  OrthogonalRepresentation rep;
  rep.dimension = c;
  rep.normalized = true;
  rep.vectors.resize(colors.size());
  for (std::size_t k = 0; k < colors.size(); ++k) {
    auto& v = rep.vectors[k];
    v.resize(static_cast<std::size_t>(c));
    for (int j = 0; j < c; ++j) v[static_cast<std::size_t>(j)] = f(static_cast<std::size_t>(j), static_cast<std::size_t>(colors[k] - 1));
  }
  return rep;
}

std::vector<ComplexMatrix> representation_to_unitaries(const OrthogonalRepresentation& rep) {
  if (!rep.normalized) throw InputError("unitaries need a normalized representation");
  for (const auto& v : rep.vectors)
    for (const cplx& z : v)
      if (std::abs(std::abs(z) - 1.0) > 1e-12) throw InputError("representation entry is not of modulus one");
  std::vector<ComplexMatrix> out;
  std::vector<cplx> d(rep.vectors.size());
  for (int s = 0; s < rep.dimension; ++s) {
    for (std::size_t k = 0; k < rep.vectors.size(); ++k) d[k] = rep.vectors[k][static_cast<std::size_t>(s)];
    out.push_back(diag_from(d));
  }
  return out;
}

double conjugation_sum_residual(const ComplexMatrix& x, const std::vector<ComplexMatrix>& unitaries) {
  return max_abs_norm(conjugation_sum(x, unitaries, unitaries.size(), false));
}

}  // namespace specchrom
