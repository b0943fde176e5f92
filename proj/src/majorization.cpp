#include "specchrom/majorization.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "specchrom/errors.hpp"

namespace specchrom {

std::vector<double> sorted_descending(std::span<const double> x) {
  std::vector<double> v(x.begin(), x.end());
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

bool is_majorized(std::span<const double> x, std::span<const double> y, double tol) {
  if (x.size() != y.size()) throw InputError("majorization needs vectors of equal length");
  const auto xs = sorted_descending(x);
  const auto ys = sorted_descending(y);
  double sx = 0.0, sy = 0.0;
  for (std::size_t m = 0; m < xs.size(); ++m) {
    sx += xs[m];
    sy += ys[m];
    if (m + 1 < xs.size() && sx > sy + tol) return false;
  }
  return std::abs(sx - sy) <= tol;
}

Matrix unitary_stochastic(const ComplexMatrix& basis, const ComplexMatrix& u) {
  const std::size_t n = basis.rows();
  if (basis.cols() != n || u.rows() != n || u.cols() != n)
    throw InputError("unitary-stochastic construction needs matching square matrices");
  // (U v_j) for every j, then c_ij = |<v_i, U v_j>|^2.
  const ComplexMatrix uv = multiply(u, basis);
  Matrix c(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      cplx dot{};
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(basis(r, i)) * uv(r, j);
      c(i, j) = std::norm(dot);
    }
  return c;
}

double doubly_stochastic_error(const Matrix& c, double tol) {
  double worst = 0.0;
  for (std::size_t i = 0; i < c.rows(); ++i) {
    double row = 0.0, col = 0.0;
    for (std::size_t j = 0; j < c.cols(); ++j) {
      if (c(i, j) < -tol) return std::numeric_limits<double>::infinity();
      row += c(i, j);
      col += c(j, i);
    }
    worst = std::max({worst, std::abs(row - 1.0), std::abs(col - 1.0)});
  }
  return worst;
}

}  // namespace specchrom
