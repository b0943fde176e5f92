#include "specchrom/complex_matrix.hpp"

#include <algorithm>
#include <cmath>

#include "specchrom/errors.hpp"
#include "specchrom/rng.hpp"

namespace specchrom {

ComplexMatrix::ComplexMatrix(const Matrix& real) : ComplexMatrix(real.rows(), real.cols()) {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) (*this)(i, j) = real(i, j);
}

ComplexMatrix ComplexMatrix::identity(std::size_t n) {
  ComplexMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

bool ComplexMatrix::is_diagonal(double tol) const {
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (i != j && std::abs((*this)(i, j)) > tol) return false;
  return true;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.cols() != b.rows()) throw InputError("complex product dimension mismatch");
  ComplexMatrix r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const cplx aik = a(i, k);
      if (aik == cplx{}) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix r(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(j, i) = std::conj(a(i, j));
  return r;
}

ComplexMatrix diag_from(std::span<const cplx> d) {
  ComplexMatrix r(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) r(i, i) = d[i];
  return r;
}

namespace {
template <class Op>
ComplexMatrix entrywise(const ComplexMatrix& a, const ComplexMatrix& b, Op op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw InputError("complex matrix shape mismatch");
  ComplexMatrix r(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = op(a(i, j), b(i, j));
  return r;
}
}  // namespace

ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) {
  return entrywise(a, b, [](cplx x, cplx y) { return x + y; });
}

ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b) {
  return entrywise(a, b, [](cplx x, cplx y) { return x - y; });
}

ComplexMatrix scale(const ComplexMatrix& a, cplx s) {
  ComplexMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) *= s;
  return r;
}

double max_abs_norm(const ComplexMatrix& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) m = std::max(m, std::abs(a(i, j)));
  return m;
}

cplx trace(const ComplexMatrix& a) {
  cplx t{};
  for (std::size_t i = 0; i < std::min(a.rows(), a.cols()); ++i) t += a(i, i);
  return t;
}

namespace {

// Modified Gram-Schmidt on the columns; the phases are fixed by making the
// diagonal of R positive, which keeps the distribution Haar.
ComplexMatrix orthonormalize_columns(ComplexMatrix m) {
  const std::size_t n = m.rows();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t j = 0; j < k; ++j) {
      cplx dot{};
      for (std::size_t r = 0; r < n; ++r) dot += std::conj(m(r, j)) * m(r, k);
      for (std::size_t r = 0; r < n; ++r) m(r, k) -= dot * m(r, j);
    }
    double norm = 0.0;
    for (std::size_t r = 0; r < n; ++r) norm += std::norm(m(r, k));
    norm = std::sqrt(norm);
    if (norm < 1e-300) throw NumericalError("degenerate random matrix in Gram-Schmidt", norm);
    for (std::size_t r = 0; r < n; ++r) m(r, k) /= norm;
  }
  return m;
}

}  // namespace

ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(i, j) = cplx(re, im);
    }
  return orthonormalize_columns(std::move(g));
}

ComplexMatrix random_orthogonal(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  ComplexMatrix g(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = rng.normal();
  return orthonormalize_columns(std::move(g));
}

double unitarity_error(const ComplexMatrix& u) {
  return max_abs_norm(subtract(multiply(u, adjoint(u)), ComplexMatrix::identity(u.rows())));
}

}  // namespace specchrom
