#pragma once

#include <complex>
#include <cstdint>
#include <cstddef>
#include <span>
#include <vector>

#include "specchrom/matrix.hpp"

namespace specchrom {

using cplx = std::complex<double>;

class ComplexMatrix {
public:
  ComplexMatrix() = default;
  ComplexMatrix(std::size_t rows, std::size_t cols, cplx fill = {})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}
  explicit ComplexMatrix(const Matrix& real);

  static ComplexMatrix identity(std::size_t n);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  cplx& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }
  const cplx& operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }

  bool is_diagonal(double tol = 0.0) const;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<cplx> data_;
};

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix diag_from(std::span<const cplx> d);
ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix subtract(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix scale(const ComplexMatrix& a, cplx s);
double max_abs_norm(const ComplexMatrix& a);
cplx trace(const ComplexMatrix& a);

/// Haar-like random unitary: QR (modified Gram-Schmidt) of a matrix with
/// i.i.d. standard complex Gaussian entries, drawn row-major, real part first.
ComplexMatrix random_unitary(std::size_t n, std::uint64_t seed);
/// Random real orthogonal matrix by the same construction with real entries.
ComplexMatrix random_orthogonal(std::size_t n, std::uint64_t seed);

/// ||U U^dagger - I||_max
double unitarity_error(const ComplexMatrix& u);

}  // namespace specchrom
