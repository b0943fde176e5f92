#pragma once

#include <cstddef>
#include <vector>

#include "specchrom/matrix.hpp"
#include "specchrom/tolerances.hpp"

namespace specchrom {

/// Eigen-decomposition of a real symmetric matrix.
///
/// `values` are non-increasing; column i of `vectors` is the unit
/// eigenvector for values[i]. `zero_tol` is the threshold below which an
/// eigenvalue counts as zero for inertia purposes (zero_factor * n * max|a|).
struct Spectrum {
  std::vector<double> values;
  Matrix vectors;
  double zero_tol = 0.0;
  int sweeps = 0;

  std::size_t size() const noexcept { return values.size(); }
  double largest() const { return values.front(); }
  double smallest() const { return values.back(); }
};

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// S+ and S- are the sums of squares of the positive and negative eigenvalues;
/// energy_half is the sum of the positive eigenvalues (half of Tr|A| when the
/// trace vanishes).
struct SpectralSums {
  double s_plus = 0.0;
  double s_minus = 0.0;
  double energy_half = 0.0;
};

/// Cyclic Jacobi eigensolver.
///
/// Converges when the off-diagonal Frobenius norm drops to
/// tol.jacobi_relative * ||A||_F. Throws InputError for non-square or
/// asymmetric input and NumericalError (carrying the achieved off-diagonal
/// norm) after tol.jacobi_max_sweeps sweeps without convergence.
Spectrum eig_symmetric(const Matrix& a, const Tolerances& tol = default_tolerances());

Inertia inertia_of(const Spectrum& s);
SpectralSums spectral_sums(const Spectrum& s, const Inertia& inertia);
inline SpectralSums spectral_sums(const Spectrum& s) { return spectral_sums(s, inertia_of(s)); }

// Diagnostics used by tests and the acceptance suite.

/// max_i ||A v_i - mu_i v_i||_2
double max_eigen_residual(const Matrix& a, const Spectrum& s);
/// ||V^T V - I||_max
double orthonormality_error(const Spectrum& s);
/// Residual bound for a matrix: residual_factor * n * max|a_kl|.
double residual_tolerance(const Matrix& a, const Tolerances& tol = default_tolerances());

/// |A| = sum_i |mu_i| v_i v_i^T.
Matrix absolute_value(const Spectrum& s);

}  // namespace specchrom
