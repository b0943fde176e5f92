#pragma once

#include <span>
#include <vector>

#include "specchrom/complex_matrix.hpp"
#include "specchrom/matrix.hpp"

namespace specchrom {

std::vector<double> sorted_descending(std::span<const double> x);

/// x is majorized by y: every leading partial sum of x sorted descending is at
/// most the matching partial sum of y (m = 1..n-1), and the totals agree, all
/// within `tol`. Throws InputError on a length mismatch.
bool is_majorized(std::span<const double> x, std::span<const double> y, double tol);

/// Unitary-stochastic matrix c_ij = |v_i^dagger U v_j|^2 built from the
/// columns of `basis` (an orthonormal basis) and a unitary U.
Matrix unitary_stochastic(const ComplexMatrix& basis, const ComplexMatrix& u);

/// Largest deviation of any row or column sum from 1; also fails (returns
/// +inf) on a negative entry below -tol.
double doubly_stochastic_error(const Matrix& c, double tol);

}  // namespace specchrom
