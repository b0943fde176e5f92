#include "specchrom/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "specchrom/errors.hpp"

namespace specchrom {

namespace {

double off_diagonal_norm(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = i + 1; j < a.cols(); ++j) s += 2.0 * a(i, j) * a(i, j);
  return std::sqrt(s);
}

// One Jacobi rotation annihilating a(p,q); accumulates into v.
void rotate(Matrix& a, Matrix& v, std::size_t p, std::size_t q) {
  const double apq = a(p, q);
  const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
  double t;
  if (std::abs(theta) > 1e150) {
    t = 0.5 / theta;
  } else {
    t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
    if (theta < 0.0) t = -t;
  }
  const double c = 1.0 / std::sqrt(t * t + 1.0);
  const double s = t * c;
  const std::size_t n = a.rows();

  a(p, p) -= t * apq;
  a(q, q) += t * apq;
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  for (std::size_t r = 0; r < n; ++r) {
    if (r == p || r == q) continue;
    const double arp = a(r, p);
    const double arq = a(r, q);
    const double np = c * arp - s * arq;
    const double nq = s * arp + c * arq;
    a(r, p) = np;
    a(p, r) = np;
    a(r, q) = nq;
    a(q, r) = nq;
  }
  for (std::size_t r = 0; r < n; ++r) {
    const double vrp = v(r, p);
    const double vrq = v(r, q);
    v(r, p) = c * vrp - s * vrq;
    v(r, q) = s * vrp + c * vrq;
  }
}

}  // namespace

Spectrum eig_symmetric(const Matrix& input, const Tolerances& tol) {
  if (!input.square()) throw InputError("eigensolver needs a square matrix");
  const std::size_t n = input.rows();
  const double scale = input.max_abs();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (std::abs(input(i, j) - input(j, i)) > tol.symmetry * scale)
        throw InputError("eigensolver input is not symmetric");

  Matrix a(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = 0.5 * (input(i, j) + input(j, i));
  Matrix v = Matrix::identity(n);

  const double target = tol.jacobi_relative * a.frobenius();
  int sweep = 0;
  double off = off_diagonal_norm(a);
  while (off > target) {
    if (sweep == tol.jacobi_max_sweeps)
      throw NumericalError("Jacobi did not converge in " + std::to_string(sweep) +
                               " sweeps; off-diagonal norm " + std::to_string(off),
                           off);
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q)
        if (a(p, q) != 0.0) rotate(a, v, p, q);
    ++sweep;
    off = off_diagonal_norm(a);
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return a(x, x) > a(y, y); });

  Spectrum s;
  s.values.resize(n);
  s.vectors = Matrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    s.values[k] = a(order[k], order[k]);
    for (std::size_t r = 0; r < n; ++r) s.vectors(r, k) = v(r, order[k]);
  }
  s.zero_tol = tol.zero_factor * static_cast<double>(n) * scale;
  s.sweeps = sweep;
  return s;
}

Inertia inertia_of(const Spectrum& s) {
  Inertia in;
  for (double mu : s.values) {
    if (mu > s.zero_tol)
      ++in.positive;
    else if (mu < -s.zero_tol)
      ++in.negative;
    else
      ++in.zero;
  }
  return in;
}

SpectralSums spectral_sums(const Spectrum& s, const Inertia& inertia) {
  SpectralSums sums;
  const auto n = s.values.size();
  for (std::size_t i = 0; i < static_cast<std::size_t>(inertia.positive); ++i) {
    sums.s_plus += s.values[i] * s.values[i];
    sums.energy_half += s.values[i];
  }
  for (std::size_t i = n - static_cast<std::size_t>(inertia.negative); i < n; ++i)
    sums.s_minus += s.values[i] * s.values[i];
  return sums;
}

double max_eigen_residual(const Matrix& a, const Spectrum& s) {
  const std::size_t n = a.rows();
  double worst = 0.0;
  std::vector<double> col(n);
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t r = 0; r < n; ++r) col[r] = s.vectors(r, k);
    const auto av = a * std::span<const double>(col);
    double sq = 0.0;
    for (std::size_t r = 0; r < n; ++r) {
      const double d = av[r] - s.values[k] * col[r];
      sq += d * d;
    }
    worst = std::max(worst, std::sqrt(sq));
  }
  return worst;
}

double orthonormality_error(const Spectrum& s) {
  const Matrix& v = s.vectors;
  const Matrix gram = v.transposed() * v;
  double worst = 0.0;
  for (std::size_t i = 0; i < gram.rows(); ++i)
    for (std::size_t j = 0; j < gram.cols(); ++j)
      worst = std::max(worst, std::abs(gram(i, j) - (i == j ? 1.0 : 0.0)));
  return worst;
}

double residual_tolerance(const Matrix& a, const Tolerances& tol) {
  return tol.residual_factor * static_cast<double>(a.rows()) * a.max_abs();
}

Matrix absolute_value(const Spectrum& s) {
  const std::size_t n = s.size();
  Matrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double w = std::abs(s.values[k]);
    if (w == 0.0) continue;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) out(i, j) += w * s.vectors(i, k) * s.vectors(j, k);
  }
  return out;
}

}  // namespace specchrom
