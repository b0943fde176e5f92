#pragma once

#include <cstddef>
#include <cstdint>

namespace specchrom {

// Every numerical threshold used by the library lives here so the CLI and the
// acceptance suite can print or tighten them in one place.
struct Tolerances {
  // Relative asymmetry allowed on eigensolver input.
  double symmetry = 1e-12;
  // Jacobi stops when off-diagonal Frobenius norm <= jacobi_relative * ||A||_F.
  double jacobi_relative = 1e-12;
  int jacobi_max_sweeps = 100;
  // Residual ||A v - mu v|| and sign classification both scale as
  // factor * n * max|a_kl|.
  double residual_factor = 1e-8;
  double zero_factor = 1e-8;
  // Unitary-conversion identities (annihilation, reversal, pinching, Fourier).
  double conversion = 1e-10;
  // Lower bound vs exact chromatic number comparisons.
  double bound_slack = 1e-6;
  // Majorization partial-sum comparisons.
  double majorization = 1e-8;
  // Exact-solver node budget.
  std::uint64_t node_budget = 10'000'000;
};

/// Process-wide defaults. Library functions take a Tolerances argument
/// defaulted to this value.
inline const Tolerances& default_tolerances() {
  static const Tolerances tol{};
  return tol;
}

}  // namespace specchrom
