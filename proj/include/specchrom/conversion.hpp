#pragma once

#include <vector>

#include "specchrom/complex_matrix.hpp"
#include "specchrom/errors.hpp"
#include "specchrom/graph.hpp"

namespace specchrom {

/// Raised when a supplied coloring has an edge whose endpoints share a color.
class ImproperColoring : public InputError {
public:
  ImproperColoring(Edge edge, int color)
      : InputError("coloring is not proper: edge (" + std::to_string(edge.u) + "," + std::to_string(edge.v) +
                   ") is monochromatic with color " + std::to_string(color)),
        edge_(edge),
        color_(color) {}
  Edge edge() const noexcept { return edge_; }
  int color() const noexcept { return color_; }

private:
  Edge edge_;
  int color_;
};

/// Primitive c-th root of unity exp(2 pi i / c).
cplx root_of_unity(int c);

/// Fourier matrix with 1-based exponents: entry (j,k) = zeta^(j*k), j,k = 1..c.
/// Its last row and last column are all ones.
ComplexMatrix fourier_matrix(int c);

/// Diagonal unitaries U_s = diag(zeta^(colors[0]*s), ..., zeta^(colors[n-1]*s))
/// for s = 1..c. No properness check; colors must lie in 1..c.
std::vector<ComplexMatrix> diagonal_unitaries(const std::vector<int>& colors, int c);

/// Same construction after checking that `colors` properly colors `g` with
/// colors 1..c. Throws ImproperColoring naming the offending edge, or
/// InputError for out-of-range colors.
std::vector<ComplexMatrix> build_unitaries(const Graph& g, const std::vector<int>& colors, int c);

/// max |sum_s U_s X U_s^dagger| and the same with U_s replaced by U_s^dagger;
/// returns the larger. Works on any coloring, proper or not.
double annihilation_residual(const ComplexMatrix& x, const std::vector<int>& colors, int c);

/// max |sum_{s<c} U_s (-X) U_s^dagger - X| over both variants.
double reversal_residual(const ComplexMatrix& x, const std::vector<int>& colors, int c);

/// Checked annihilation on W*A for a proper coloring.
double verify_annihilation(const Graph& g, const WeightMatrix& w, const std::vector<int>& colors, int c);
/// Checked sign reversal on W*A for a proper coloring.
double verify_reversal(const Graph& g, const WeightMatrix& w, const std::vector<int>& colors, int c);

/// Residual of sum_s U_s X U_s^dagger = c * sum_b P_b X P_b, with P_b the
/// projector onto color class b.
double pinching_check(const ComplexMatrix& x, const std::vector<int>& colors, int c);

/// Vertex -> complex d-vector such that adjacent vertices get orthogonal
/// vectors. `normalized` means every entry has modulus one.
struct OrthogonalRepresentation {
  int dimension = 0;
  std::vector<std::vector<cplx>> vectors;
  bool normalized = false;
};

struct RepresentationCheck {
  double orthogonality = 0.0;  ///< max |Psi(k)^dagger Psi(l)| over edges
  double modulus = 0.0;        ///< max ||entry| - 1| over all entries
};

RepresentationCheck check_representation(const Graph& g, const OrthogonalRepresentation& rep);

/// Psi(k) = ((-1)^{k_1}, ..., (-1)^{k_N}) on the Hadamard graph, with vertex
/// label k encoding the bit string of k-1 as in gen::hadamard.
OrthogonalRepresentation hadamard_representation(int N);

/// Vertex k gets column colors[k] of the Fourier matrix F_c.
OrthogonalRepresentation coloring_to_representation(const Graph& g, const std::vector<int>& colors, int c);

/// U_s = diag(Psi(1)_s, ..., Psi(n)_s), s = 1..d. Throws InputError for a
/// representation that is not normalized.
std::vector<ComplexMatrix> representation_to_unitaries(const OrthogonalRepresentation& rep);

/// max |sum_s U_s X U_s^dagger| for an arbitrary list of unitaries.
double conjugation_sum_residual(const ComplexMatrix& x, const std::vector<ComplexMatrix>& unitaries);

}  // namespace specchrom
