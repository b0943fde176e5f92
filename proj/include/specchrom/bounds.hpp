#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "specchrom/graph.hpp"
#include "specchrom/spectrum.hpp"
#include "specchrom/tolerances.hpp"

namespace specchrom {

/// A bound value plus whether its formula degenerated (denominator at or
/// below the spectrum's zero tolerance). Degenerate lower bounds read 1.
struct Bound {
  double value = 1.0;
  bool degenerate = false;
};

/// 1 + mu_1 / (-mu_n).
Bound hoffman(const Spectrum& s);

struct GeneralizedHoffman {
  double value = 1.0;
  /// Smallest m attaining the maximum; 0 when degenerate.
  int best_m = 0;
  bool degenerate = false;
};

/// 1 + max over m = 1..n-1 of (mu_1 + ... + mu_m) / -(mu_n + ... + mu_{n-m+1}),
/// skipping m whose denominator is within zero_tol of zero. A later m must
/// beat the running best by more than 1e-12 (relative) to replace it, so
/// numerically equal ratios resolve to the smallest m.
GeneralizedHoffman generalized_hoffman(const Spectrum& s);

struct WeakerConjecture {
  /// S+/S-; 0 when degenerate.
  double weaker = 0.0;
  /// 1 + S+/S-; 1 when degenerate.
  double conjecture = 1.0;
  bool degenerate = false;
};

WeakerConjecture weaker_and_conjecture(const SpectralSums& sums, double zero_tol);

struct AuxiliaryBounds {
  Bound cvetkovic;           ///< 1 + mu_1 / (n - mu_1)
  Bound myers_liu;           ///< 1 + 2m / (n^2 - 2m)
  Bound edwards_elphick;     ///< 1 + mu_1^2 / (2m - mu_1^2)
  Bound bollobas_nikiforov;  ///< 1 + (mu_1^2 + mu_2^2) / (2m - mu_1^2 - mu_2^2); degenerate on complete graphs
  double wilf_upper = 1.0;   ///< 1 + mu_1 (an upper bound)
};

AuxiliaryBounds auxiliary_bounds(const Spectrum& s, int n, std::size_t m);

/// n - alpha + 1.
double alpha_bound(const Graph& g, int alpha);

struct BarnesResult {
  Bound bound;
  std::vector<double> diagonal;  ///< the best feasible D found
  int sweeps = 0;
};

/// Feasibility-checked search over positive diagonal D with A + D positive
/// semidefinite, maximizing 1 + mu_1(D^-1/2 A D^-1/2). Starts at
/// D = -mu_n I (the Hoffman point) and hill-climbs coordinate-wise with
/// multiplicative factors {0.8, 0.9, 1.1, 1.25}, up to 50 sweeps.
BarnesResult barnes_heuristic(const Matrix& a, const Spectrum& s, const Tolerances& tol = default_tolerances());

struct WeightedBounds {
  GeneralizedHoffman gen_hoffman;
  WeakerConjecture weaker;
  bool degenerate = false;  ///< W*A is the zero matrix
};

/// Generalized Hoffman and S+/S- evaluated on the spectrum of W*A.
WeightedBounds weighted_bounds(const WeightMatrix& w, const Graph& g, const Tolerances& tol = default_tolerances());

struct WeightSearch {
  double best_gen_hoffman = 1.0;
  WeightMatrix gen_hoffman_witness = WeightMatrix::all_ones(0);
  double best_weaker = 0.0;
  WeightMatrix weaker_witness = WeightMatrix::all_ones(0);
  int evaluations = 0;
};

/// Random-restart hill climbing over edge-supported symmetric W.
///
/// Evaluation 1 is W = J. Each later step perturbs one edge weight by a
/// N(0, 0.5^2) step and is kept when gen_hoffman + weaker improves; after 25
/// steps without improvement the walk restarts from edge weights drawn
/// uniformly from [0.5, 1.5]. `budget` counts W evaluations. The best
/// generalized-Hoffman and best S+/S- values are tracked independently, each
/// with its own witness, and never fall below the W = J baseline.
WeightSearch optimize_w(const Graph& g, int budget, std::uint64_t seed, const Tolerances& tol = default_tolerances());

/// Every spectral bound for one graph, plus slots filled by the exact
/// solvers when requested.
struct BoundReport {
  std::string name;
  int n = 0;
  std::size_t m = 0;
  std::vector<double> eigenvalues;
  Inertia inertia;
  SpectralSums sums;

  Bound hoffman;
  GeneralizedHoffman gen_hoffman;
  WeakerConjecture weaker;
  AuxiliaryBounds aux;

  std::optional<Bound> barnes;
  std::optional<WeightedBounds> weighted;

  std::optional<int> chi_exact;
  int chi_lower = 0;  ///< bracket when the exact solver ran out of budget
  int chi_upper = 0;
  std::optional<int> alpha;
  std::optional<double> alpha_bound;
  std::optional<int> omega;

  bool has_edges() const noexcept { return m > 0; }
};

struct ReportOptions {
  bool barnes = false;
  std::optional<WeightMatrix> weights;
};

/// Spectral part of the report: spectrum, inertia, sums and every bound that
/// needs only eigenvalues.
BoundReport spectral_report(const Graph& g, const ReportOptions& options = {},
                            const Tolerances& tol = default_tolerances());

}  // namespace specchrom
