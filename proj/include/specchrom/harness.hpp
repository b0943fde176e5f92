#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "specchrom/bounds.hpp"
#include "specchrom/exact.hpp"
#include "specchrom/graph.hpp"
#include "specchrom/tolerances.hpp"

namespace specchrom {

struct EvalOptions {
  bool exact = true;  ///< chromatic number and independence number
  bool omega = false;
  bool barnes = false;
  std::optional<WeightMatrix> weights;
  int jobs = 1;
  Tolerances tol = default_tolerances();
};

/// One row of a corpus table. A failure on this graph is recorded in `error`
/// and leaves the rest of the table intact.
struct ReportRow {
  BoundReport report;
  std::optional<Coloring> coloring;  ///< minimal coloring when chi is exact
  bool gen_beats_hoffman = false;
  bool conjecture_beats_hoffman = false;
  std::string error;
};

/// Spectral report plus exact chi / alpha / omega as requested.
ReportRow evaluate_graph(const Graph& g, const EvalOptions& options);

/// One row per graph, in input order.
std::vector<ReportRow> corpus_run(const std::vector<Graph>& graphs, const EvalOptions& options);

struct CorpusSummary {
  int graphs = 0;
  int gen_beats_hoffman = 0;
  int conjecture_beats_hoffman = 0;
  double gen_percent = 0.0;
  double conjecture_percent = 0.0;
};

/// Percentages of graphs with at least one edge where the generalized
/// Hoffman bound or the conjectured bound exceeds the Hoffman bound.
CorpusSummary summarize(const std::vector<ReportRow>& rows);

/// Named graphs shipped with the library: cycles, complete and complete
/// multipartite graphs, Petersen, Coxeter, small Kneser graphs, hypercubes,
/// barbells, Hadamard(4), stars and paths.
std::vector<Graph> standard_corpus();

struct SweepTrial {
  std::uint64_t seed = 0;
  std::size_t m = 0;
  double hoffman = 1.0;
  double gen_hoffman = 1.0;
  double conjecture = 1.0;
};

struct SweepResult {
  int n = 0;
  double p = 0.0;
  std::vector<SweepTrial> trials;
  double mean_hoffman = 0.0;
  double mean_gen_hoffman = 0.0;
  double mean_conjecture = 0.0;
  /// n / (2 log_b n) with b = 1/(1-p); the o(1) term is dropped, so this is a
  /// reference value and not a bound.
  double bollobas_formula = 0.0;
};

/// Trial t samples gnp(n, p, derive_seed(seed, t)).
SweepResult random_sweep(int n, double p, int trials, std::uint64_t seed, int jobs = 1);

double bollobas_formula(int n, double p);

enum class Verdict { consistent, conjecture_violation, wilf_violation, budget_exceeded };

const char* to_string(Verdict v);
Verdict verdict_from_string(const std::string& s);

/// CONJECTURE-VIOLATION when the exact chi is known and conjecture > chi +
/// slack; otherwise WILF-VIOLATION when S+/S- > mu_1 + slack; otherwise
/// budget-exceeded when chi is unknown; otherwise consistent. Degenerate
/// (edgeless) graphs are consistent.
Verdict classify(double conjecture, double weaker, double mu1, bool degenerate, std::optional<int> chi,
                 double slack = 1e-6);
Verdict classify(const BoundReport& r, double slack = 1e-6);

/// A re-checkable record of one sampled graph.
struct SearchFinding {
  std::string id;
  int n = 0;
  std::vector<Edge> edges;
  std::vector<double> eigenvalues;
  double conjecture = 1.0;
  double weaker = 0.0;
  double mu1 = 0.0;
  bool degenerate = false;
  std::optional<int> chi;
  std::vector<int> coloring;
  Verdict verdict = Verdict::consistent;
};

SearchFinding make_finding(std::string id, const Graph& g, const ReportRow& row, double slack = 1e-6);

/// Rebuilds the graph from the stored edge list, recomputes every value and
/// returns the fresh verdict. The stored coloring is re-verified as proper.
Verdict recheck(const SearchFinding& f, const Tolerances& tol = default_tolerances());

struct ScanSpec {
  enum class Kind { gnp, exhaustive } kind = Kind::gnp;
  int n = 10;
  double p = 0.5;
  int trials = 100;
  int max_n = 6;  ///< exhaustive: every labeled graph on 1..max_n vertices
  std::uint64_t seed = 0;
  std::uint64_t node_budget = 10'000'000;
  int jobs = 1;
};

/// Failures of the proven inequalities, counted per graph (should stay 0).
struct SoundnessTally {
  int hoffman_above_chi = 0;
  int gen_hoffman_above_chi = 0;
  int weaker_above_chi = 0;
  int gen_below_hoffman = 0;
  int alpha_theorem = 0;  ///< n - alpha < S+/S-
  int wilf_below_chi = 0;
  int alpha_bound_below_chi = 0;
  int total() const {
    return hoffman_above_chi + gen_hoffman_above_chi + weaker_above_chi + gen_below_hoffman + alpha_theorem +
           wilf_below_chi + alpha_bound_below_chi;
  }
};

struct ScanResult {
  int graphs = 0;
  int consistent = 0;
  int conjecture_violations = 0;
  int wilf_violations = 0;
  int budget_exceeded = 0;
  int bipartite_checked = 0;
  int bipartite_mismatch = 0;  ///< bipartite graphs whose conjecture is not 2
  SoundnessTally soundness;
  std::vector<SearchFinding> findings;  ///< non-consistent graphs only, in sample order
  bool any_violation() const { return conjecture_violations + wilf_violations > 0; }
};

/// Counterexample search. gnp: trial t samples gnp(n, p, derive_seed(seed, t)).
/// exhaustive: for each n = 1..max_n, every subset of the C(n,2) pairs in
/// lexicographic order, encoded as a bit mask.
ScanResult counterexample_scan(const ScanSpec& spec, const Tolerances& tol = default_tolerances());

/// Graph number `mask` on n vertices in the exhaustive enumeration.
Graph graph_from_mask(int n, std::uint64_t mask);

}  // namespace specchrom
