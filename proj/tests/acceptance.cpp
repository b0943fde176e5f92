// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>

#include "specchrom/complex_matrix.hpp"
#include "specchrom/conversion.hpp"
#include "specchrom/exact.hpp"
#include "specchrom/generators.hpp"
#include "specchrom/harness.hpp"
#include "specchrom/majorization.hpp"
#include "specchrom/parallel.hpp"
#include "specchrom/rng.hpp"
#include "specchrom/spectrum.hpp"

using namespace specchrom;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      detail << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void criterion(int id, const char* title, double time_limit_s, const std::function<void(Outcome&)>& body) {
  Outcome o;
  const auto start = Clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail << " [exception: " << e.what() << "]";
  }
  const double secs = std::chrono::duration<double>(Clock::now() - start).count();
  if (time_limit_s > 0) o.require(secs < time_limit_s, "runtime " + std::to_string(secs) + " s");
  std::printf("%s  %d. %s (%.2f s)%s\n", o.pass ? "PASS" : "FAIL", id, title, secs, o.detail.str().c_str());
  std::fflush(stdout);
  failures += !o.pass;
}

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

}  // namespace

int main() {
  const Tolerances tol = default_tolerances();

  criterion(1, "Barbell(8): hoffman 4.8, gen_hoffman 5.9, conjecture 7.3 (+-0.05), chi 8", 1.0, [&](Outcome& o) {
    const ReportRow row = evaluate_graph(gen::barbell(8), EvalOptions{});
    const auto& r = row.report;
    o.detail << " hoffman=" << r.hoffman.value << " gen_hoffman=" << r.gen_hoffman.value
             << " conjecture=" << r.weaker.conjecture << " chi=" << r.chi_exact.value_or(-1);
    o.require(within(r.hoffman.value, 4.8, 0.05), "hoffman");
    o.require(within(r.gen_hoffman.value, 5.9, 0.05), "gen_hoffman");
    o.require(within(r.weaker.conjecture, 7.3, 0.05), "conjecture");
    o.require(r.chi_exact == 8, "chi");
  });

  criterion(2, "G(n,p) table: 15 seeded trials at (20,0.9) and (50,0.5)", 30.0, [&](Outcome& o) {
    const SweepResult a = random_sweep(20, 0.9, 15, 20090);
    const SweepResult b = random_sweep(50, 0.5, 15, 50050);
    o.detail << " (20,0.9): hoffman=" << a.mean_hoffman << " conjecture=" << a.mean_conjecture
             << "; (50,0.5): hoffman=" << b.mean_hoffman << " conjecture=" << b.mean_conjecture;
    o.require(a.mean_hoffman >= 5.8 && a.mean_hoffman <= 6.8, "(20,0.9) hoffman in [5.8,6.8]");
    o.require(a.mean_conjecture >= 7.7 && a.mean_conjecture <= 8.7, "(20,0.9) conjecture in [7.7,8.7]");
    o.require(b.mean_hoffman >= 4.0 && b.mean_hoffman <= 5.0, "(50,0.5) hoffman in [4.0,5.0]");
    o.require(b.mean_conjecture >= 2.7 && b.mean_conjecture <= 3.7, "(50,0.5) conjecture in [2.7,3.7]");
  });

  criterion(3, "exactness classes: conjecture = chi to 1e-6", 0, [&](Outcome& o) {
    int checked = 0;
    auto check = [&](const Graph& g, int chi) {
      ++checked;
      const auto r = spectral_report(g);
      if (!within(r.weaker.conjecture, chi, 1e-6)) o.require(false, g.name());
    };
    for (int n = 2; n <= 10; ++n) check(gen::complete(n), n);
    for (int a = 1; a <= 5; ++a)
      for (int b = 1; b <= 5; ++b) check(gen::complete_multipartite({a, b}), 2);
    for (int q = 2; q <= 5; ++q)
      for (int r = 1; r <= 4; ++r) check(gen::complete_multipartite(std::vector<int>(static_cast<std::size_t>(q), r)), q);
    o.detail << " graphs=" << checked;
  });

  criterion(4, "annihilation/reversal/pinching <= 1e-10 on the corpus; corrupted coloring >= 1", 0, [&](Outcome& o) {
    double worst = 0.0, weakest_sensitivity = INFINITY;
    int runs = 0;
    for (const Graph& g : standard_corpus()) {
      const auto chi = chromatic_number(g, tol.node_budget);
      if (!chi.exact) {
        o.require(false, g.name() + " chi unknown");
        continue;
      }
      const int c = std::max(2, *chi.exact);
      const auto& colors = chi.best.colors;
      const Matrix a = adjacency_matrix(g);
      for (int k = 0; k <= 20; ++k) {
        const WeightMatrix w = k == 0 ? WeightMatrix::all_ones(static_cast<std::size_t>(g.n()))
                                      : WeightMatrix::random_symmetric(static_cast<std::size_t>(g.n()),
                                                                       derive_seed(4, static_cast<std::uint64_t>(k)));
        const ComplexMatrix x(schur_product(w, a));
        build_unitaries(g, colors, c);
        worst = std::max({worst, annihilation_residual(x, colors, c), reversal_residual(x, colors, c),
                          pinching_check(x, colors, c)});
        ++runs;
      }
      auto bad = colors;
      const Edge e = g.edges().front();
      bad[static_cast<std::size_t>(e.v - 1)] = bad[static_cast<std::size_t>(e.u - 1)];
      weakest_sensitivity = std::min(weakest_sensitivity, annihilation_residual(ComplexMatrix(a), bad, c));
    }
    o.detail << " runs=" << runs << " worst=" << worst << " min_corrupted=" << weakest_sensitivity;
    o.require(worst <= 1e-10, "residual");
    o.require(weakest_sensitivity >= 1.0, "sensitivity");
  });

  criterion(5, "majorization (100 pairs) and trace inequality (100 pairs)", 0, [&](Outcome& o) {
    Rng sizes(5);
    int major_fail = 0, trace_fail = 0;
    double worst_gap = -INFINITY;
    for (std::uint64_t t = 0; t < 100; ++t) {
      const std::size_t n = 2 + sizes.below(11);
      const Matrix a = WeightMatrix::random_symmetric(n, derive_seed(51, t)).matrix();
      const Matrix b = WeightMatrix::random_symmetric(n, derive_seed(52, t)).matrix();
      const auto sa = eig_symmetric(a).values, sb = eig_symmetric(b).values, sab = eig_symmetric(a + b).values;
      std::vector<double> sum(n);
      for (std::size_t i = 0; i < n; ++i) sum[i] = sa[i] + sb[i];
      major_fail += !is_majorized(sab, sum, 1e-8);
    }
    for (std::uint64_t t = 0; t < 100; ++t) {
      const std::size_t n = 2 + sizes.below(11);
      const Matrix a = WeightMatrix::random_symmetric(n, derive_seed(53, t)).matrix();
      const Spectrum s = eig_symmetric(a);
      const ComplexMatrix abs_a(absolute_value(s));
      const ComplexMatrix neg(Matrix(n, n) - a);
      const ComplexMatrix u = random_unitary(n, derive_seed(54, t));
      const double t1 = trace(multiply(abs_a, multiply(multiply(u, neg), adjoint(u)))).real();
      const double t2 = trace(multiply(abs_a, multiply(multiply(adjoint(u), neg), u))).real();
      const double gap = 0.5 * t1 + 0.5 * t2 - spectral_sums(s).s_minus;
      worst_gap = std::max(worst_gap, gap);
      trace_fail += gap > 1e-8;
    }
    o.detail << " majorization_failures=" << major_fail << " trace_failures=" << trace_fail
             << " max(lhs-S-)=" << worst_gap;
    o.require(major_fail == 0, "majorization");
    o.require(trace_fail == 0, "trace inequality");
  });

  criterion(6, "soundness sweep over every graph on <= 6 vertices", 300.0, [&](Outcome& o) {
    ScanSpec spec;
    spec.kind = ScanSpec::Kind::exhaustive;
    spec.max_n = 6;
    spec.jobs = available_threads();
    const ScanResult r = counterexample_scan(spec, tol);
    o.detail << " graphs=" << r.graphs << " soundness_failures=" << r.soundness.total()
             << " conjecture_violations=" << r.conjecture_violations << " wilf_violations=" << r.wilf_violations
             << " budget_exceeded=" << r.budget_exceeded;
    o.require(r.graphs == 1 + 2 + 8 + 64 + 1024 + 32768, "graph count");
    o.require(r.soundness.total() == 0, "soundness");
    o.require(r.conjecture_violations == 0 && r.wilf_violations == 0, "violations");
    o.require(r.budget_exceeded == 0, "every chi computed");
  });

  criterion(7, "Hadamard graphs: representations for N in {2,4,8,12}, chi(G_4) = 4, unitaries N=4", 0,
            [&](Outcome& o) {
              for (int N : {2, 4, 8, 12}) {
                const auto chk = check_representation(gen::hadamard(N), hadamard_representation(N));
                o.detail << " N=" << N << ":" << chk.orthogonality;
                o.require(chk.orthogonality <= tol.conversion && chk.modulus <= tol.conversion,
                          "representation N=" + std::to_string(N));
              }
              const Graph h4 = gen::hadamard(4);
              const auto chi = chromatic_number(h4, tol.node_budget);
              o.detail << " chi=" << chi.exact.value_or(-1);
              o.require(chi.exact == 4, "chi(hadamard(4))");
              const auto us = representation_to_unitaries(hadamard_representation(4));
              const double res = conjugation_sum_residual(ComplexMatrix(adjacency_matrix(h4)), us);
              o.detail << " unitaries_residual=" << res;
              o.require(res <= 1e-10, "unitaries residual");
            });

  criterion(8, "eigensolver quality on the corpus; Petersen spectrum to 1e-8", 0, [&](Outcome& o) {
    double worst_ratio = 0.0;
    for (const Graph& g : standard_corpus()) {
      const Matrix a = adjacency_matrix(g);
      const Spectrum s = eig_symmetric(a, tol);
      const double t = residual_tolerance(a, tol);
      double sum = 0, sq = 0;
      for (double mu : s.values) {
        sum += mu;
        sq += mu * mu;
      }
      const double res = max_eigen_residual(a, s);
      const double orth = orthonormality_error(s);
      const double tr = std::abs(sum), sqerr = std::abs(sq - 2.0 * static_cast<double>(g.m()));
      worst_ratio = std::max({worst_ratio, res / t, orth / t, tr / t, sqerr / t});
      if (res > t || orth > t || tr > t || sqerr > t) o.require(false, g.name());
    }
    const Spectrum p = eig_symmetric(adjacency_matrix(gen::petersen()));
    const double expected[] = {3, 1, 1, 1, 1, 1, -2, -2, -2, -2};
    double perr = 0;
    for (std::size_t i = 0; i < 10; ++i) perr = std::max(perr, std::abs(p.values[i] - expected[i]));
    o.detail << " worst_check/tolerance=" << worst_ratio << " petersen_err=" << perr;
    o.require(perr <= 1e-8, "petersen spectrum");
  });

  criterion(9, "100 seeded gnp(10,0.85) and gnp(10,0.9): zero violations", 120.0, [&](Outcome& o) {
    for (double p : {0.85, 0.9}) {
      ScanSpec spec;
      spec.n = 10;
      spec.p = p;
      spec.trials = 100;
      spec.seed = 1009;
      const ScanResult r = counterexample_scan(spec, tol);
      o.detail << " p=" << p << ": graphs=" << r.graphs << " violations="
               << r.conjecture_violations + r.wilf_violations << " budget_exceeded=" << r.budget_exceeded;
      o.require(r.graphs == 100, "trial count");
      o.require(!r.any_violation(), "violations");
      o.require(r.budget_exceeded == 0, "every chi computed");
    }
  });

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
