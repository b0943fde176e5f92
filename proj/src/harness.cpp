#include "specchrom/harness.hpp"

#include <cmath>
#include <stdexcept>

#include "specchrom/errors.hpp"
#include "specchrom/generators.hpp"
#include "specchrom/parallel.hpp"
#include "specchrom/rng.hpp"

namespace specchrom {

ReportRow evaluate_graph(const Graph& g, const EvalOptions& options) {
  ReportRow row;
  ReportOptions ro;
  ro.barnes = options.barnes;
  ro.weights = options.weights;
  row.report = spectral_report(g, ro, options.tol);
  BoundReport& r = row.report;
  if (options.exact) {
    const ChromaticResult chi = chromatic_number(g, options.tol.node_budget);
    r.chi_exact = chi.exact;
    r.chi_lower = chi.lower;
    r.chi_upper = chi.upper;
    if (chi.exact) row.coloring = chi.best;
    const CliqueResult alpha = independence_number(g, options.tol.node_budget);
    if (alpha.exact) {
      r.alpha = alpha.exact;
      r.alpha_bound = alpha_bound(g, *alpha.exact);
    }
  }
  if (options.omega) {
    const CliqueResult omega = max_clique(g, options.tol.node_budget);
    r.omega = omega.exact;
  }
  row.gen_beats_hoffman = r.gen_hoffman.value > r.hoffman.value + 1e-9;
  row.conjecture_beats_hoffman = r.weaker.conjecture > r.hoffman.value + 1e-9;
  return row;
}

std::vector<ReportRow> corpus_run(const std::vector<Graph>& graphs, const EvalOptions& options) {
  return map_indexed(graphs.size(), options.jobs, [&](std::size_t i) {
    try {
      return evaluate_graph(graphs[i], options);
    } catch (const std::exception& e) {
      ReportRow row;
      row.report.name = graphs[i].name();
      row.report.n = graphs[i].n();
      row.report.m = graphs[i].m();
      row.error = e.what();
      return row;
    }
  });
}

CorpusSummary summarize(const std::vector<ReportRow>& rows) {
  CorpusSummary s;
  for (const auto& row : rows) {
    if (!row.error.empty() || !row.report.has_edges()) continue;
    ++s.graphs;
    s.gen_beats_hoffman += row.gen_beats_hoffman;
    s.conjecture_beats_hoffman += row.conjecture_beats_hoffman;
  }
  if (s.graphs > 0) {
    s.gen_percent = 100.0 * s.gen_beats_hoffman / s.graphs;
    s.conjecture_percent = 100.0 * s.conjecture_beats_hoffman / s.graphs;
  }
  return s;
}

std::vector<Graph> standard_corpus() {
  using namespace gen;
  std::vector<Graph> c;
  for (int n : {3, 4, 5, 6, 7, 9}) c.push_back(cycle(n));
  for (int n : {2, 3, 4, 5, 6}) c.push_back(complete(n));
  c.push_back(complete_multipartite({2, 3}));
  c.push_back(complete_multipartite({3, 3}));
  c.push_back(complete_multipartite({2, 2, 2}));
  c.push_back(complete_multipartite({3, 3, 3}));
  c.push_back(complete_multipartite({1, 2, 3}));
  c.push_back(star(5));
  c.push_back(path(6));
  c.push_back(petersen());
  c.push_back(kneser(6, 2));
  c.push_back(kneser(7, 2));
  c.push_back(kneser(7, 3));
  c.push_back(coxeter());
  c.push_back(hypercube(3));
  c.push_back(hypercube(4));
  c.push_back(barbell(4));
  c.push_back(barbell(8));
  c.push_back(barbell_path(5, 2));
  c.push_back(hadamard(4));
  return c;
}

double bollobas_formula(int n, double p) {
  const double b = 1.0 / (1.0 - p);
  return 0.5 * n / (std::log(static_cast<double>(n)) / std::log(b));
}

SweepResult random_sweep(int n, double p, int trials, std::uint64_t seed, int jobs) {
  if (trials < 1) throw InputError("sweep needs at least one trial");
  if (!(p > 0.0 && p < 1.0)) throw InputError("sweep needs 0 < p < 1");
  SweepResult out;
  out.n = n;
  out.p = p;
  out.trials = map_indexed(static_cast<std::size_t>(trials), jobs, [&](std::size_t t) {
    SweepTrial trial;
    trial.seed = derive_seed(seed, t);
    const Graph g = gen::gnp(n, p, trial.seed);
    const BoundReport r = spectral_report(g);
    trial.m = r.m;
    trial.hoffman = r.hoffman.value;
    trial.gen_hoffman = r.gen_hoffman.value;
    trial.conjecture = r.weaker.conjecture;
    return trial;
  });
  for (const auto& t : out.trials) {
    out.mean_hoffman += t.hoffman;
    out.mean_gen_hoffman += t.gen_hoffman;
    out.mean_conjecture += t.conjecture;
  }
  out.mean_hoffman /= trials;
  out.mean_gen_hoffman /= trials;
  out.mean_conjecture /= trials;
  out.bollobas_formula = bollobas_formula(n, p);
  return out;
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::conjecture_violation: return "CONJECTURE-VIOLATION";
    case Verdict::wilf_violation: return "WILF-VIOLATION";
    case Verdict::budget_exceeded: return "budget-exceeded";
  }
  return "?";
}

Verdict verdict_from_string(const std::string& s) {
  for (Verdict v : {Verdict::consistent, Verdict::conjecture_violation, Verdict::wilf_violation,
                    Verdict::budget_exceeded})
    if (s == to_string(v)) return v;
  throw InputError("unknown verdict '" + s + "'");
}

Verdict classify(double conjecture, double weaker, double mu1, bool degenerate, std::optional<int> chi,
                 double slack) {
  if (degenerate) return chi ? Verdict::consistent : Verdict::budget_exceeded;
  if (chi && conjecture > *chi + slack) return Verdict::conjecture_violation;
  if (weaker > mu1 + slack) return Verdict::wilf_violation;
  if (!chi) return Verdict::budget_exceeded;
  return Verdict::consistent;
}

Verdict classify(const BoundReport& r, double slack) {
  const double mu1 = r.eigenvalues.empty() ? 0.0 : r.eigenvalues.front();
  return classify(r.weaker.conjecture, r.weaker.weaker, mu1, r.weaker.degenerate, r.chi_exact, slack);
}

SearchFinding make_finding(std::string id, const Graph& g, const ReportRow& row, double slack) {
  SearchFinding f;
  f.id = std::move(id);
  f.n = g.n();
  f.edges = g.edges();
  f.eigenvalues = row.report.eigenvalues;
  f.conjecture = row.report.weaker.conjecture;
  f.weaker = row.report.weaker.weaker;
  f.mu1 = f.eigenvalues.empty() ? 0.0 : f.eigenvalues.front();
  f.degenerate = row.report.weaker.degenerate;
  f.chi = row.report.chi_exact;
  if (row.coloring) f.coloring = row.coloring->colors;
  f.verdict = classify(row.report, slack);
  return f;
}

Verdict recheck(const SearchFinding& f, const Tolerances& tol) {
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : f.edges) pairs.emplace_back(e.u, e.v);
  const Graph g = Graph::from_edge_list(f.n, pairs, f.id);
  EvalOptions opt;
  opt.tol = tol;
  const ReportRow row = evaluate_graph(g, opt);
  if (!f.coloring.empty()) {
    const int c = row.report.chi_exact.value_or(f.n);
    if (!is_proper(g, f.coloring, f.chi.value_or(c)))
      throw InputError("finding " + f.id + " carries an improper coloring");
  }
  return classify(row.report, tol.bound_slack);
}

Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<std::pair<int, int>> pairs;
  int bit = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j, ++bit)
      if ((mask >> bit) & 1u) pairs.emplace_back(i, j);
  return Graph::from_edge_list(n, pairs, "n" + std::to_string(n) + "_mask" + std::to_string(mask));
}

namespace {

struct Outcome {
  Verdict verdict = Verdict::consistent;
  SoundnessTally soundness;
  bool bipartite = false;
  bool bipartite_mismatch = false;
  std::optional<SearchFinding> finding;
};

Outcome assess(const Graph& g, const std::string& id, const Tolerances& tol) {
  EvalOptions opt;
  opt.tol = tol;
  const ReportRow row = evaluate_graph(g, opt);
  const BoundReport& r = row.report;
  Outcome o;
  o.verdict = classify(r, tol.bound_slack);
  if (r.chi_exact) {
    const double chi = *r.chi_exact;
    const double slack = tol.bound_slack;
    SoundnessTally& s = o.soundness;
    s.hoffman_above_chi += r.hoffman.value > chi + slack;
    s.gen_hoffman_above_chi += r.gen_hoffman.value > chi + slack;
    s.weaker_above_chi += r.weaker.weaker > chi + slack;
    s.gen_below_hoffman += r.gen_hoffman.value < r.hoffman.value - 1e-12;
    s.wilf_below_chi += r.aux.wilf_upper < chi - slack;
    if (r.alpha) {
      s.alpha_theorem += static_cast<double>(r.n - *r.alpha) < r.weaker.weaker - 1e-9;
      s.alpha_bound_below_chi += *r.alpha_bound < chi;
    }
    if (*r.chi_exact == 2) {
      o.bipartite = true;
      o.bipartite_mismatch = std::abs(r.weaker.conjecture - 2.0) > 1e-9;
    }
  }
  if (o.verdict != Verdict::consistent) o.finding = make_finding(id, g, row, tol.bound_slack);
  return o;
}

}  // namespace

ScanResult counterexample_scan(const ScanSpec& spec, const Tolerances& base_tol) {
  Tolerances tol = base_tol;
  tol.node_budget = spec.node_budget;

  std::vector<Outcome> outcomes;
  if (spec.kind == ScanSpec::Kind::gnp) {
    if (spec.trials < 0) throw InputError("trials must be non-negative");
    outcomes = map_indexed(static_cast<std::size_t>(spec.trials), spec.jobs, [&](std::size_t t) {
      const std::uint64_t s = derive_seed(spec.seed, t);
      return assess(gen::gnp(spec.n, spec.p, s), "gnp(" + std::to_string(spec.n) + "," + std::to_string(spec.p) +
                                                     ",trial=" + std::to_string(t) + ",seed=" + std::to_string(s) + ")",
                    tol);
    });
  } else {
    if (spec.max_n < 1 || spec.max_n > 8) throw InputError("exhaustive scan supports max_n in 1..8");
    // offsets[k] = index of the first graph on k+1 vertices
    std::vector<std::uint64_t> offsets{0};
    for (int n = 1; n <= spec.max_n; ++n) offsets.push_back(offsets.back() + (1ULL << (n * (n - 1) / 2)));
    outcomes = map_indexed(static_cast<std::size_t>(offsets.back()), spec.jobs, [&](std::size_t idx) {
      int n = 1;
      while (idx >= offsets[static_cast<std::size_t>(n)]) ++n;
      const std::uint64_t mask = idx - offsets[static_cast<std::size_t>(n - 1)];
      const Graph g = graph_from_mask(n, mask);
      return assess(g, g.name(), tol);
    });
  }

  ScanResult out;
  for (auto& o : outcomes) {
    ++out.graphs;
    switch (o.verdict) {
      case Verdict::consistent: ++out.consistent; break;
      case Verdict::conjecture_violation: ++out.conjecture_violations; break;
      case Verdict::wilf_violation: ++out.wilf_violations; break;
      case Verdict::budget_exceeded: ++out.budget_exceeded; break;
    }
    const SoundnessTally& s = o.soundness;
    out.soundness.hoffman_above_chi += s.hoffman_above_chi;
    out.soundness.gen_hoffman_above_chi += s.gen_hoffman_above_chi;
    out.soundness.weaker_above_chi += s.weaker_above_chi;
    out.soundness.gen_below_hoffman += s.gen_below_hoffman;
    out.soundness.alpha_theorem += s.alpha_theorem;
    out.soundness.wilf_below_chi += s.wilf_below_chi;
    out.soundness.alpha_bound_below_chi += s.alpha_bound_below_chi;
    out.bipartite_checked += o.bipartite;
    out.bipartite_mismatch += o.bipartite_mismatch;
    if (o.finding) out.findings.push_back(std::move(*o.finding));
  }
  return out;
}

}  // namespace specchrom
