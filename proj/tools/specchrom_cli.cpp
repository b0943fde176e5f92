// specchrom: spectral chromatic bounds, conversion checks and counterexample
// search from the command line.
//
// Exit codes: 0 success / all consistent, 1 bad input or failed verification,
// 2 a conjecture or Wilf violation was found.

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "specchrom/conversion.hpp"
#include "specchrom/errors.hpp"
#include "specchrom/exact.hpp"
#include "specchrom/generators.hpp"
#include "specchrom/graph_io.hpp"
#include "specchrom/harness.hpp"
#include "specchrom/output.hpp"
#include "specchrom/parallel.hpp"

using namespace specchrom;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_input = 1;
constexpr int exit_violation = 2;

struct InputSource {
  std::string family;
  std::string dimacs;
  std::string edgelist;

  void attach(CLI::App* cmd) {
    auto* f = cmd->add_option("--family", family, "generated graph, e.g. petersen, barbell:8, gnp:20:0.5:7");
    auto* d = cmd->add_option("--dimacs", dimacs, "DIMACS .col file")->check(CLI::ExistingFile);
    auto* e = cmd->add_option("--edgelist", edgelist, "edge-list file (n, then u v per line)")->check(CLI::ExistingFile);
    f->excludes(d)->excludes(e);
    d->excludes(e);
  }

  Graph load() const {
    const int given = !family.empty() + !dimacs.empty() + !edgelist.empty();
    if (given != 1) throw InputError("give exactly one of --family, --dimacs, --edgelist");
    if (!family.empty()) return gen::from_spec(family);
    std::vector<std::string> warnings;
    Graph g = dimacs.empty() ? io::read_graph_file(edgelist, false) : io::read_graph_file(dimacs, true, &warnings);
    for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';
    return g;
  }
};

std::optional<WeightMatrix> load_weights(const std::string& spec, int n) {
  if (spec.empty()) return std::nullopt;
  if (spec.rfind("random:", 0) == 0) {
    const std::string seed = spec.substr(7);
    if (seed.empty() || seed.find_first_not_of("0123456789") != std::string::npos)
      throw InputError("--weights random:SEED needs a non-negative integer seed");
    return WeightMatrix::random_symmetric(static_cast<std::size_t>(n), std::stoull(seed));
  }
  std::ifstream in(spec);
  if (!in) throw InputError("cannot open weight file " + spec);
  WeightMatrix w = io::parse_weights(in);
  if (w.size() != static_cast<std::size_t>(n))
    throw InputError("weight matrix is " + std::to_string(w.size()) + "x" + std::to_string(w.size()) +
                     " but the graph has " + std::to_string(n) + " vertices");
  return w;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path);
  if (!os) throw InputError("cannot write " + path);
  return os;
}

int default_jobs() {
  if (const char* env = std::getenv("SPECCHROM_JOBS")) {
    try {
      const int j = std::stoi(env);
      if (j >= 1) return j;
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring SPECCHROM_JOBS=" << env << '\n';
  }
  return 1;
}

void show_config(const Tolerances& t, int jobs) {
  nlohmann::ordered_json j{{"symmetry", t.symmetry},
                           {"jacobi_relative", t.jacobi_relative},
                           {"jacobi_max_sweeps", t.jacobi_max_sweeps},
                           {"residual_factor", t.residual_factor},
                           {"zero_factor", t.zero_factor},
                           {"conversion", t.conversion},
                           {"bound_slack", t.bound_slack},
                           {"majorization", t.majorization},
                           {"node_budget", t.node_budget},
                           {"jobs", jobs},
                           {"openmp_threads", available_threads()}};
  std::cout << j.dump(2) << '\n';
}

void print_bound_details(std::ostream& os, const ReportRow& row) {
  const BoundReport& r = row.report;
  auto line = [&](const std::string& key, double v, bool degenerate = false) {
    os << "  " << std::left << std::setw(22) << key << std::right << std::setw(12) << v
       << (degenerate ? "  (degenerate)" : "") << '\n';
  };
  const auto flags = os.flags();
  os << std::fixed << std::setprecision(4);
  os << r.name << ": n=" << r.n << " m=" << r.m << " inertia=(" << r.inertia.positive << "," << r.inertia.negative
     << "," << r.inertia.zero << ")\n";
  line("S+", r.sums.s_plus);
  line("S-", r.sums.s_minus);
  line("hoffman", r.hoffman.value, r.hoffman.degenerate);
  line("gen_hoffman", r.gen_hoffman.value, r.gen_hoffman.degenerate);
  os << "  " << std::left << std::setw(22) << "gen_hoffman_best_m" << std::right << std::setw(12)
     << r.gen_hoffman.best_m << '\n';
  line("weaker (S+/S-)", r.weaker.weaker, r.weaker.degenerate);
  line("conjecture (1+S+/S-)", r.weaker.conjecture, r.weaker.degenerate);
  line("cvetkovic", r.aux.cvetkovic.value, r.aux.cvetkovic.degenerate);
  line("myers_liu", r.aux.myers_liu.value, r.aux.myers_liu.degenerate);
  line("edwards_elphick", r.aux.edwards_elphick.value, r.aux.edwards_elphick.degenerate);
  line("bollobas_nikiforov", r.aux.bollobas_nikiforov.value, r.aux.bollobas_nikiforov.degenerate);
  line("wilf_upper", r.aux.wilf_upper);
  if (r.barnes) line("barnes", r.barnes->value, r.barnes->degenerate);
  if (r.weighted) {
    line("weighted gen_hoffman", r.weighted->gen_hoffman.value, r.weighted->degenerate);
    line("weighted S+/S-", r.weighted->weaker.weaker, r.weighted->degenerate);
  }
  if (r.chi_exact)
    os << "  chi                   " << std::setw(12) << *r.chi_exact << '\n';
  else if (r.chi_upper > 0)
    os << "  chi                   in [" << r.chi_lower << ", " << r.chi_upper << "] (budget exceeded)\n";
  if (r.alpha) {
    os << "  alpha                 " << std::setw(12) << *r.alpha << '\n';
    line("alpha_bound", *r.alpha_bound);
  }
  if (r.omega) os << "  omega                 " << std::setw(12) << *r.omega << '\n';
  os.flags(flags);
}

struct ResidualLine {
  std::string what;
  double value;
};

int report_residuals(const std::vector<ResidualLine>& lines, double tol) {
  bool ok = true;
  for (const auto& l : lines) {
    const bool pass = l.value <= tol;
    ok = ok && pass;
    std::cout << "  " << std::left << std::setw(34) << l.what << std::right << std::scientific << std::setprecision(3)
              << l.value << (pass ? "  ok" : "  FAIL") << '\n';
  }
  std::cout << (ok ? "all residuals <= " : "residual above ") << std::scientific << std::setprecision(1) << tol
            << '\n';
  return ok ? exit_ok : exit_input;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectral lower bounds on the chromatic number, unitary-conversion checks and counterexample search"};
  app.require_subcommand(0, 1);
  app.fallthrough();

  Tolerances tol = default_tolerances();
  int jobs = default_jobs();
  bool show = false;
  app.add_flag("--show-config", show, "print the active tolerances and exit");
  app.add_option("--jobs", jobs, "worker threads for harness trials (default: SPECCHROM_JOBS or 1)")
      ->check(CLI::PositiveNumber);
  app.add_option("--tol-conversion", tol.conversion, "conversion residual tolerance");
  app.add_option("--tol-slack", tol.bound_slack, "slack when comparing bounds with chi");
  app.add_option("--tol-zero", tol.zero_factor, "zero-eigenvalue factor (times n max|a|)");
  app.add_option("--tol-jacobi", tol.jacobi_relative, "Jacobi relative off-diagonal threshold");
  app.add_option("--max-sweeps", tol.jacobi_max_sweeps, "Jacobi sweep cap");
  app.add_option("--node-budget", tol.node_budget, "exact-solver node budget");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "every spectral bound for one graph");
  InputSource bounds_in;
  bounds_in.attach(bounds);
  bool exact = false, omega = false, barnes = false;
  std::string weights_spec, format = "table";
  int optimize_budget = 0;
  std::uint64_t bounds_seed = 0;
  bounds->add_flag("--exact", exact, "add exact chi and alpha");
  bounds->add_flag("--omega", omega, "add the exact clique number");
  bounds->add_flag("--barnes", barnes, "add the diagonal-scaling heuristic bound");
  bounds->add_option("--weights", weights_spec, "weight matrix file or random:SEED");
  auto* opt_w = bounds->add_option("--optimize-w", optimize_budget, "search over edge weights with this budget")
                    ->check(CLI::PositiveNumber);
  auto* bounds_seed_opt = bounds->add_option("--seed", bounds_seed, "seed for --optimize-w");
  opt_w->needs(bounds_seed_opt);
  bounds->add_option("--format", format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));

  // verify
  auto* verify = app.add_subcommand("verify", "check annihilation, reversal and pinching for a coloring");
  InputSource verify_in;
  verify_in.attach(verify);
  std::string coloring_path, verify_weights;
  bool representation = false;
  verify->add_option("--coloring", coloring_path, "one color per line; default: an exact minimum coloring")
      ->check(CLI::ExistingFile);
  verify->add_option("--weights", verify_weights, "weight matrix file or random:SEED (default: all ones)");
  verify->add_flag("--representation", representation, "use the Hadamard orthogonal representation (hadamard:N)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "mean bounds over seeded G(n,p) samples");
  int sweep_n = 0, sweep_trials = 15;
  double sweep_p = 0.5;
  std::uint64_t sweep_seed = 0;
  std::string sweep_csv, sweep_json;
  sweep->add_option("--n", sweep_n, "vertices")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--p", sweep_p, "edge probability")->required();
  sweep->add_option("--trials", sweep_trials, "samples")->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed, "master seed")->required();
  sweep->add_option("--csv", sweep_csv, "write per-trial CSV here");
  sweep->add_option("--json", sweep_json, "write JSON summary here");

  // search
  auto* search = app.add_subcommand("search", "counterexample search against exact chi");
  ScanSpec scan;
  bool exhaustive = false;
  std::string gnp_spec, search_csv, search_json;
  auto* ex_flag = search->add_flag("--exhaustive", exhaustive, "every labeled graph on up to --max-n vertices");
  search->add_option("--max-n", scan.max_n, "largest n for --exhaustive (1..8)");
  auto* gnp_opt = search->add_option("--gnp", gnp_spec, "N:P random graphs");
  ex_flag->excludes(gnp_opt);
  search->add_option("--trials", scan.trials, "random samples")->check(CLI::NonNegativeNumber);
  auto* search_seed = search->add_option("--seed", scan.seed, "master seed");
  search->add_option("--budget", scan.node_budget, "exact-solver node budget per graph");
  search->add_option("--csv", search_csv, "write findings CSV here");
  search->add_option("--json", search_json, "write findings as JSON lines here");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "bounds over the bundled named-graph corpus");
  std::string corpus_format = "table";
  bool corpus_barnes = false;
  corpus->add_option("--format", corpus_format, "table, csv or json")
      ->check(CLI::IsMember({"table", "csv", "json"}));
  corpus->add_flag("--barnes", corpus_barnes, "add the diagonal-scaling heuristic bound");

  // recheck
  auto* rechk = app.add_subcommand("recheck", "recompute verdicts for stored findings");
  std::string findings_path;
  rechk->add_option("--json", findings_path, "JSON lines written by search --json")
      ->required()
      ->check(CLI::ExistingFile);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? exit_ok : exit_input;
  }

  try {
    if (show) {
      show_config(tol, jobs);
      return exit_ok;
    }

    if (*bounds) {
      const Graph g = bounds_in.load();
      EvalOptions opt;
      opt.exact = exact;
      opt.omega = omega;
      opt.barnes = barnes;
      opt.weights = load_weights(weights_spec, g.n());
      opt.tol = tol;
      const ReportRow row = evaluate_graph(g, opt);
      if (!row.error.empty()) throw InputError(row.error);
      if (format == "csv")
        out::write_report_csv(std::cout, {row});
      else if (format == "json")
        std::cout << out::report_to_json(row).dump() << '\n';
      else
        print_bound_details(std::cout, row);
      if (optimize_budget > 0) {
        const WeightSearch ws = optimize_w(g, optimize_budget, bounds_seed, tol);
        if (format == "json") {
          std::cout << nlohmann::json{{"optimize_w",
                                       {{"evaluations", ws.evaluations},
                                        {"best_gen_hoffman", ws.best_gen_hoffman},
                                        {"best_weaker", ws.best_weaker}}}}
                           .dump()
                    << '\n';
        } else {
          std::cout << std::fixed << std::setprecision(4) << "optimize_w (" << ws.evaluations
                    << " evaluations): best gen_hoffman " << ws.best_gen_hoffman << ", best S+/S- " << ws.best_weaker
                    << '\n';
        }
      }
      return exit_ok;
    }

    if (*verify) {
      const Graph g = verify_in.load();
      const auto w = load_weights(verify_weights, g.n()).value_or(WeightMatrix::all_ones(static_cast<std::size_t>(g.n())));
      const ComplexMatrix x(schur_product(w, adjacency_matrix(g)));

      if (representation) {
        const auto colon = verify_in.family.find(':');
        if (verify_in.family.rfind("hadamard:", 0) != 0 || colon == std::string::npos)
          throw InputError("--representation needs --family hadamard:N");
        const int N = std::stoi(verify_in.family.substr(colon + 1));
        const auto rep = hadamard_representation(N);
        const auto chk = check_representation(g, rep);
        std::cout << g.name() << ": Hadamard representation, d=" << rep.dimension << '\n';
        return report_residuals({{"orthogonality", chk.orthogonality},
                                 {"modulus", chk.modulus},
                                 {"annihilation (d unitaries)",
                                  conjugation_sum_residual(x, representation_to_unitaries(rep))}},
                                tol.conversion);
      }

      std::vector<int> colors;
      int c = 0;
      if (!coloring_path.empty()) {
        std::ifstream in(coloring_path);
        colors = io::parse_coloring(in);
        for (int col : colors) c = std::max(c, col);
      } else {
        const auto chi = chromatic_number(g, tol.node_budget);
        colors = chi.best.colors;
        c = chi.upper;
      }
      if (g.m() > 0 && c < 2) c = 2;
      try {
        build_unitaries(g, colors, c);
      } catch (const ImproperColoring& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_input;
      }
      std::cout << g.name() << ": " << c << "-coloring, W " << (verify_weights.empty() ? "all ones" : verify_weights)
                << '\n';
      return report_residuals({{"annihilation", annihilation_residual(x, colors, c)},
                               {"reversal", reversal_residual(x, colors, c)},
                               {"pinching", pinching_check(x, colors, c)}},
                              tol.conversion);
    }

    if (*sweep) {
      const SweepResult r = random_sweep(sweep_n, sweep_p, sweep_trials, sweep_seed, jobs);
      if (!sweep_csv.empty()) {
        auto os = open_output(sweep_csv);
        out::write_sweep_csv(os, r);
      }
      if (!sweep_json.empty()) {
        auto os = open_output(sweep_json);
        os << out::sweep_to_json(r).dump() << '\n';
      }
      std::cout << std::fixed << std::setprecision(4) << "n=" << r.n << " p=" << r.p << " trials=" << r.trials.size()
                << "\n  mean hoffman     " << r.mean_hoffman << "\n  mean gen_hoffman " << r.mean_gen_hoffman
                << "\n  mean conjecture  " << r.mean_conjecture << "\n  bollobas (ref)   " << r.bollobas_formula
                << '\n';
      return exit_ok;
    }

    if (*search) {
      if (exhaustive) {
        scan.kind = ScanSpec::Kind::exhaustive;
      } else {
        if (gnp_spec.empty()) throw InputError("search needs --exhaustive or --gnp N:P");
        if (search_seed->count() == 0) throw InputError("search --gnp needs --seed");
        const auto colon = gnp_spec.find(':');
        if (colon == std::string::npos) throw InputError("--gnp expects N:P");
        try {
          scan.n = std::stoi(gnp_spec.substr(0, colon));
          scan.p = std::stod(gnp_spec.substr(colon + 1));
        } catch (const std::exception&) {
          throw InputError("--gnp expects N:P, got '" + gnp_spec + "'");
        }
        scan.kind = ScanSpec::Kind::gnp;
      }
      scan.jobs = jobs;
      const ScanResult r = counterexample_scan(scan, tol);
      if (!search_csv.empty()) {
        auto os = open_output(search_csv);
        out::write_findings_csv(os, r.findings);
      }
      if (!search_json.empty()) {
        auto os = open_output(search_json);
        out::write_findings_jsonl(os, r.findings);
      }
      std::cout << out::scan_summary_to_json(r).dump(2) << '\n';
      for (const auto& f : r.findings) std::cout << to_string(f.verdict) << "  " << f.id << '\n';
      return r.any_violation() ? exit_violation : exit_ok;
    }

    if (*corpus) {
      EvalOptions opt;
      opt.barnes = corpus_barnes;
      opt.jobs = jobs;
      opt.tol = tol;
      const auto rows = corpus_run(standard_corpus(), opt);
      if (corpus_format == "csv") {
        out::write_report_csv(std::cout, rows);
      } else if (corpus_format == "json") {
        out::write_report_jsonl(std::cout, rows);
      } else {
        out::write_report_table(std::cout, rows);
        const auto s = summarize(rows);
        std::cout << std::fixed << std::setprecision(1) << "\n" << s.graphs << " graphs with edges: gen_hoffman > hoffman on "
                  << s.gen_percent << "%, conjecture > hoffman on " << s.conjecture_percent << "%\n";
      }
      bool violation = false;
      for (const auto& row : rows) {
        const Verdict v = classify(row.report, tol.bound_slack);
        violation = violation || v == Verdict::conjecture_violation || v == Verdict::wilf_violation;
      }
      return violation ? exit_violation : exit_ok;
    }

    if (*rechk) {
      std::ifstream in(findings_path);
      const auto findings = out::read_findings_jsonl(in);
      bool violation = false;
      for (const auto& f : findings) {
        const Verdict v = recheck(f, tol);
        violation = violation || v == Verdict::conjecture_violation || v == Verdict::wilf_violation;
        std::cout << to_string(v) << (v == f.verdict ? "" : "  (stored: " + std::string(to_string(f.verdict)) + ")")
                  << "  " << f.id << '\n';
      }
      std::cout << findings.size() << " findings rechecked\n";
      return violation ? exit_violation : exit_ok;
    }

    std::cout << app.help();
    return exit_ok;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << '\n';
  } catch (const nlohmann::json::exception& e) {
    std::cerr << "json error: " << e.what() << '\n';
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
  }
  return exit_input;
}
