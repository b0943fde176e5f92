#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "specchrom/errors.hpp"
#include "specchrom/generators.hpp"
#include "specchrom/harness.hpp"
#include "specchrom/output.hpp"
#include "specchrom/parallel.hpp"
#include "specchrom/rng.hpp"

using namespace specchrom;
using doctest::Approx;

namespace {

std::string csv_of(const std::vector<ReportRow>& rows) {
  std::ostringstream os;
  out::write_report_csv(os, rows);
  return os.str();
}

}  // namespace

TEST_CASE("parallel map matches the serial reference") {
  auto fn = [](std::size_t i) { return static_cast<double>(i * i) * 0.5; };
  CHECK(map_indexed(1000, 4, fn) == map_indexed_serial(1000, fn));
  CHECK(map_indexed(0, 4, fn).empty());
  CHECK_THROWS_AS(map_indexed(50, 4,
                              [](std::size_t i) -> int {
                                if (i == 17) throw InputError("boom");
                                return 0;
                              }),
                  InputError);
}

TEST_CASE("corpus rows") {
  const std::vector<Graph> graphs{gen::complete(3), gen::cycle(5), gen::petersen()};
  const auto rows = corpus_run(graphs, EvalOptions{});
  REQUIRE(rows.size() == 3);
  const auto& k3 = rows[0].report;
  CHECK(k3.hoffman.value == Approx(3.0));
  CHECK(k3.gen_hoffman.value == Approx(3.0));
  CHECK(k3.weaker.conjecture == Approx(3.0));
  CHECK(k3.chi_exact == 3);
  const auto& c5 = rows[1].report;
  CHECK(c5.hoffman.value == Approx(2.2361).epsilon(1e-4));
  CHECK(c5.chi_exact == 3);
  const auto& p = rows[2].report;
  CHECK(p.hoffman.value == Approx(2.5));
  CHECK(p.weaker.conjecture == Approx(1.875));
  CHECK(p.chi_exact == 3);
  CHECK(p.alpha == 4);
  CHECK(*p.alpha_bound == Approx(7.0));
  CHECK_FALSE(rows[2].gen_beats_hoffman);
  CHECK_FALSE(rows[2].conjecture_beats_hoffman);
  REQUIRE(rows[2].coloring.has_value());
  CHECK(is_proper(gen::petersen(), rows[2].coloring->colors, 3));

  CHECK(corpus_run({}, EvalOptions{}).empty());
}

TEST_CASE("standard corpus run is sound and identical in parallel") {
  const auto corpus = standard_corpus();
  EvalOptions serial;
  serial.omega = true;
  EvalOptions parallel = serial;
  parallel.jobs = 4;
  const auto a = corpus_run(corpus, serial);
  const auto b = corpus_run(corpus, parallel);
  CHECK(csv_of(a) == csv_of(b));
  CHECK(csv_of(a) == csv_of(corpus_run(corpus, serial)));

  for (const auto& row : a) {
    CAPTURE(row.report.name);
    CHECK(row.error.empty());
    const auto& r = row.report;
    REQUIRE(r.chi_exact.has_value());
    const double chi = *r.chi_exact;
    CHECK(r.hoffman.value <= chi + 1e-6);
    CHECK(r.gen_hoffman.value <= chi + 1e-6);
    CHECK(r.gen_hoffman.value >= r.hoffman.value - 1e-12);
    CHECK(r.weaker.weaker <= chi + 1e-6);
    CHECK(r.weaker.conjecture <= chi + 1e-6);
    CHECK(r.aux.cvetkovic.value <= chi + 1e-6);
    CHECK(r.aux.edwards_elphick.value <= chi + 1e-6);
    CHECK(r.aux.wilf_upper >= chi - 1e-6);
    CHECK(*r.alpha_bound >= chi);
    CHECK(std::abs(r.weaker.conjecture - r.weaker.weaker - 1.0) <= 1e-12);
    CHECK(*r.omega <= chi);
    CHECK(classify(r) == Verdict::consistent);
  }

  const auto summary = summarize(a);
  CHECK(summary.graphs == static_cast<int>(corpus.size()));
  CHECK(summary.gen_percent >= 0.0);
  CHECK(summary.gen_percent <= 100.0);
}

TEST_CASE("coxeter: conjecture sits strictly between clique number and chi") {
  EvalOptions opt;
  opt.omega = true;
  const auto row = evaluate_graph(gen::coxeter(), opt);
  CHECK(row.report.omega == 2);
  CHECK(row.report.chi_exact == 3);
  CHECK(row.report.weaker.conjecture > 2.0);
  CHECK(row.report.weaker.conjecture <= 3.0 + 1e-6);
}

TEST_CASE("barbell(8) row") {
  const auto row = evaluate_graph(gen::barbell(8), EvalOptions{});
  CHECK(std::abs(row.report.hoffman.value - 4.8) <= 0.05);
  CHECK(std::abs(row.report.gen_hoffman.value - 5.9) <= 0.05);
  CHECK(std::abs(row.report.weaker.conjecture - 7.3) <= 0.05);
  CHECK(row.report.chi_exact == 8);
  CHECK(row.gen_beats_hoffman);
  CHECK(row.conjecture_beats_hoffman);
}

TEST_CASE("errors stay on their own row") {
  EvalOptions opt;
  opt.weights = WeightMatrix::all_ones(5);
  const auto rows = corpus_run({gen::cycle(5), gen::complete(3)}, opt);
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].error.empty());
  CHECK_FALSE(rows[1].error.empty());
}

TEST_CASE("random sweep is reproducible and seeds trials independently") {
  const auto a = random_sweep(15, 0.5, 6, 77);
  const auto b = random_sweep(15, 0.5, 6, 77, 4);
  REQUIRE(a.trials.size() == 6);
  std::ostringstream sa, sb;
  out::write_sweep_csv(sa, a);
  out::write_sweep_csv(sb, b);
  CHECK(sa.str() == sb.str());
  for (std::size_t t = 0; t < 6; ++t) {
    CHECK(a.trials[t].seed == derive_seed(77, t));
    CHECK(a.trials[t].m == gen::gnp(15, 0.5, derive_seed(77, t)).m());
  }
  double mean = 0;
  for (const auto& t : a.trials) mean += t.conjecture;
  CHECK(a.mean_conjecture == Approx(mean / 6));
  CHECK(a.bollobas_formula == Approx(bollobas_formula(15, 0.5)));
  CHECK(bollobas_formula(16, 0.5) == Approx(2.0));
  CHECK_THROWS_AS(random_sweep(10, 0.5, 0, 1), InputError);
  CHECK_THROWS_AS(random_sweep(10, 1.0, 3, 1), InputError);
}

TEST_CASE("verdict logic") {
  CHECK(classify(3.0, 2.0, 4.0, false, 3) == Verdict::consistent);
  CHECK(classify(3.0 + 1e-7, 2.0, 4.0, false, 3) == Verdict::consistent);
  CHECK(classify(3.5, 2.5, 4.0, false, 3) == Verdict::conjecture_violation);
  CHECK(classify(3.0, 5.0, 4.0, false, 6) == Verdict::wilf_violation);
  CHECK(classify(3.0, 2.0, 4.0, false, std::nullopt) == Verdict::budget_exceeded);
  CHECK(classify(1.0, 0.0, 0.0, true, 1) == Verdict::consistent);
  for (auto v : {Verdict::consistent, Verdict::conjecture_violation, Verdict::wilf_violation,
                 Verdict::budget_exceeded})
    CHECK(verdict_from_string(to_string(v)) == v);
  CHECK(std::string(to_string(Verdict::conjecture_violation)) == "CONJECTURE-VIOLATION");
  CHECK_THROWS_AS(verdict_from_string("fine"), InputError);
}

TEST_CASE("findings round-trip through JSON and recheck") {
  const Graph g = gen::petersen();
  const auto row = evaluate_graph(g, EvalOptions{});
  SearchFinding f = make_finding("petersen", g, row);
  CHECK(f.chi == 3);
  CHECK(f.conjecture == Approx(1.875));

  const SearchFinding back = out::finding_from_json(out::finding_to_json(f));
  CHECK(back.id == f.id);
  CHECK(back.edges == f.edges);
  CHECK(back.eigenvalues == f.eigenvalues);
  CHECK(back.conjecture == f.conjecture);
  CHECK(back.chi == f.chi);
  CHECK(back.coloring == f.coloring);
  CHECK(back.verdict == f.verdict);
  CHECK(recheck(back) == Verdict::consistent);

  // a tampered record is reclassified from the graph, not from stored values
  SearchFinding forged = back;
  forged.conjecture = 99.0;
  forged.verdict = Verdict::conjecture_violation;
  CHECK(recheck(forged) == Verdict::consistent);
  CHECK(classify(forged.conjecture, forged.weaker, forged.mu1, false, forged.chi) == Verdict::conjecture_violation);

  SearchFinding bad = back;
  bad.coloring.assign(bad.coloring.size(), 1);
  CHECK_THROWS_AS(recheck(bad), InputError);

  std::stringstream ss;
  out::write_findings_jsonl(ss, {f, f});
  const auto read = out::read_findings_jsonl(ss);
  CHECK(read.size() == 2);
  CHECK_THROWS_AS(out::finding_from_json(nlohmann::json::object()), InputError);
}

TEST_CASE("exhaustive enumeration") {
  CHECK(graph_from_mask(3, 0b111) == gen::complete(3));
  CHECK(graph_from_mask(3, 0b001) == Graph::from_edge_list(3, {{1, 2}}));
  CHECK(graph_from_mask(3, 0b100) == Graph::from_edge_list(3, {{2, 3}}));

  ScanSpec spec;
  spec.kind = ScanSpec::Kind::exhaustive;
  spec.max_n = 4;
  const auto r = counterexample_scan(spec);
  CHECK(r.graphs == 1 + 2 + 8 + 64);
  CHECK(r.consistent == r.graphs);
  CHECK(r.soundness.total() == 0);
  CHECK_FALSE(r.any_violation());
  CHECK(r.bipartite_mismatch == 0);
  CHECK(r.bipartite_checked > 0);
  CHECK(r.findings.empty());

  // brute-force count of bipartite graphs with an edge on <= 4 vertices
  int bipartite = 0;
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask)
      bipartite += oracle::chromatic_number(graph_from_mask(n, mask)) == 2;
  CHECK(r.bipartite_checked == bipartite);

  spec.jobs = 4;
  const auto p = counterexample_scan(spec);
  CHECK(p.consistent == r.consistent);
  CHECK(p.bipartite_checked == r.bipartite_checked);

  spec.max_n = 9;
  CHECK_THROWS_AS(counterexample_scan(spec), InputError);
}

TEST_CASE("gnp scan and budget handling") {
  ScanSpec spec;
  spec.n = 9;
  spec.p = 0.6;
  spec.trials = 20;
  spec.seed = 3;
  const auto r = counterexample_scan(spec);
  CHECK(r.graphs == 20);
  CHECK_FALSE(r.any_violation());

  spec.n = 40;
  spec.trials = 3;
  spec.node_budget = 1;
  const auto tight = counterexample_scan(spec);
  CHECK(tight.budget_exceeded + tight.consistent == 3);
  for (const auto& f : tight.findings) {
    CHECK(f.verdict == Verdict::budget_exceeded);
    CHECK_FALSE(f.chi.has_value());
  }
}

TEST_CASE("report CSV header and JSON shape") {
  const auto rows = corpus_run({gen::petersen()}, EvalOptions{});
  const std::string csv = csv_of(rows);
  std::string header;
  for (std::size_t i = 0; i < out::report_columns.size(); ++i) header += (i ? "," : "") + out::report_columns[i];
  CHECK(csv.rfind(header + "\n", 0) == 0);
  const auto j = out::report_to_json(rows[0]);
  CHECK(j.at("name") == "petersen");
  CHECK(j.at("chi") == 3);
  CHECK(j.at("verdict") == "consistent");
  CHECK(out::format_double(0.1) == "0.1");
  CHECK(out::format_double(2.0) == "2");
}
