#include "specchrom/output.hpp"

#include <charconv>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

#include "specchrom/errors.hpp"

namespace specchrom::out {

const std::vector<std::string> report_columns{
    "name",       "n",          "m",           "pi",          "nu",         "delta",
    "s_plus",     "s_minus",    "energy_half", "hoffman",     "gen_hoffman", "gen_hoffman_best_m",
    "weaker",     "conjecture", "cvetkovic",   "myers_liu",   "edwards_elphick", "bollobas_nikiforov",
    "wilf_upper", "barnes",     "weighted_gen_hoffman", "weighted_weaker", "chi", "chi_lower",
    "chi_upper",  "alpha",      "alpha_bound", "omega",       "gen_gt_hoffman", "conj_gt_hoffman",
    "degenerate", "error"};

const std::vector<std::string> sweep_columns{"trial", "seed", "n", "p", "m", "hoffman", "gen_hoffman", "conjecture"};

const std::vector<std::string> finding_columns{"id",  "verdict", "n",        "m",     "conjecture",
                                               "weaker", "mu1",  "chi",      "edges"};

std::string format_double(double x) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, ptr);
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

template <class T>
std::string opt(const std::optional<T>& v) {
  if (!v) return {};
  if constexpr (std::is_floating_point_v<T>)
    return format_double(*v);
  else
    return std::to_string(*v);
}

void write_row(std::ostream& os, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) os << (i ? "," : "") << csv_field(fields[i]);
  os << '\n';
}

std::string degenerate_list(const BoundReport& r) {
  std::string s;
  auto add = [&](bool flag, const char* name) {
    if (flag) s += (s.empty() ? "" : "|") + std::string(name);
  };
  add(r.hoffman.degenerate, "hoffman");
  add(r.gen_hoffman.degenerate, "gen_hoffman");
  add(r.weaker.degenerate, "weaker");
  add(r.aux.cvetkovic.degenerate, "cvetkovic");
  add(r.aux.myers_liu.degenerate, "myers_liu");
  add(r.aux.edwards_elphick.degenerate, "edwards_elphick");
  add(r.aux.bollobas_nikiforov.degenerate, "bollobas_nikiforov");
  return s;
}

std::string edge_string(const std::vector<Edge>& edges) {
  std::string s;
  for (const Edge& e : edges) s += (s.empty() ? "" : ";") + std::to_string(e.u) + "-" + std::to_string(e.v);
  return s;
}

std::vector<std::string> report_fields(const ReportRow& row) {
  const BoundReport& r = row.report;
  auto d = format_double;
  if (!row.error.empty()) {
    std::vector<std::string> f(report_columns.size());
    f[0] = r.name;
    f[1] = std::to_string(r.n);
    f[2] = std::to_string(r.m);
    f.back() = row.error;
    return f;
  }
  std::optional<double> barnes, wg, ww;
  if (r.barnes) barnes = r.barnes->value;
  if (r.weighted) {
    wg = r.weighted->gen_hoffman.value;
    ww = r.weighted->weaker.weaker;
  }
  return {r.name,
          std::to_string(r.n),
          std::to_string(r.m),
          std::to_string(r.inertia.positive),
          std::to_string(r.inertia.negative),
          std::to_string(r.inertia.zero),
          d(r.sums.s_plus),
          d(r.sums.s_minus),
          d(r.sums.energy_half),
          d(r.hoffman.value),
          d(r.gen_hoffman.value),
          std::to_string(r.gen_hoffman.best_m),
          d(r.weaker.weaker),
          d(r.weaker.conjecture),
          d(r.aux.cvetkovic.value),
          d(r.aux.myers_liu.value),
          d(r.aux.edwards_elphick.value),
          d(r.aux.bollobas_nikiforov.value),
          d(r.aux.wilf_upper),
          opt(barnes),
          opt(wg),
          opt(ww),
          opt(r.chi_exact),
          r.chi_upper ? std::to_string(r.chi_lower) : std::string{},
          r.chi_upper ? std::to_string(r.chi_upper) : std::string{},
          opt(r.alpha),
          opt(r.alpha_bound),
          opt(r.omega),
          row.gen_beats_hoffman ? "1" : "0",
          row.conjecture_beats_hoffman ? "1" : "0",
          degenerate_list(r),
          ""};
}

json bound_json(const Bound& b) { return json{{"value", b.value}, {"degenerate", b.degenerate}}; }

}  // namespace

void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows) {
  write_row(os, report_columns);
  for (const auto& row : rows) write_row(os, report_fields(row));
}

json report_to_json(const ReportRow& row) {
  const BoundReport& r = row.report;
  json j{{"name", r.name}, {"n", r.n}, {"m", r.m}};
  if (!row.error.empty()) {
    j["error"] = row.error;
    return j;
  }
  j["eigenvalues"] = r.eigenvalues;
  j["inertia"] = {r.inertia.positive, r.inertia.negative, r.inertia.zero};
  j["s_plus"] = r.sums.s_plus;
  j["s_minus"] = r.sums.s_minus;
  j["energy_half"] = r.sums.energy_half;
  j["hoffman"] = bound_json(r.hoffman);
  j["gen_hoffman"] = {{"value", r.gen_hoffman.value}, {"best_m", r.gen_hoffman.best_m},
                      {"degenerate", r.gen_hoffman.degenerate}};
  j["weaker"] = r.weaker.weaker;
  j["conjecture"] = r.weaker.conjecture;
  j["sums_degenerate"] = r.weaker.degenerate;
  j["cvetkovic"] = bound_json(r.aux.cvetkovic);
  j["myers_liu"] = bound_json(r.aux.myers_liu);
  j["edwards_elphick"] = bound_json(r.aux.edwards_elphick);
  j["bollobas_nikiforov"] = bound_json(r.aux.bollobas_nikiforov);
  j["wilf_upper"] = r.aux.wilf_upper;
  if (r.barnes) j["barnes"] = bound_json(*r.barnes);
  if (r.weighted)
    j["weighted"] = {{"gen_hoffman", r.weighted->gen_hoffman.value},
                     {"gen_hoffman_best_m", r.weighted->gen_hoffman.best_m},
                     {"weaker", r.weighted->weaker.weaker},
                     {"conjecture", r.weighted->weaker.conjecture},
                     {"degenerate", r.weighted->degenerate}};
  if (r.chi_exact) j["chi"] = *r.chi_exact;
  if (r.chi_upper) j["chi_bracket"] = {r.chi_lower, r.chi_upper};
  if (r.alpha) j["alpha"] = *r.alpha;
  if (r.alpha_bound) j["alpha_bound"] = *r.alpha_bound;
  if (r.omega) j["omega"] = *r.omega;
  if (row.coloring) j["coloring"] = row.coloring->colors;
  j["gen_gt_hoffman"] = row.gen_beats_hoffman;
  j["conj_gt_hoffman"] = row.conjecture_beats_hoffman;
  j["verdict"] = to_string(classify(r));
  return j;
}

void write_report_jsonl(std::ostream& os, const std::vector<ReportRow>& rows) {
  for (const auto& row : rows) os << report_to_json(row).dump() << '\n';
}

void write_report_table(std::ostream& os, const std::vector<ReportRow>& rows) {
  const auto flags = os.flags();
  os << std::left << std::setw(28) << "graph" << std::right << std::setw(5) << "n" << std::setw(6) << "m"
     << std::setw(10) << "hoffman" << std::setw(10) << "genHoff" << std::setw(4) << "m*" << std::setw(10) << "S+/S-"
     << std::setw(10) << "1+S+/S-" << std::setw(10) << "cvetk" << std::setw(10) << "ed-elph" << std::setw(10)
     << "wilf" << std::setw(5) << "chi" << std::setw(6) << "alpha" << '\n';
  os << std::fixed << std::setprecision(4);
  for (const auto& row : rows) {
    const BoundReport& r = row.report;
    os << std::left << std::setw(28) << r.name.substr(0, 27) << std::right << std::setw(5) << r.n << std::setw(6)
       << r.m;
    if (!row.error.empty()) {
      os << "  error: " << row.error << '\n';
      continue;
    }
    os << std::setw(10) << r.hoffman.value << std::setw(10) << r.gen_hoffman.value << std::setw(4)
       << r.gen_hoffman.best_m << std::setw(10) << r.weaker.weaker << std::setw(10) << r.weaker.conjecture
       << std::setw(10) << r.aux.cvetkovic.value << std::setw(10) << r.aux.edwards_elphick.value << std::setw(10)
       << r.aux.wilf_upper << std::setw(5) << (r.chi_exact ? std::to_string(*r.chi_exact) : "-") << std::setw(6)
       << (r.alpha ? std::to_string(*r.alpha) : "-") << '\n';
  }
  os.flags(flags);
}

void write_sweep_csv(std::ostream& os, const SweepResult& r) {
  write_row(os, sweep_columns);
  for (std::size_t t = 0; t < r.trials.size(); ++t) {
    const auto& tr = r.trials[t];
    write_row(os, {std::to_string(t), std::to_string(tr.seed), std::to_string(r.n), format_double(r.p),
                   std::to_string(tr.m), format_double(tr.hoffman), format_double(tr.gen_hoffman),
                   format_double(tr.conjecture)});
  }
  write_row(os, {"mean", "", std::to_string(r.n), format_double(r.p), "", format_double(r.mean_hoffman),
                 format_double(r.mean_gen_hoffman), format_double(r.mean_conjecture)});
}

json sweep_to_json(const SweepResult& r) {
  json trials = json::array();
  for (const auto& t : r.trials)
    trials.push_back({{"seed", t.seed}, {"m", t.m}, {"hoffman", t.hoffman}, {"gen_hoffman", t.gen_hoffman},
                      {"conjecture", t.conjecture}});
  return {{"n", r.n},
          {"p", r.p},
          {"trials", trials},
          {"mean_hoffman", r.mean_hoffman},
          {"mean_gen_hoffman", r.mean_gen_hoffman},
          {"mean_conjecture", r.mean_conjecture},
          {"bollobas_formula", r.bollobas_formula}};
}

void write_findings_csv(std::ostream& os, const std::vector<SearchFinding>& findings) {
  write_row(os, finding_columns);
  for (const auto& f : findings)
    write_row(os, {f.id, to_string(f.verdict), std::to_string(f.n), std::to_string(f.edges.size()),
                   format_double(f.conjecture), format_double(f.weaker), format_double(f.mu1), opt(f.chi),
                   edge_string(f.edges)});
}

json finding_to_json(const SearchFinding& f) {
  json edges = json::array();
  for (const Edge& e : f.edges) edges.push_back({e.u, e.v});
  json j{{"id", f.id},
         {"verdict", to_string(f.verdict)},
         {"n", f.n},
         {"edges", edges},
         {"eigenvalues", f.eigenvalues},
         {"conjecture", f.conjecture},
         {"weaker", f.weaker},
         {"mu1", f.mu1},
         {"degenerate", f.degenerate},
         {"coloring", f.coloring}};
  j["chi"] = f.chi ? json(*f.chi) : json(nullptr);
  return j;
}

SearchFinding finding_from_json(const json& j) {
  SearchFinding f;
  try {
    f.id = j.at("id").get<std::string>();
    f.verdict = verdict_from_string(j.at("verdict").get<std::string>());
    f.n = j.at("n").get<int>();
    for (const auto& e : j.at("edges")) f.edges.push_back(Edge{e.at(0).get<int>(), e.at(1).get<int>()});
    f.eigenvalues = j.at("eigenvalues").get<std::vector<double>>();
    f.conjecture = j.at("conjecture").get<double>();
    f.weaker = j.at("weaker").get<double>();
    f.mu1 = j.at("mu1").get<double>();
    f.degenerate = j.at("degenerate").get<bool>();
    f.coloring = j.at("coloring").get<std::vector<int>>();
    if (!j.at("chi").is_null()) f.chi = j.at("chi").get<int>();
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed finding record: ") + e.what());
  }
  return f;
}

void write_findings_jsonl(std::ostream& os, const std::vector<SearchFinding>& findings) {
  for (const auto& f : findings) os << finding_to_json(f).dump() << '\n';
}

json scan_summary_to_json(const ScanResult& r) {
  const SoundnessTally& s = r.soundness;
  return {{"graphs", r.graphs},
          {"consistent", r.consistent},
          {"conjecture_violations", r.conjecture_violations},
          {"wilf_violations", r.wilf_violations},
          {"budget_exceeded", r.budget_exceeded},
          {"bipartite_checked", r.bipartite_checked},
          {"bipartite_mismatch", r.bipartite_mismatch},
          {"soundness",
           {{"hoffman_above_chi", s.hoffman_above_chi},
            {"gen_hoffman_above_chi", s.gen_hoffman_above_chi},
            {"weaker_above_chi", s.weaker_above_chi},
            {"gen_below_hoffman", s.gen_below_hoffman},
            {"alpha_theorem", s.alpha_theorem},
            {"wilf_below_chi", s.wilf_below_chi},
            {"alpha_bound_below_chi", s.alpha_bound_below_chi}}}};
}

std::vector<SearchFinding> read_findings_jsonl(std::istream& is) {
  std::vector<SearchFinding> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j;
    try {
      j = json::parse(line);
    } catch (const json::exception& e) {
      throw ParseError(lineno, e.what());
    }
    out.push_back(finding_from_json(j));
  }
  return out;
}

}  // namespace specchrom::out
