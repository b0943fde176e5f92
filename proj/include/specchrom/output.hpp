#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "specchrom/harness.hpp"

namespace specchrom::out {

using nlohmann::json;

// Column order of the report CSV. Part of the external interface; append new
// columns at the end.
extern const std::vector<std::string> report_columns;
extern const std::vector<std::string> sweep_columns;
extern const std::vector<std::string> finding_columns;

/// Shortest round-trip representation of a double.
std::string format_double(double x);

void write_report_csv(std::ostream& os, const std::vector<ReportRow>& rows);
void write_report_jsonl(std::ostream& os, const std::vector<ReportRow>& rows);
/// Fixed-width human table, 4 decimals.
void write_report_table(std::ostream& os, const std::vector<ReportRow>& rows);

json report_to_json(const ReportRow& row);

void write_sweep_csv(std::ostream& os, const SweepResult& r);
json sweep_to_json(const SweepResult& r);

void write_findings_csv(std::ostream& os, const std::vector<SearchFinding>& findings);
void write_findings_jsonl(std::ostream& os, const std::vector<SearchFinding>& findings);
json finding_to_json(const SearchFinding& f);
SearchFinding finding_from_json(const json& j);
json scan_summary_to_json(const ScanResult& r);

/// Parses JSON lines of findings; blank lines are skipped.
std::vector<SearchFinding> read_findings_jsonl(std::istream& is);

}  // namespace specchrom::out
