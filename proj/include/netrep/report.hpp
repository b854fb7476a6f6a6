#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>

#include "json.hpp"
#include "netrep/epidemics.hpp"
#include "netrep/metrics.hpp"
#include "netrep/vcycle.hpp"

namespace netrep {

inline constexpr int kReportSchemaVersion = 1;

// Every JSON document carries "schema_version"; readers reject other
// versions. Doubles are printed in shortest round-trip form, so
// read-then-write reproduces a file byte for byte.

nlohmann::json metrics_to_json(const MetricsReport& r);
MetricsReport metrics_from_json(const nlohmann::json& j);

/// Everything but the graph itself, which is written as an edge list. Wall
/// time is omitted unless requested so that seeded runs are reproducible.
nlohmann::json replica_report_to_json(const ReplicaReport& r, bool include_timing = false);

nlohmann::json summary_to_json(const EnsembleSummary& s);
EnsembleSummary summary_from_json(const nlohmann::json& j);

/// A "# schema_version: N" line, then the header
/// "metric,original,normalized,median,q1,q3,lo_whisker,hi_whisker,count".
/// Undefined originals are an empty field. Per-replica values are not kept.
void write_summary_csv(std::ostream& out, const EnsembleSummary& s);
EnsembleSummary read_summary_csv(std::istream& in);

/// A "# schema_version: N" line, then "day,mean,std" rows.
void write_incidence_csv(std::ostream& out, const IncidenceStats& s);
IncidenceStats read_incidence_csv(std::istream& in);

/// Shortest decimal text that parses back to exactly `x`.
std::string format_double(double x);
double parse_double(const std::string& text);

/// Pretty-printed JSON with a trailing newline.
std::string dump_json(const nlohmann::json& j);
nlohmann::json parse_json_file(const std::filesystem::path& path);
std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, const std::string& text);

}  // namespace netrep
