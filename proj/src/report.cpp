#include "netrep/report.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <system_error>

namespace netrep {

using nlohmann::json;

namespace {

json optional_value(const std::optional<double>& v) { return v ? json(*v) : json(nullptr); }

std::optional<double> read_optional(const json& j, const char* key) {
  const json& v = j.at(key);
  if (v.is_null()) return std::nullopt;
  return v.get<double>();
}

void check_schema(const json& j) {
  if (!j.is_object() || !j.contains("schema_version")) throw std::invalid_argument("missing schema_version");
  const int version = j.at("schema_version").get<int>();
  if (version != kReportSchemaVersion) {
    throw std::invalid_argument("unsupported schema_version " + std::to_string(version));
  }
}

json goal_to_json(const EditGoal& g) { return json{{"requested", g.requested}, {"achieved", g.achieved}}; }

std::vector<std::string> split_csv(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  if (!line.empty() && line.back() == ',') fields.emplace_back();
  return fields;
}

const std::string kSchemaLine = "# schema_version: " + std::to_string(kReportSchemaVersion);

void expect_line(std::istream& in, const std::string& expected, const char* what) {
  std::string line;
  if (!std::getline(in, line) || line != expected) throw std::invalid_argument(std::string("bad ") + what);
}

}  // namespace

std::string format_double(double x) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  if (ec != std::errc{}) throw std::runtime_error("cannot format number");
  return std::string(buf, end);
}

double parse_double(const std::string& text) {
  double x = 0.0;
  const auto [end, ec] = std::from_chars(text.data(), text.data() + text.size(), x);
  if (ec != std::errc{} || end != text.data() + text.size()) throw std::invalid_argument("not a number: " + text);
  return x;
}

json metrics_to_json(const MetricsReport& r) {
  return json{
      {"schema_version", kReportSchemaVersion},
      {"num_nodes", r.num_nodes},
      {"num_edges", r.num_edges},
      {"num_components", r.num_components},
      {"largest_component_size", r.largest_component_size},
      {"distances_on_largest_component", r.distances_on_largest_component},
      {"avg_degree", r.avg_degree},
      {"clustering", r.clustering},
      {"avg_local_clustering", r.avg_local_clustering},
      {"modularity", optional_value(r.modularity)},
      {"avg_betweenness", r.avg_betweenness},
      {"avg_eigenvector_centrality", optional_value(r.avg_eigenvector_centrality)},
      {"mean_eccentricity", r.mean_eccentricity},
      {"avg_distance", r.avg_distance},
      {"harmonic_avg_distance", r.harmonic_avg_distance},
      {"powerlaw_exponent", optional_value(r.powerlaw_exponent)},
      {"newman_assortativity", optional_value(r.newman_assortativity)},
      {"s_metric", r.s_metric},
      {"degree_survival", r.degree_survival},
  };
}

MetricsReport metrics_from_json(const json& j) {
  check_schema(j);
  MetricsReport r;
  r.num_nodes = j.at("num_nodes").get<std::size_t>();
  r.num_edges = j.at("num_edges").get<std::size_t>();
  r.num_components = j.at("num_components").get<std::size_t>();
  r.largest_component_size = j.at("largest_component_size").get<std::size_t>();
  r.distances_on_largest_component = j.at("distances_on_largest_component").get<bool>();
  r.avg_degree = j.at("avg_degree").get<double>();
  r.clustering = j.at("clustering").get<double>();
  r.avg_local_clustering = j.at("avg_local_clustering").get<double>();
  r.modularity = read_optional(j, "modularity");
  r.avg_betweenness = j.at("avg_betweenness").get<double>();
  r.avg_eigenvector_centrality = read_optional(j, "avg_eigenvector_centrality");
  r.mean_eccentricity = j.at("mean_eccentricity").get<double>();
  r.avg_distance = j.at("avg_distance").get<double>();
  r.harmonic_avg_distance = j.at("harmonic_avg_distance").get<double>();
  r.powerlaw_exponent = read_optional(j, "powerlaw_exponent");
  r.newman_assortativity = read_optional(j, "newman_assortativity");
  r.s_metric = j.at("s_metric").get<double>();
  r.degree_survival = j.at("degree_survival").get<std::vector<double>>();
  return r;
}

json replica_report_to_json(const ReplicaReport& r, bool include_timing) {
  json logs = json::array();
  for (const EditLog& log : r.edit_logs) {
    logs.push_back(json{
        {"level", log.level},
        {"edge_deletions", goal_to_json(log.edge_deletions)},
        {"edge_insertions", goal_to_json(log.edge_insertions)},
        {"node_insertions", goal_to_json(log.node_insertions)},
        {"node_deletions", goal_to_json(log.node_deletions)},
        {"repair_edges", log.repair_edges},
        {"under_achieved", log.under_achieved()},
    });
  }
  json j{
      {"schema_version", kReportSchemaVersion},
      {"rng_seed", r.rng_seed},
      {"hierarchy_depth", r.hierarchy_depth},
      {"num_nodes", r.replica.num_nodes()},
      {"num_edges", r.replica.num_edges()},
      {"edit_logs", std::move(logs)},
  };
  if (include_timing) j["wall_time_seconds"] = r.wall_time_seconds;
  return j;
}

json summary_to_json(const EnsembleSummary& s) {
  json metrics = json::array();
  for (const MetricSummary& m : s.metrics) {
    metrics.push_back(json{
        {"name", m.name},
        {"original", optional_value(m.original)},
        {"normalized", m.normalized},
        {"values", m.values},
        {"count", m.count},
        {"median", m.median},
        {"q1", m.q1},
        {"q3", m.q3},
        {"lo_whisker", m.lo_whisker},
        {"hi_whisker", m.hi_whisker},
    });
  }
  return json{{"schema_version", kReportSchemaVersion}, {"replica_count", s.replica_count}, {"metrics", metrics}};
}

EnsembleSummary summary_from_json(const json& j) {
  check_schema(j);
  EnsembleSummary s;
  s.replica_count = j.at("replica_count").get<std::size_t>();
  for (const json& item : j.at("metrics")) {
    MetricSummary m;
    m.name = item.at("name").get<std::string>();
    m.original = read_optional(item, "original");
    m.normalized = item.at("normalized").get<bool>();
    m.values = item.at("values").get<std::vector<double>>();
    m.count = item.at("count").get<std::size_t>();
    m.median = item.at("median").get<double>();
    m.q1 = item.at("q1").get<double>();
    m.q3 = item.at("q3").get<double>();
    m.lo_whisker = item.at("lo_whisker").get<double>();
    m.hi_whisker = item.at("hi_whisker").get<double>();
    s.metrics.push_back(std::move(m));
  }
  return s;
}

void write_summary_csv(std::ostream& out, const EnsembleSummary& s) {
  out << kSchemaLine << '\n';
  out << "metric,original,normalized,median,q1,q3,lo_whisker,hi_whisker,count\n";
  for (const MetricSummary& m : s.metrics) {
    out << m.name << ',' << (m.original ? format_double(*m.original) : "") << ',' << (m.normalized ? 1 : 0) << ','
        << format_double(m.median) << ',' << format_double(m.q1) << ',' << format_double(m.q3) << ','
        << format_double(m.lo_whisker) << ',' << format_double(m.hi_whisker) << ',' << m.count << '\n';
  }
}

EnsembleSummary read_summary_csv(std::istream& in) {
  expect_line(in, kSchemaLine, "summary schema line");
  expect_line(in, "metric,original,normalized,median,q1,q3,lo_whisker,hi_whisker,count", "summary header");
  EnsembleSummary s;
  std::string line;
  while (std::getline(in, line)) {
    const auto f = split_csv(line);
    if (f.size() != 9) throw std::invalid_argument("summary row needs 9 fields: " + line);
    MetricSummary m;
    m.name = f[0];
    if (!f[1].empty()) m.original = parse_double(f[1]);
    m.normalized = f[2] == "1";
    m.median = parse_double(f[3]);
    m.q1 = parse_double(f[4]);
    m.q3 = parse_double(f[5]);
    m.lo_whisker = parse_double(f[6]);
    m.hi_whisker = parse_double(f[7]);
    m.count = std::stoull(f[8]);
    s.replica_count = std::max(s.replica_count, m.count);
    s.metrics.push_back(std::move(m));
  }
  return s;
}

void write_incidence_csv(std::ostream& out, const IncidenceStats& s) {
  out << kSchemaLine << '\n' << "day,mean,std\n";
  for (std::size_t d = 0; d < s.mean.size(); ++d) {
    out << d << ',' << format_double(s.mean[d]) << ',' << format_double(s.stddev[d]) << '\n';
  }
}

IncidenceStats read_incidence_csv(std::istream& in) {
  expect_line(in, kSchemaLine, "incidence schema line");
  expect_line(in, "day,mean,std", "incidence header");
  IncidenceStats s;
  std::string line;
  while (std::getline(in, line)) {
    const auto f = split_csv(line);
    if (f.size() != 3 || std::stoull(f[0]) != s.mean.size()) {
      throw std::invalid_argument("bad incidence row: " + line);
    }
    s.mean.push_back(parse_double(f[1]));
    s.stddev.push_back(parse_double(f[2]));
  }
  return s;
}

std::string dump_json(const json& j) { return j.dump(2) + "\n"; }

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json parse_json_file(const std::filesystem::path& path) {
  try {
    return json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_text_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << text;
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace netrep
