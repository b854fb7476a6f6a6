#include "cli.hpp"

#include <glob.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "netrep/baselines.hpp"
#include "netrep/config.hpp"
#include "netrep/edge_list.hpp"
#include "netrep/epidemics.hpp"
#include "netrep/metrics.hpp"
#include "netrep/report.hpp"
#include "netrep/vcycle.hpp"

namespace netrep {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

std::vector<fs::path> expand_glob(const std::string& pattern) {
  glob_t result{};
  const int rc = ::glob(pattern.c_str(), 0, nullptr, &result);
  std::vector<fs::path> paths;
  if (rc == 0) {
    for (std::size_t i = 0; i < result.gl_pathc; ++i) paths.emplace_back(result.gl_pathv[i]);
  }
  ::globfree(&result);
  if (rc != 0 && rc != GLOB_NOMATCH) throw std::runtime_error("glob failed for pattern " + pattern);
  if (paths.empty()) throw std::invalid_argument("no files match " + pattern);
  std::sort(paths.begin(), paths.end());
  return paths;
}

Graph load_graph(const fs::path& path) { return read_edge_list(path).graph; }

// Shared flags; every subcommand echoes the ones it registered.
struct Common {
  std::uint64_t seed = 1;
  std::string preset;
  std::string config_path;
  std::size_t count = 1;
  unsigned jobs = 0;
  std::string out;
};

EditConfig resolve_config(const Common& c) {
  if (!c.config_path.empty()) return load_config(c.config_path);
  return EditConfig::preset(c.preset.empty() ? "p1" : c.preset);
}

json metadata(const CLI::App& sub) {
  json flags = json::object();
  for (const CLI::Option* opt : sub.get_options()) {
    if (opt->get_name() == "--help") continue;
    const auto results = opt->results();
    std::string name = opt->get_name();
    name.erase(0, name.find_first_not_of('-'));
    if (opt->get_expected_max() == 0) {
      flags[name] = opt->count() > 0;
    } else if (results.size() == 1) {
      flags[name] = results.front();
    } else if (!results.empty()) {
      flags[name] = results;
    } else {
      flags[name] = opt->get_default_str().empty() ? json(nullptr) : json(opt->get_default_str());
    }
  }
  return json{{"command", sub.get_name()}, {"flags", flags}};
}

void ensure_dir(const fs::path& dir) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create " + dir.string() + ": " + ec.message());
}

void write_summary_files(const fs::path& dir, const EnsembleSummary& summary, const json& meta) {
  json j = summary_to_json(summary);
  j["metadata"] = meta;
  write_text_file(dir / "ensemble_summary.json", dump_json(j));
  std::ostringstream csv;
  write_summary_csv(csv, summary);
  write_text_file(dir / "ensemble_summary.csv", csv.str());
}

void add_config_flags(CLI::App* sub, Common& c) {
  auto* preset = sub->add_option("--preset", c.preset, "named edit preset (p1 or p2); default p1");
  auto* config = sub->add_option("--config", c.config_path, "JSON edit configuration")->check(CLI::ExistingFile);
  preset->excludes(config);
}

int cmd_replicate(const CLI::App& sub, const Common& c, const std::string& input, bool keep, bool timing,
                  std::ostream& out) {
  const EditConfig cfg = resolve_config(c);
  const EdgeListData data = read_edge_list(input);
  const fs::path dir = c.out;
  ensure_dir(dir);
  const json meta = metadata(sub);

  std::ostringstream map;
  for (NodeId id = 0; id < data.names.size(); ++id) map << id << '\t' << data.names[id] << '\n';
  write_text_file(dir / "node_map.tsv", map.str());

  const AdjustHook hook = keep ? AdjustHook(keep_connected) : AdjustHook{};
  const auto reports = generate_ensemble(data.graph, cfg, c.count, c.seed, c.jobs, hook);

  Rng metric_rng(c.seed);
  const MetricsReport original = compute_metrics(data.graph, metric_rng);
  std::vector<MetricsReport> replica_metrics;
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const std::string stem = "replica_" + std::to_string(i);
    write_edge_list(dir / (stem + ".edges"), reports[i].replica);
    Rng rng(reports[i].rng_seed);
    replica_metrics.push_back(compute_metrics(reports[i].replica, rng));
    json j = replica_report_to_json(reports[i], timing);
    j["metrics"] = metrics_to_json(replica_metrics.back());
    j["metadata"] = meta;
    write_text_file(dir / (stem + ".report.json"), dump_json(j));
  }
  write_summary_files(dir, compare_ensemble(original, replica_metrics), meta);
  out << "wrote " << reports.size() << " replicas to " << dir.string() << '\n';
  return 0;
}

int cmd_metrics(const CLI::App& sub, const Common& c, const std::string& input, std::ostream& out) {
  const Graph g = load_graph(input);
  Rng rng(c.seed);
  json j = metrics_to_json(compute_metrics(g, rng));
  j["metadata"] = metadata(sub);
  if (c.out.empty()) {
    out << dump_json(j);
  } else {
    write_text_file(c.out, dump_json(j));
  }
  return 0;
}

int cmd_compare(const CLI::App& sub, const Common& c, const std::string& original_path,
                const std::string& pattern, std::ostream& out) {
  Rng rng(c.seed);
  const MetricsReport original = compute_metrics(load_graph(original_path), rng);
  std::vector<MetricsReport> replicas;
  for (const fs::path& p : expand_glob(pattern)) {
    Rng r(c.seed);
    replicas.push_back(compute_metrics(load_graph(p), r));
  }
  ensure_dir(c.out);
  write_summary_files(c.out, compare_ensemble(original, replicas), metadata(sub));
  out << "compared " << replicas.size() << " graphs\n";
  return 0;
}

struct BaselineArgs {
  std::string model;
  std::string input;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t m = 0;
  std::size_t k = 4;
  double fraction = 0.3;
};

Graph build_baseline(const BaselineArgs& a, Rng& rng, std::ostream& err) {
  const bool have_input = !a.input.empty();
  const Graph g = have_input ? load_graph(a.input) : Graph{};
  auto need_input = [&] {
    if (!have_input) throw CLI::ValidationError("--input", "model '" + a.model + "' needs --input");
  };
  if (a.model == "er") {
    if (have_input && a.n == 0) return erdos_renyi_like(g, rng);
    return erdos_renyi(a.n, a.p, rng);
  }
  if (a.model == "ba") {
    if (have_input && a.n == 0) return barabasi_albert_like(g, rng);
    return barabasi_albert(a.n, a.m, rng);
  }
  if (a.model == "ws") {
    if (have_input && a.n == 0) return watts_strogatz_like(g, rng);
    return watts_strogatz(a.n, a.k, a.p, rng);
  }
  if (a.model == "chung-lu") {
    need_input();
    return chung_lu_like(g, rng);
  }
  if (a.model == "rewire") {
    need_input();
    return edge_rewire(g, a.fraction, rng).graph;
  }
  if (a.model == "swap") {
    need_input();
    SwapResult r = edge_swap(g, a.fraction, rng);
    if (!r.warning.empty()) err << "warning: " << r.warning << '\n';
    return std::move(r.graph);
  }
  throw CLI::ValidationError("--model", "unknown model '" + a.model + "'");
}

int cmd_baseline(const CLI::App& sub, const Common& c, const BaselineArgs& a, std::ostream& out,
                 std::ostream& err) {
  Rng rng(c.seed);
  const Graph g = build_baseline(a, rng, err);
  write_edge_list(c.out, g);
  write_text_file(c.out + ".meta.json", dump_json(metadata(sub)));
  out << "wrote " << a.model << " graph with " << g.num_nodes() << " nodes and " << g.num_edges() << " edges\n";
  return 0;
}

int cmd_epidemic(const CLI::App& sub, const Common& c, const std::string& pattern, const SeirParams& params,
                 std::size_t runs, std::ostream& out) {
  std::vector<Graph> graphs;
  for (const fs::path& p : expand_glob(pattern)) graphs.push_back(load_graph(p));
  const IncidenceStats stats = epidemic_ensemble(graphs, params, runs, c.seed);
  std::ostringstream csv;
  write_incidence_csv(csv, stats);
  write_text_file(c.out, csv.str());
  json meta = metadata(sub);
  meta["graphs"] = graphs.size();
  meta["runs_total"] = stats.runs;
  write_text_file(c.out + ".meta.json", dump_json(meta));
  out << "peak day " << stats.peak_day() << ", mean peak incidence " << format_double(stats.peak_height()) << '\n';
  return 0;
}

int cmd_evolve(const CLI::App& sub, const Common& c, const std::string& input, std::size_t steps,
               std::ostream& out) {
  const EditConfig cfg = resolve_config(c);
  const Graph g = load_graph(input);
  ensure_dir(c.out);
  Rng rng(c.seed);
  const auto trajectory = evolve(g, cfg, steps, rng);
  json steps_json = json::array();
  Rng metric_rng(c.seed);
  steps_json.push_back(metrics_to_json(compute_metrics(g, metric_rng)));
  for (std::size_t s = 0; s < trajectory.size(); ++s) {
    write_edge_list(fs::path(c.out) / ("step_" + std::to_string(s + 1) + ".edges"), trajectory[s]);
    Rng r(c.seed + s + 1);
    steps_json.push_back(metrics_to_json(compute_metrics(trajectory[s], r)));
  }
  const json j{{"schema_version", kReportSchemaVersion}, {"metadata", metadata(sub)}, {"metrics", steps_json}};
  write_text_file(fs::path(c.out) / "trajectory.json", dump_json(j));
  out << "wrote " << trajectory.size() << " steps to " << c.out << '\n';
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiscale network replication and analysis"};
  app.require_subcommand(1);
  Common c;

  auto* rep = app.add_subcommand("replicate", "generate an ensemble of replicas");
  std::string rep_input;
  bool keep = false;
  bool timing = false;
  rep->add_option("--input", rep_input, "edge-list file")->required()->check(CLI::ExistingFile);
  add_config_flags(rep, c);
  rep->add_option("--count", c.count, "number of replicas")->check(CLI::PositiveNumber)->capture_default_str();
  rep->add_option("--seed", c.seed, "base seed; replica i uses seed + i")->capture_default_str();
  rep->add_option("--jobs", c.jobs, "worker threads (0 = all cores)")->capture_default_str();
  rep->add_option("--out", c.out, "output directory")->required();
  rep->add_flag("--keep-connected", keep, "keep the largest component after every coarse level");
  rep->add_flag("--timing", timing, "record wall time in replica reports");

  auto* met = app.add_subcommand("metrics", "compute structural metrics of a graph");
  std::string met_input;
  met->add_option("--input", met_input, "edge-list file")->required()->check(CLI::ExistingFile);
  met->add_option("--seed", c.seed, "seed for community detection")->capture_default_str();
  met->add_option("--out", c.out, "output JSON file (default: stdout)");

  auto* cmp = app.add_subcommand("compare", "summarise replicas relative to an original");
  std::string cmp_original;
  std::string cmp_pattern;
  cmp->add_option("--original", cmp_original, "original edge list")->required()->check(CLI::ExistingFile);
  cmp->add_option("--replicas", cmp_pattern, "glob matching replica edge lists")->required();
  cmp->add_option("--seed", c.seed, "seed for community detection")->capture_default_str();
  cmp->add_option("--out", c.out, "output directory")->required();

  auto* base = app.add_subcommand("baseline", "generate a comparison graph");
  BaselineArgs ba;
  base->add_option("--model", ba.model, "er, ba, ws, chung-lu, rewire or swap")
      ->required()
      ->check(CLI::IsMember({"er", "ba", "ws", "chung-lu", "rewire", "swap"}));
  base->add_option("--input", ba.input, "graph to match or perturb")->check(CLI::ExistingFile);
  base->add_option("--n", ba.n, "node count")->capture_default_str();
  base->add_option("--p", ba.p, "edge or rewiring probability")->capture_default_str();
  base->add_option("--m", ba.m, "edges per new node (ba)")->capture_default_str();
  base->add_option("--k", ba.k, "lattice degree (ws)")->capture_default_str();
  base->add_option("--fraction", ba.fraction, "edited fraction (rewire, swap)")->capture_default_str();
  base->add_option("--seed", c.seed, "random seed")->capture_default_str();
  base->add_option("--out", c.out, "output edge-list file")->required();

  auto* epi = app.add_subcommand("epidemic", "SEIR incidence statistics over graphs");
  std::string epi_pattern;
  SeirParams params;
  std::size_t runs = 1;
  epi->add_option("--graphs", epi_pattern, "glob matching edge lists")->required();
  epi->add_option("--runs", runs, "runs per graph")->check(CLI::PositiveNumber)->capture_default_str();
  epi->add_option("--transmission", params.transmission_prob_per_day, "daily transmission probability")
      ->capture_default_str();
  epi->add_option("--horizon", params.horizon_days, "days simulated")->capture_default_str();
  epi->add_option("--initial", params.initial_count, "initial cases")->capture_default_str();
  epi->add_option("--seed", c.seed, "base seed")->capture_default_str();
  epi->add_option("--out", c.out, "output CSV file")->required();

  auto* evo = app.add_subcommand("evolve", "iterated replication");
  std::string evo_input;
  std::size_t steps = 1;
  evo->add_option("--input", evo_input, "edge-list file")->required()->check(CLI::ExistingFile);
  add_config_flags(evo, c);
  evo->add_option("--steps", steps, "number of iterations")->check(CLI::PositiveNumber)->capture_default_str();
  evo->add_option("--seed", c.seed, "random seed")->capture_default_str();
  evo->add_option("--out", c.out, "output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  }

  try {
    if (*rep) return cmd_replicate(*rep, c, rep_input, keep, timing, out);
    if (*met) return cmd_metrics(*met, c, met_input, out);
    if (*cmp) return cmd_compare(*cmp, c, cmp_original, cmp_pattern, out);
    if (*base) return cmd_baseline(*base, c, ba, out, err);
    if (*epi) return cmd_epidemic(*epi, c, epi_pattern, params, runs, out);
    if (*evo) return cmd_evolve(*evo, c, evo_input, steps, out);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err);
  } catch (const EdgeListError& e) {
    err << "error: malformed edge list: " << e.what() << '\n';
    return 1;
  } catch (const ConfigError& e) {
    err << "error: invalid configuration: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace netrep
