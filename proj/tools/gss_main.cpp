// gss: graph-stream sampling engine.
//
// Subcommands:
//   summarize    dataset characteristics as JSON
//   sample       one sampler execution, written as an edge list
//   sweep        multi-seed sweep with stream-point evaluation
//   back-in-time sweep evaluated against a stream-prefix reference
//   report       aggregate one or more runs.csv files

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gss/compact_graph.hpp"
#include "gss/edge_list_io.hpp"
#include "gss/experiment.hpp"
#include "gss/report.hpp"
#include "gss/summary.hpp"

namespace fs = std::filesystem;
using namespace gss;

namespace {

struct CommonOptions {
  std::string dataset;
  std::string format = "whitespace";
  std::vector<std::string> algorithms{"pies"};
  std::vector<double> phis{0.1};
  int runs = 10;
  std::uint64_t base_seed = 1;
  std::vector<double> eval_points{0.25, 0.5, 0.75, 1.0};
  std::string config_path;
  std::string out_dir = "out";
  std::size_t es_reservoir = 0;
  std::size_t bfs_window = 100;
  double ffs_burn_prob = 0.7;
  double skew_alpha = 0.99;
  std::size_t path_sources = 1000;
  std::size_t path_exact_threshold = 5000;
};

void add_dataset_options(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--input", opts.dataset,
                  "Edge-list file, or synthetic spec like pa:n=2000,m=3,seed=7 "
                  "or er:n=2000,p=0.004,seed=7");
  cmd->add_option("--format", opts.format,
                  "Edge-list format: whitespace or csv")
      ->check(CLI::IsMember({"whitespace", "csv"}));
}

void add_sweep_options(CLI::App* cmd, CommonOptions& opts) {
  add_dataset_options(cmd, opts);
  cmd->add_option("--algo", opts.algorithms,
                  "Algorithms: ns, es, bfs, pies, ffs, es_i (repeatable or "
                  "comma separated)")
      ->delimiter(',');
  cmd->add_option("--phi", opts.phis,
                  "Sampling fractions in (0, 1] (repeatable or comma "
                  "separated)")
      ->delimiter(',');
  cmd->add_option("--runs", opts.runs, "Seeded runs per configuration");
  cmd->add_option("--seed", opts.base_seed, "Base seed; run r uses seed+r");
  cmd->add_option("--eval-points", opts.eval_points,
                  "Stream fractions at which samples are evaluated; must end "
                  "at 1.0")
      ->delimiter(',');
  cmd->add_option("--config", opts.config_path,
                  "JSON config mirroring the run configuration; other "
                  "dataset/run flags are ignored when set")
      ->excludes("--input");
  cmd->add_option("--out-dir", opts.out_dir, "Output directory");
  cmd->add_option("--m", opts.es_reservoir,
                  "Edge-reservoir size for es (0 = 4 * n)");
  cmd->add_option("--wsize", opts.bfs_window, "Sliding-window size for bfs");
  cmd->add_option("--pf", opts.ffs_burn_prob, "Burn probability for ffs");
  cmd->add_option("--alpha", opts.skew_alpha, "Skew-divergence mixture weight");
  cmd->add_option("--path-sources", opts.path_sources,
                  "BFS sources for estimated path lengths");
  cmd->add_option("--path-exact-threshold", opts.path_exact_threshold,
                  "Exact all-pairs path lengths up to this node count");
}

SamplerParams params_from(const CommonOptions& opts) {
  SamplerParams params;
  params.es_reservoir_edges = opts.es_reservoir;
  params.bfs_window = opts.bfs_window;
  params.ffs_burn_prob = opts.ffs_burn_prob;
  params.skew_alpha = opts.skew_alpha;
  params.path_options.source_budget = opts.path_sources;
  params.path_options.exact_threshold = opts.path_exact_threshold;
  return params;
}

std::vector<RunConfig> configs_from(const CommonOptions& opts,
                                    std::optional<double> bit_fraction) {
  std::vector<RunConfig> configs;
  if (!opts.config_path.empty()) {
    std::ifstream in(opts.config_path);
    if (!in) {
      throw std::runtime_error("cannot open config: " + opts.config_path);
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    RunConfig config = parse_run_config_json(buffer.str());
    if (bit_fraction) {
      config.back_in_time_fraction = bit_fraction;
    }
    configs.push_back(config);
    return configs;
  }
  if (opts.dataset.empty()) {
    throw std::runtime_error("--input (or --config) is required");
  }
  for (const std::string& algo : opts.algorithms) {
    for (double phi : opts.phis) {
      RunConfig config;
      config.dataset = opts.dataset;
      config.format = edge_list_format_from_string(opts.format);
      config.algorithm = algorithm_from_string(algo);
      config.phi = phi;
      config.runs = opts.runs;
      config.base_seed = opts.base_seed;
      config.eval_points = opts.eval_points;
      config.back_in_time_fraction = bit_fraction;
      config.params = params_from(opts);
      configs.push_back(config);
    }
  }
  return configs;
}

std::string phi_tag(double phi) {
  std::ostringstream out;
  out.precision(2);
  out << std::fixed << phi;
  return out.str();
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) {
    throw std::runtime_error("cannot write " + path.string());
  }
  out << content;
}

int run_sweep_like(const CommonOptions& opts,
                   std::optional<double> bit_fraction) {
  std::vector<RunConfig> configs = configs_from(opts, bit_fraction);
  fs::create_directories(opts.out_dir);
  fs::create_directories(fs::path(opts.out_dir) / "distributions");

  std::vector<RunResult> results;
  std::vector<CsvRunRecord> all_records;
  std::map<std::string, Dataset> datasets;

  for (const RunConfig& config : configs) {
    auto [it, inserted] = datasets.try_emplace(config.dataset);
    if (inserted) {
      it->second = load_dataset(config.dataset, config.format);
    }
    const Dataset& dataset = it->second;

    RunResult result;
    std::string tag = to_string(config.algorithm) + "_" + phi_tag(config.phi);
    if (bit_fraction) {
      result = run_back_in_time(config, dataset);
    } else {
      // Export run 0's final-point distributions alongside the metrics.
      SnapshotSink sink = [&](int run, double fraction, Property p,
                              const Distribution& d) {
        if (run == 0 && fraction == 1.0) {
          write_file(fs::path(opts.out_dir) / "distributions" /
                         (to_string(p) + "_" + tag + ".csv"),
                     d.to_csv());
        }
      };
      result = run_sweep(config, dataset, sink);
    }
    // The comparison reference: the full graph for sweeps, the first run's
    // stream-prefix graph for back-in-time.
    std::string ref_name = bit_fraction ? "_prefix_reference.csv" : "_full.csv";
    for (Property p : kAllProperties) {
      write_file(fs::path(opts.out_dir) / "distributions" /
                     (to_string(p) + ref_name),
                 result.reference.of(p).to_csv());
    }
    write_file(fs::path(opts.out_dir) / ("result_" + tag + ".json"),
               result.to_json(true));
    for (const RunError& e : result.errors) {
      std::cerr << "warning: " << result.dataset_name << " " << tag << " run "
                << e.run << " failed: " << e.message << '\n';
    }
    auto records = to_csv_records(result);
    all_records.insert(all_records.end(), records.begin(), records.end());
    results.push_back(std::move(result));
  }

  write_file(fs::path(opts.out_dir) / "runs.csv", runs_csv(all_records));
  Report report = compare_report(results);
  write_file(fs::path(opts.out_dir) / "aggregate.csv", report.to_csv());
  write_file(fs::path(opts.out_dir) / "report.txt", report.to_table());
  std::cout << report.to_table();
  std::cout << "wrote " << all_records.size() << " records to "
            << (fs::path(opts.out_dir) / "runs.csv").string() << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Single-pass graph-stream sampling and evaluation"};
  app.require_subcommand(1);

  // summarize
  CommonOptions sum_opts;
  std::string sum_out;
  CLI::App* summarize_cmd = app.add_subcommand(
      "summarize", "Dataset characteristics (nodes, edges, components, "
                   "average path length, density, clustering) as JSON");
  add_dataset_options(summarize_cmd, sum_opts);
  summarize_cmd->add_option("--path-sources", sum_opts.path_sources,
                            "BFS sources for estimated path lengths");
  summarize_cmd->add_option("--path-exact-threshold",
                            sum_opts.path_exact_threshold,
                            "Exact all-pairs path lengths up to this size");
  summarize_cmd->add_option("--out", sum_out, "Write JSON here instead of stdout");

  // sample
  CommonOptions sample_opts;
  std::string sample_out = "sample.txt";
  double sample_phi = 0.1;
  std::uint64_t sample_n = 0;
  CLI::App* sample_cmd = app.add_subcommand(
      "sample", "Run one sampler and write the sampled edge list");
  add_dataset_options(sample_cmd, sample_opts);
  sample_cmd->add_option("--algo", sample_opts.algorithms,
                         "Algorithm: ns, es, bfs, pies, ffs, es_i")
      ->expected(1);
  sample_cmd->add_option("--phi", sample_phi, "Sampling fraction in (0, 1]");
  sample_cmd->add_option("--n", sample_n,
                         "Node budget (overrides --phi when set)");
  sample_cmd->add_option("--seed", sample_opts.base_seed, "Run seed");
  sample_cmd->add_option("--out", sample_out, "Output edge-list path");
  sample_cmd->add_option("--m", sample_opts.es_reservoir,
                         "Edge-reservoir size for es (0 = 4 * n)");
  sample_cmd->add_option("--wsize", sample_opts.bfs_window,
                         "Sliding-window size for bfs");
  sample_cmd->add_option("--pf", sample_opts.ffs_burn_prob,
                         "Burn probability for ffs");

  // sweep
  CommonOptions sweep_opts;
  CLI::App* sweep_cmd = app.add_subcommand(
      "sweep", "Multi-seed sweep: per-run stream permutation, evaluation at "
               "stream points, KS and skew divergence against the full graph");
  add_sweep_options(sweep_cmd, sweep_opts);

  // back-in-time
  CommonOptions bit_opts;
  double bit_fraction = 0.2;
  CLI::App* bit_cmd = app.add_subcommand(
      "back-in-time", "Sweep whose reference is the graph formed by each "
                      "run's stream prefix");
  add_sweep_options(bit_cmd, bit_opts);
  bit_cmd->add_option("--fraction", bit_fraction,
                      "Stream-prefix fraction in (0, 1]");

  // report
  std::vector<std::string> report_inputs;
  std::string report_out_dir = "out";
  bool sort_by_density = false;
  CLI::App* report_cmd = app.add_subcommand(
      "report", "Aggregate runs.csv files into mean/stddev tables");
  report_cmd->add_option("--inputs", report_inputs, "runs.csv paths")
      ->required()
      ->delimiter(',');
  report_cmd->add_option("--out-dir", report_out_dir, "Output directory");
  report_cmd->add_flag("--sort-by-density", sort_by_density,
                       "Order datasets by increasing density * clustering");

  CLI11_PARSE(app, argc, argv);

  try {
    if (summarize_cmd->parsed()) {
      Dataset dataset = load_dataset(
          sum_opts.dataset, edge_list_format_from_string(sum_opts.format));
      PathLengthOptions path_opts;
      path_opts.source_budget = sum_opts.path_sources;
      path_opts.exact_threshold = sum_opts.path_exact_threshold;
      GraphSummary summary = summarize(
          CompactGraph::from_edges(dataset.node_count, dataset.edges),
          path_opts);
      std::string json = to_json(summary);
      if (sum_out.empty()) {
        std::cout << json << '\n';
      } else {
        write_file(sum_out, json + "\n");
      }
      return 0;
    }

    if (sample_cmd->parsed()) {
      Dataset dataset = load_dataset(
          sample_opts.dataset,
          edge_list_format_from_string(sample_opts.format));
      RunConfig config;
      config.dataset = sample_opts.dataset;
      config.algorithm = algorithm_from_string(sample_opts.algorithms.at(0));
      config.phi = sample_n > 0 ? static_cast<double>(sample_n) /
                                      static_cast<double>(dataset.node_count)
                                : sample_phi;
      config.runs = 1;
      config.base_seed = sample_opts.base_seed;
      config.eval_points = {1.0};
      config.params = params_from(sample_opts);
      SampledGraph sample =
          run_single(config, dataset, sample_opts.base_seed);
      write_edge_list(sample_out, sample.edge_list(), dataset.original_ids);
      std::cout << "sampled " << sample.node_count() << " nodes, "
                << sample.edge_count() << " edges -> " << sample_out << '\n';
      return 0;
    }

    if (sweep_cmd->parsed()) {
      return run_sweep_like(sweep_opts, std::nullopt);
    }
    if (bit_cmd->parsed()) {
      return run_sweep_like(bit_opts, bit_fraction);
    }

    if (report_cmd->parsed()) {
      std::vector<CsvRunRecord> records;
      for (const std::string& input : report_inputs) {
        std::ifstream in(input);
        if (!in) {
          throw std::runtime_error("cannot open " + input);
        }
        auto parsed = parse_runs_csv(in);
        records.insert(records.end(), parsed.begin(), parsed.end());
      }
      Report report = aggregate_records(records);
      fs::create_directories(report_out_dir);
      write_file(fs::path(report_out_dir) / "aggregate.csv", report.to_csv());
      std::string table = report.to_table(sort_by_density);
      write_file(fs::path(report_out_dir) / "report.txt", table);
      std::cout << table;
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
