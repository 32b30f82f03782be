#include "gss/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <limits>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "gss/compact_graph.hpp"
#include "gss/stream.hpp"
#include "gss/synthetic.hpp"

namespace gss {

namespace {

using json = nlohmann::ordered_json;

// Sub-seed ids for the independent random streams of one run.
constexpr std::uint64_t kPermuteStream = 1;
constexpr std::uint64_t kSamplerStream = 2;
constexpr std::uint64_t kMetricsStream = 3;

double elapsed_ms(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double, std::milli>(
             std::chrono::steady_clock::now() - start)
      .count();
}

struct EvalPoint {
  double fraction;
  std::uint64_t position;
};

std::vector<EvalPoint> eval_positions(const std::vector<double>& fractions,
                                      std::uint64_t stream_size) {
  std::vector<EvalPoint> points;
  points.reserve(fractions.size());
  for (double f : fractions) {
    auto pos = static_cast<std::uint64_t>(
        std::ceil(f * static_cast<double>(stream_size)));
    points.push_back({f, std::max<std::uint64_t>(1, pos)});
  }
  return points;
}

Distribution compute_property(const CompactGraph& g, Property p,
                              const PathLengthOptions& path_opts) {
  switch (p) {
    case Property::kDegree:
      return degree_distribution(g);
    case Property::kPathLength:
      return path_length_distribution(g, path_opts);
    case Property::kClustering:
      return clustering_distribution(g);
    case Property::kWccSize:
      return wcc_size_distribution(g);
  }
  throw std::invalid_argument("unknown property");
}

ReferenceDistributions compute_references(const CompactGraph& g,
                                          const PathLengthOptions& path_opts) {
  ReferenceDistributions refs;
  refs.degree = degree_distribution(g);
  refs.path_length = path_length_distribution(g, path_opts);
  refs.clustering = clustering_distribution(g);
  refs.wcc_size = wcc_size_distribution(g);
  return refs;
}

// Evaluates one snapshot against the references and appends a record per
// property. Properties that cannot be computed on the snapshot (an empty or
// edge-free early sample) are recorded with NaN distances.
void evaluate_snapshot(const SampledGraph& snapshot,
                       const ReferenceDistributions& refs,
                       const RunConfig& config, int run, std::uint64_t seed,
                       double eval_fraction, std::uint64_t stream_position,
                       std::size_t peak_state, double wall_ms,
                       std::uint64_t metrics_seed,
                       std::vector<RunRecord>& out, const SnapshotSink& sink) {
  CompactGraph cg = CompactGraph::from_graph(snapshot);
  PathLengthOptions path_opts = config.params.path_options;
  path_opts.seed = metrics_seed;
  for (Property p : kAllProperties) {
    RunRecord rec;
    rec.run = run;
    rec.seed = seed;
    rec.eval_fraction = eval_fraction;
    rec.stream_position = stream_position;
    rec.property = p;
    rec.sample_nodes = snapshot.node_count();
    rec.sample_edges = snapshot.edge_count();
    rec.peak_state = peak_state;
    rec.wall_ms = wall_ms;
    try {
      Distribution d = compute_property(cg, p, path_opts);
      rec.ks = ks_distance(refs.of(p), d);
      rec.skew = skew_divergence(refs.of(p), d, config.params.skew_alpha);
      if (sink) {
        sink(run, eval_fraction, p, d);
      }
    } catch (const std::invalid_argument&) {
      rec.ks = std::numeric_limits<double>::quiet_NaN();
      rec.skew = std::numeric_limits<double>::quiet_NaN();
    }
    out.push_back(rec);
  }
}

// One streaming run: permute, consume with eval-point snapshots, finalize.
// Returns false (with an error pushed) when the sampler rejects the run.
bool run_streaming(const RunConfig& config, const Dataset& dataset,
                   std::size_t budget, int run, std::uint64_t seed,
                   const ReferenceDistributions& refs,
                   std::vector<RunRecord>& records,
                   std::vector<RunError>& errors, const SnapshotSink& sink) {
  StreamSource stream =
      permute_stream(dataset.edges, derive_seed(seed, kPermuteStream));
  auto sampler = make_stream_sampler(config.algorithm, budget,
                                     derive_seed(seed, kSamplerStream),
                                     config.params);
  auto points = eval_positions(config.eval_points, stream.size());
  std::uint64_t metrics_seed = derive_seed(seed, kMetricsStream);

  std::vector<RunRecord> local;
  auto start = std::chrono::steady_clock::now();
  std::size_t next_eval = 0;
  try {
    while (stream.has_next() && !sampler->done()) {
      sampler->consume(stream.next());
      while (next_eval < points.size() &&
             stream.position() == points[next_eval].position) {
        evaluate_snapshot(sampler->snapshot(), refs, config, run, seed,
                          points[next_eval].fraction, stream.position(),
                          sampler->peak_state_entries(), elapsed_ms(start),
                          metrics_seed, local, sink);
        ++next_eval;
      }
    }
    sampler->finish();
    // Remaining eval points (sampler finished early, or position jumped past
    // them) see the final sample.
    for (; next_eval < points.size(); ++next_eval) {
      evaluate_snapshot(sampler->snapshot(), refs, config, run, seed,
                        points[next_eval].fraction, stream.position(),
                        sampler->peak_state_entries(), elapsed_ms(start),
                        metrics_seed, local, sink);
    }
  } catch (const UndersizedReservoirError& e) {
    errors.push_back({run, seed, e.what()});
    return false;
  }
  records.insert(records.end(), local.begin(), local.end());
  return true;
}

void run_offline(const RunConfig& config, const CompactGraph& full,
                 std::size_t budget, int run, std::uint64_t seed,
                 const ReferenceDistributions& refs,
                 std::vector<RunRecord>& records, const SnapshotSink& sink) {
  auto start = std::chrono::steady_clock::now();
  std::uint64_t sampler_seed = derive_seed(seed, kSamplerStream);
  SampledGraph sample;
  if (config.algorithm == Algorithm::kFfs) {
    sample = offline_ffs(full, budget, config.params.ffs_burn_prob,
                         sampler_seed);
  } else {
    sample = offline_es_induced(full, budget, sampler_seed);
  }
  evaluate_snapshot(sample, refs, config, run, seed, 1.0,
                    static_cast<std::uint64_t>(full.edge_count()),
                    /*peak_state=*/0, elapsed_ms(start),
                    derive_seed(seed, kMetricsStream), records, sink);
}

void fill_dataset_meta(RunResult& result, const Dataset& dataset) {
  result.dataset_name = dataset.name;
  result.dataset_nodes = dataset.node_count;
  result.dataset_edges = dataset.edges.size();
  if (dataset.node_count >= 2) {
    result.dataset_density =
        2.0 * static_cast<double>(dataset.edges.size()) /
        (static_cast<double>(dataset.node_count) *
         (static_cast<double>(dataset.node_count) - 1.0));
  }
}

json distribution_to_json(const Distribution& d) {
  json j;
  j["support"] = std::vector<double>(d.support().begin(), d.support().end());
  j["pdf"] = std::vector<double>(d.pdf().begin(), d.pdf().end());
  j["sample_count"] = d.sample_count();
  return j;
}

}  // namespace

std::string to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kNs: return "ns";
    case Algorithm::kEs: return "es";
    case Algorithm::kBfs: return "bfs";
    case Algorithm::kPies: return "pies";
    case Algorithm::kFfs: return "ffs";
    case Algorithm::kEsInduced: return "es_i";
  }
  return "?";
}

std::string to_string(Property p) {
  switch (p) {
    case Property::kDegree: return "degree";
    case Property::kPathLength: return "path_length";
    case Property::kClustering: return "clustering";
    case Property::kWccSize: return "wcc_size";
  }
  return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
  for (Algorithm a : kAllAlgorithms) {
    if (to_string(a) == s) {
      return a;
    }
  }
  throw std::invalid_argument("unknown algorithm: " + s);
}

Property property_from_string(const std::string& s) {
  for (Property p : kAllProperties) {
    if (to_string(p) == s) {
      return p;
    }
  }
  throw std::invalid_argument("unknown property: " + s);
}

bool is_streaming(Algorithm a) {
  return a == Algorithm::kNs || a == Algorithm::kEs || a == Algorithm::kBfs ||
         a == Algorithm::kPies;
}

const Distribution& ReferenceDistributions::of(Property p) const {
  switch (p) {
    case Property::kDegree: return degree;
    case Property::kPathLength: return path_length;
    case Property::kClustering: return clustering;
    case Property::kWccSize: return wcc_size;
  }
  throw std::invalid_argument("unknown property");
}

std::size_t sample_budget(double phi, std::size_t node_count) {
  auto n = static_cast<std::size_t>(
      std::llround(phi * static_cast<double>(node_count)));
  return std::max<std::size_t>(1, n);
}

Dataset load_dataset(const std::string& spec, EdgeListFormat format) {
  Dataset d;
  // Dataset names appear as CSV fields; keep them comma-free.
  d.name = spec;
  std::replace(d.name.begin(), d.name.end(), ',', ';');
  if (spec.starts_with("pa:") || spec.starts_with("er:")) {
    SyntheticModel model = spec.starts_with("pa:")
                               ? SyntheticModel::kPreferentialAttachment
                               : SyntheticModel::kErdosRenyi;
    std::size_t n = 0;
    double param = 0.0;
    std::uint64_t seed = 1;
    bool have_param = false;
    std::stringstream ss(spec.substr(3));
    std::string field;
    while (std::getline(ss, field, ',')) {
      auto eq = field.find('=');
      if (eq == std::string::npos) {
        throw std::invalid_argument("bad synthetic spec field: " + field);
      }
      std::string key = field.substr(0, eq);
      std::string value = field.substr(eq + 1);
      if (key == "n") {
        n = std::stoull(value);
      } else if (key == "m" || key == "p") {
        param = std::stod(value);
        have_param = true;
      } else if (key == "seed") {
        seed = std::stoull(value);
      } else {
        throw std::invalid_argument("bad synthetic spec key: " + key);
      }
    }
    if (n == 0 || !have_param) {
      throw std::invalid_argument(
          "synthetic spec needs n and m/p, e.g. pa:n=2000,m=3,seed=7");
    }
    d.node_count = n;
    d.edges = generate_synthetic(model, n, param, seed);
  } else {
    IngestedGraph g = ingest_edge_list(spec, format);
    d.name = std::filesystem::path(spec).filename().string();
    d.node_count = g.node_count;
    d.edges = std::move(g.edges);
    d.original_ids = std::move(g.original_ids);
  }
  return d;
}

void validate(const RunConfig& config, const Dataset& dataset) {
  if (!(config.phi > 0.0 && config.phi <= 1.0)) {
    throw std::invalid_argument("phi must be in (0, 1]");
  }
  if (config.phi * static_cast<double>(dataset.node_count) < 1.0) {
    throw std::invalid_argument("phi * N must be at least 1");
  }
  if (config.runs < 1) {
    throw std::invalid_argument("runs must be >= 1");
  }
  if (dataset.edges.empty()) {
    throw std::invalid_argument("dataset has no edges to stream");
  }
  if (config.eval_points.empty() ||
      !std::is_sorted(config.eval_points.begin(), config.eval_points.end()) ||
      config.eval_points.front() <= 0.0 ||
      config.eval_points.back() != 1.0) {
    throw std::invalid_argument(
        "eval points must be ascending fractions in (0, 1] ending at 1.0");
  }
  if (config.back_in_time_fraction &&
      !(*config.back_in_time_fraction > 0.0 &&
        *config.back_in_time_fraction <= 1.0)) {
    throw std::invalid_argument("back-in-time fraction must be in (0, 1]");
  }
  if (!(config.params.skew_alpha > 0.0 && config.params.skew_alpha < 1.0)) {
    throw std::invalid_argument("skew alpha must be in (0, 1)");
  }
  if (config.algorithm == Algorithm::kFfs &&
      !(config.params.ffs_burn_prob > 0.0 &&
        config.params.ffs_burn_prob < 1.0)) {
    throw std::invalid_argument("ffs burn probability must be in (0, 1)");
  }
}

std::unique_ptr<StreamSampler> make_stream_sampler(
    Algorithm a, std::size_t n, std::uint64_t seed,
    const SamplerParams& params) {
  switch (a) {
    case Algorithm::kNs:
      return std::make_unique<StreamingNodeSampler>(n, seed);
    case Algorithm::kEs:
      return std::make_unique<StreamingEdgeSampler>(
          n, params.es_reservoir_edges, seed);
    case Algorithm::kBfs:
      return std::make_unique<StreamingBfsSampler>(n, params.bfs_window, seed);
    case Algorithm::kPies:
      return std::make_unique<PiesSampler>(n, seed);
    default:
      throw std::invalid_argument("not a streaming algorithm: " +
                                  to_string(a));
  }
}

RunResult run_sweep(const RunConfig& config, const Dataset& dataset,
                    const SnapshotSink& sink) {
  validate(config, dataset);
  RunResult result;
  result.config = config;
  fill_dataset_meta(result, dataset);
  result.budget = sample_budget(config.phi, dataset.node_count);

  CompactGraph full = CompactGraph::from_edges(dataset.node_count,
                                               dataset.edges);
  PathLengthOptions ref_path = config.params.path_options;
  ref_path.seed = derive_seed(config.base_seed, kMetricsStream);
  result.reference = compute_references(full, ref_path);
  result.reference_computations = 1;
  result.dataset_avg_clustering = result.reference.clustering.mean();

  for (int run = 0; run < config.runs; ++run) {
    std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(run);
    if (is_streaming(config.algorithm)) {
      run_streaming(config, dataset, result.budget, run, seed,
                    result.reference, result.records, result.errors, sink);
    } else {
      run_offline(config, full, result.budget, run, seed, result.reference,
                  result.records, sink);
    }
  }
  return result;
}

RunResult run_sweep(const RunConfig& config) {
  return run_sweep(config, load_dataset(config.dataset, config.format));
}

RunResult run_back_in_time(const RunConfig& config, const Dataset& dataset) {
  if (!config.back_in_time_fraction) {
    throw std::invalid_argument("back_in_time_fraction is not set");
  }
  validate(config, dataset);
  double fraction = *config.back_in_time_fraction;

  RunResult result;
  result.config = config;
  fill_dataset_meta(result, dataset);
  result.budget = sample_budget(config.phi, dataset.node_count);

  CompactGraph full = CompactGraph::from_edges(dataset.node_count,
                                               dataset.edges);
  result.dataset_avg_clustering = clustering_distribution(full).mean();

  for (int run = 0; run < config.runs; ++run) {
    std::uint64_t seed = config.base_seed + static_cast<std::uint64_t>(run);
    StreamSource stream =
        permute_stream(dataset.edges, derive_seed(seed, kPermuteStream));

    // The reference is the graph formed by this run's stream prefix.
    auto prefix_len = static_cast<std::size_t>(std::max<std::uint64_t>(
        1, static_cast<std::uint64_t>(std::ceil(
               fraction * static_cast<double>(stream.size())))));
    CompactGraph prefix = CompactGraph::from_edge_subset(
        stream.edges().subspan(0, prefix_len));
    PathLengthOptions ref_path = config.params.path_options;
    ref_path.seed = derive_seed(seed, kMetricsStream);
    ReferenceDistributions refs = compute_references(prefix, ref_path);
    ++result.reference_computations;
    if (run == 0) {
      result.reference = refs;
    }

    auto start = std::chrono::steady_clock::now();
    std::uint64_t metrics_seed = derive_seed(seed, kMetricsStream);
    try {
      SampledGraph sample;
      std::size_t peak = 0;
      if (is_streaming(config.algorithm)) {
        auto sampler = make_stream_sampler(config.algorithm, result.budget,
                                           derive_seed(seed, kSamplerStream),
                                           config.params);
        sample = run_sampler(*sampler, stream);
        peak = sampler->peak_state_entries();
      } else if (config.algorithm == Algorithm::kFfs) {
        sample = offline_ffs(full, result.budget, config.params.ffs_burn_prob,
                             derive_seed(seed, kSamplerStream));
      } else {
        sample = offline_es_induced(full, result.budget,
                                    derive_seed(seed, kSamplerStream));
      }
      evaluate_snapshot(sample, refs, config, run, seed, 1.0,
                        stream.position(), peak, elapsed_ms(start),
                        metrics_seed, result.records, {});
    } catch (const UndersizedReservoirError& e) {
      result.errors.push_back({run, seed, e.what()});
    }
  }
  return result;
}

RunResult run_back_in_time(const RunConfig& config) {
  return run_back_in_time(config, load_dataset(config.dataset, config.format));
}

SampledGraph run_single(const RunConfig& config, const Dataset& dataset,
                        std::uint64_t seed) {
  validate(config, dataset);
  std::size_t budget = sample_budget(config.phi, dataset.node_count);
  if (is_streaming(config.algorithm)) {
    StreamSource stream =
        permute_stream(dataset.edges, derive_seed(seed, kPermuteStream));
    auto sampler = make_stream_sampler(config.algorithm, budget,
                                       derive_seed(seed, kSamplerStream),
                                       config.params);
    return run_sampler(*sampler, stream);
  }
  CompactGraph full = CompactGraph::from_edges(dataset.node_count,
                                               dataset.edges);
  if (config.algorithm == Algorithm::kFfs) {
    return offline_ffs(full, budget, config.params.ffs_burn_prob,
                       derive_seed(seed, kSamplerStream));
  }
  return offline_es_induced(full, budget, derive_seed(seed, kSamplerStream));
}

RunConfig parse_run_config_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("config parse error: ") +
                                e.what());
  }
  RunConfig config;
  config.dataset = j.at("dataset").get<std::string>();
  if (j.contains("format")) {
    config.format =
        edge_list_format_from_string(j.at("format").get<std::string>());
  }
  if (j.contains("algorithm")) {
    config.algorithm =
        algorithm_from_string(j.at("algorithm").get<std::string>());
  }
  if (j.contains("phi")) config.phi = j.at("phi").get<double>();
  if (j.contains("runs")) config.runs = j.at("runs").get<int>();
  if (j.contains("base_seed")) {
    config.base_seed = j.at("base_seed").get<std::uint64_t>();
  }
  if (j.contains("eval_points")) {
    config.eval_points = j.at("eval_points").get<std::vector<double>>();
  }
  if (j.contains("back_in_time_fraction")) {
    config.back_in_time_fraction =
        j.at("back_in_time_fraction").get<double>();
  }
  if (j.contains("params")) {
    const json& p = j.at("params");
    if (p.contains("m")) {
      config.params.es_reservoir_edges = p.at("m").get<std::size_t>();
    }
    if (p.contains("wsize")) {
      config.params.bfs_window = p.at("wsize").get<std::size_t>();
    }
    if (p.contains("p_f")) {
      config.params.ffs_burn_prob = p.at("p_f").get<double>();
    }
    if (p.contains("alpha")) {
      config.params.skew_alpha = p.at("alpha").get<double>();
    }
    if (p.contains("path_source_budget")) {
      config.params.path_options.source_budget =
          p.at("path_source_budget").get<std::size_t>();
    }
    if (p.contains("path_exact_threshold")) {
      config.params.path_options.exact_threshold =
          p.at("path_exact_threshold").get<std::size_t>();
    }
  }
  return config;
}

std::string run_config_to_json(const RunConfig& config) {
  json j;
  j["dataset"] = config.dataset;
  j["format"] = config.format == EdgeListFormat::kCsv ? "csv" : "whitespace";
  j["algorithm"] = to_string(config.algorithm);
  j["phi"] = config.phi;
  j["runs"] = config.runs;
  j["base_seed"] = config.base_seed;
  j["eval_points"] = config.eval_points;
  if (config.back_in_time_fraction) {
    j["back_in_time_fraction"] = *config.back_in_time_fraction;
  }
  j["params"] = {{"m", config.params.es_reservoir_edges},
                 {"wsize", config.params.bfs_window},
                 {"p_f", config.params.ffs_burn_prob},
                 {"alpha", config.params.skew_alpha},
                 {"path_source_budget",
                  config.params.path_options.source_budget},
                 {"path_exact_threshold",
                  config.params.path_options.exact_threshold}};
  return j.dump(2);
}

std::string RunResult::to_json(bool include_timings) const {
  json j;
  j["config"] = json::parse(run_config_to_json(config));
  j["dataset"] = {{"name", dataset_name},
                  {"nodes", dataset_nodes},
                  {"edges", dataset_edges},
                  {"density", dataset_density},
                  {"avg_clustering", dataset_avg_clustering}};
  j["budget"] = budget;
  j["reference_computations"] = reference_computations;
  json refs;
  for (Property p : kAllProperties) {
    refs[to_string(p)] = distribution_to_json(reference.of(p));
  }
  j["reference"] = refs;
  json records_json = json::array();
  for (const RunRecord& r : records) {
    json rec = {{"run", r.run},
                {"seed", r.seed},
                {"eval_fraction", r.eval_fraction},
                {"stream_position", r.stream_position},
                {"property", to_string(r.property)},
                {"ks", r.ks},
                {"skew", r.skew},
                {"sample_nodes", r.sample_nodes},
                {"sample_edges", r.sample_edges},
                {"peak_state", r.peak_state}};
    if (include_timings) {
      rec["wall_ms"] = r.wall_ms;
    }
    records_json.push_back(rec);
  }
  j["records"] = records_json;
  json errors_json = json::array();
  for (const RunError& e : errors) {
    errors_json.push_back(
        {{"run", e.run}, {"seed", e.seed}, {"message", e.message}});
  }
  j["errors"] = errors_json;
  return j.dump(2);
}

}  // namespace gss
