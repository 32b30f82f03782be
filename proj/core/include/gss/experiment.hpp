#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gss/distribution.hpp"
#include "gss/edge_list_io.hpp"
#include "gss/graph.hpp"
#include "gss/metrics.hpp"
#include "gss/samplers.hpp"

namespace gss {

enum class Algorithm { kNs, kEs, kBfs, kPies, kFfs, kEsInduced };
enum class Property { kDegree, kPathLength, kClustering, kWccSize };

inline constexpr std::array<Algorithm, 6> kAllAlgorithms{
    Algorithm::kNs,  Algorithm::kEs,  Algorithm::kBfs,
    Algorithm::kPies, Algorithm::kFfs, Algorithm::kEsInduced};
inline constexpr std::array<Property, 4> kAllProperties{
    Property::kDegree, Property::kPathLength, Property::kClustering,
    Property::kWccSize};

std::string to_string(Algorithm a);
std::string to_string(Property p);
Algorithm algorithm_from_string(const std::string& s);
Property property_from_string(const std::string& s);
bool is_streaming(Algorithm a);

struct SamplerParams {
  std::size_t es_reservoir_edges = 0;  // 0 -> 4 * n
  std::size_t bfs_window = 100;
  double ffs_burn_prob = 0.7;
  double skew_alpha = 0.99;
  PathLengthOptions path_options{};
};

// Parameters of one experiment: dataset, algorithm, sampling fraction phi,
// number of seeded runs, and the stream fractions at which the evolving
// sample is evaluated.
struct RunConfig {
  // File path, or a synthetic spec "pa:n=2000,m=3,seed=7" /
  // "er:n=2000,p=0.004,seed=7".
  std::string dataset;
  EdgeListFormat format = EdgeListFormat::kWhitespace;
  Algorithm algorithm = Algorithm::kPies;
  double phi = 0.1;
  int runs = 10;
  std::uint64_t base_seed = 1;
  std::vector<double> eval_points{0.25, 0.5, 0.75, 1.0};
  std::optional<double> back_in_time_fraction;
  SamplerParams params{};
};

RunConfig parse_run_config_json(const std::string& text);
std::string run_config_to_json(const RunConfig& config);

struct Dataset {
  std::string name;
  std::size_t node_count = 0;
  std::vector<Edge> edges;
  std::vector<std::uint64_t> original_ids;  // empty for synthetic graphs
};

Dataset load_dataset(const std::string& spec,
                     EdgeListFormat format = EdgeListFormat::kWhitespace);

// Node budget n = round(phi * N), at least 1.
std::size_t sample_budget(double phi, std::size_t node_count);

// Throws std::invalid_argument when the config violates its invariants
// (phi * N >= 1; eval points ascending in (0, 1] ending at 1; dataset
// nonempty).
void validate(const RunConfig& config, const Dataset& dataset);

struct RunRecord {
  int run = 0;
  std::uint64_t seed = 0;
  double eval_fraction = 1.0;
  std::uint64_t stream_position = 0;
  Property property = Property::kDegree;
  double ks = 0.0;
  double skew = 0.0;
  std::size_t sample_nodes = 0;
  std::size_t sample_edges = 0;
  std::size_t peak_state = 0;
  double wall_ms = 0.0;
};

struct RunError {
  int run = 0;
  std::uint64_t seed = 0;
  std::string message;
};

struct ReferenceDistributions {
  Distribution degree;
  Distribution path_length;
  Distribution clustering;
  Distribution wcc_size;

  const Distribution& of(Property p) const;
};

struct RunResult {
  RunConfig config;
  std::string dataset_name;
  std::size_t dataset_nodes = 0;
  std::size_t dataset_edges = 0;
  double dataset_density = 0.0;
  double dataset_avg_clustering = 0.0;
  std::size_t budget = 0;
  ReferenceDistributions reference;  // full graph (sweep) or first prefix
                                     // graph (back-in-time)
  std::vector<RunRecord> records;
  std::vector<RunError> errors;     // failed runs, excluded from records
  std::size_t reference_computations = 0;

  // Canonical serialization; wall-clock fields are dropped unless
  // include_timings is set, so equal-seed results serialize identically.
  std::string to_json(bool include_timings = false) const;
};

// Observer for per-snapshot property distributions (distribution CSV export).
using SnapshotSink =
    std::function<void(int run, double eval_fraction, Property p,
                       const Distribution& d)>;

// Runs `config.runs` seeded passes: run r permutes the stream with seed
// base_seed + r, executes the sampler once, and pauses at each eval point to
// compare all four property distributions of the snapshot against the full
// graph's reference distributions (computed once per sweep). Offline
// algorithms are evaluated at the final point only.
RunResult run_sweep(const RunConfig& config, const Dataset& dataset,
                    const SnapshotSink& sink = {});
RunResult run_sweep(const RunConfig& config);

// Like run_sweep, but each run's final sample is compared against the graph
// formed by the first back_in_time_fraction * M edges of that run's own
// permutation.
RunResult run_back_in_time(const RunConfig& config, const Dataset& dataset);
RunResult run_back_in_time(const RunConfig& config);

// One sampler execution (the `sample` subcommand).
SampledGraph run_single(const RunConfig& config, const Dataset& dataset,
                        std::uint64_t seed);

std::unique_ptr<StreamSampler> make_stream_sampler(Algorithm a, std::size_t n,
                                                   std::uint64_t seed,
                                                   const SamplerParams& params);

}  // namespace gss
