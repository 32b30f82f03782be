#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "gss/experiment.hpp"

namespace gss {

// One runs.csv row: the long-format record of a single (run, eval point,
// property) evaluation, carrying enough dataset metadata to aggregate and
// sort without the originating RunResult.
struct CsvRunRecord {
  std::string dataset;
  Algorithm algorithm = Algorithm::kPies;
  double phi = 0.0;
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
  double dataset_density = 0.0;
  double dataset_clustering = 0.0;
};

std::vector<CsvRunRecord> to_csv_records(const RunResult& result);
std::string runs_csv_header();
std::string runs_csv(const std::vector<CsvRunRecord>& records);
std::vector<CsvRunRecord> parse_runs_csv(std::istream& in);

struct AggregateRow {
  std::string dataset;
  Algorithm algorithm = Algorithm::kPies;
  double phi = 0.0;
  double eval_fraction = 1.0;
  Property property = Property::kDegree;
  std::size_t runs = 0;
  double mean_ks = 0.0;
  double stddev_ks = 0.0;
  double mean_skew = 0.0;
  double stddev_skew = 0.0;
};

struct DatasetMeta {
  std::string dataset;
  double density = 0.0;
  double clustering = 0.0;
};

// Mean and sample standard deviation of the distances per
// (dataset, algorithm, phi, eval point, property), plus per-dataset averages
// over the four properties.
struct Report {
  std::vector<AggregateRow> rows;
  std::vector<DatasetMeta> datasets;

  std::string to_csv() const;

  // Human-readable table for the final eval point; datasets optionally
  // ordered by increasing density * clustering.
  std::string to_table(bool sort_by_density_clustering = false) const;
};

// Aggregates records; throws std::invalid_argument when the inputs do not
// share one property set per group.
Report aggregate_records(const std::vector<CsvRunRecord>& records);
Report compare_report(const std::vector<RunResult>& results);

}  // namespace gss
