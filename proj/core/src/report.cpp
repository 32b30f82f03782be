#include "gss/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace gss {

namespace {

std::string fmt(double v) {
  std::ostringstream out;
  out << std::setprecision(17) << v;
  return out.str();
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::stringstream ss(line);
  std::string field;
  while (std::getline(ss, field, ',')) {
    fields.push_back(field);
  }
  return fields;
}

struct GroupKey {
  std::string dataset;
  Algorithm algorithm;
  double phi;
  double eval_fraction;

  auto tie() const {
    return std::tie(dataset, algorithm, phi, eval_fraction);
  }
  bool operator<(const GroupKey& other) const { return tie() < other.tie(); }
};

struct Accum {
  std::vector<double> ks;
  std::vector<double> skew;
  std::set<int> runs;
};

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return s / static_cast<double>(xs.size());
}

// Population standard deviation: aggregating duplicated results yields the
// same rows as aggregating them once.
double stddev_of(const std::vector<double>& xs, double mean) {
  if (xs.size() < 2) {
    return 0.0;
  }
  double s = 0.0;
  for (double x : xs) s += (x - mean) * (x - mean);
  return std::sqrt(s / static_cast<double>(xs.size()));
}

}  // namespace

std::vector<CsvRunRecord> to_csv_records(const RunResult& result) {
  std::vector<CsvRunRecord> rows;
  rows.reserve(result.records.size());
  for (const RunRecord& r : result.records) {
    CsvRunRecord row;
    row.dataset = result.dataset_name;
    row.algorithm = result.config.algorithm;
    row.phi = result.config.phi;
    row.run = r.run;
    row.seed = r.seed;
    row.eval_fraction = r.eval_fraction;
    row.stream_position = r.stream_position;
    row.property = r.property;
    row.ks = r.ks;
    row.skew = r.skew;
    row.sample_nodes = r.sample_nodes;
    row.sample_edges = r.sample_edges;
    row.peak_state = r.peak_state;
    row.wall_ms = r.wall_ms;
    row.dataset_density = result.dataset_density;
    row.dataset_clustering = result.dataset_avg_clustering;
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string runs_csv_header() {
  return "dataset,algorithm,phi,run,seed,eval_fraction,stream_position,"
         "property,ks,skew,sample_nodes,sample_edges,peak_state,wall_ms,"
         "dataset_density,dataset_clustering";
}

std::string runs_csv(const std::vector<CsvRunRecord>& records) {
  std::ostringstream out;
  out << runs_csv_header() << '\n';
  for (const CsvRunRecord& r : records) {
    out << r.dataset << ',' << to_string(r.algorithm) << ',' << fmt(r.phi)
        << ',' << r.run << ',' << r.seed << ',' << fmt(r.eval_fraction) << ','
        << r.stream_position << ',' << to_string(r.property) << ','
        << fmt(r.ks) << ',' << fmt(r.skew) << ',' << r.sample_nodes << ','
        << r.sample_edges << ',' << r.peak_state << ',' << fmt(r.wall_ms)
        << ',' << fmt(r.dataset_density) << ',' << fmt(r.dataset_clustering)
        << '\n';
  }
  return out.str();
}

std::vector<CsvRunRecord> parse_runs_csv(std::istream& in) {
  std::vector<CsvRunRecord> records;
  std::string line;
  if (!std::getline(in, line)) {
    return records;
  }
  if (line != runs_csv_header()) {
    throw std::invalid_argument("unexpected runs.csv header: " + line);
  }
  std::size_t line_number = 1;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.empty()) {
      continue;
    }
    auto f = split_csv_line(line);
    if (f.size() != 16) {
      throw std::invalid_argument("bad runs.csv row at line " +
                                  std::to_string(line_number));
    }
    CsvRunRecord r;
    r.dataset = f[0];
    r.algorithm = algorithm_from_string(f[1]);
    r.phi = std::stod(f[2]);
    r.run = std::stoi(f[3]);
    r.seed = std::stoull(f[4]);
    r.eval_fraction = std::stod(f[5]);
    r.stream_position = std::stoull(f[6]);
    r.property = property_from_string(f[7]);
    r.ks = std::stod(f[8]);
    r.skew = std::stod(f[9]);
    r.sample_nodes = std::stoull(f[10]);
    r.sample_edges = std::stoull(f[11]);
    r.peak_state = std::stoull(f[12]);
    r.wall_ms = std::stod(f[13]);
    r.dataset_density = std::stod(f[14]);
    r.dataset_clustering = std::stod(f[15]);
    records.push_back(std::move(r));
  }
  return records;
}

Report aggregate_records(const std::vector<CsvRunRecord>& records) {
  std::map<GroupKey, std::map<Property, Accum>> groups;
  std::map<std::string, DatasetMeta> metas;
  for (const CsvRunRecord& r : records) {
    GroupKey key{r.dataset, r.algorithm, r.phi, r.eval_fraction};
    Accum& acc = groups[key][r.property];
    if (!std::isnan(r.ks)) {
      acc.ks.push_back(r.ks);
      acc.skew.push_back(r.skew);
      acc.runs.insert(r.run);
    }
    metas.emplace(r.dataset,
                  DatasetMeta{r.dataset, r.dataset_density,
                              r.dataset_clustering});
  }

  // Every group must cover the same property set.
  std::set<Property> expected;
  for (const auto& [key, props] : groups) {
    std::set<Property> present;
    for (const auto& [p, _] : props) {
      present.insert(p);
    }
    if (expected.empty()) {
      expected = present;
    } else if (expected != present) {
      throw std::invalid_argument(
          "aggregation error: results do not share one property set");
    }
  }

  Report report;
  for (const auto& [key, props] : groups) {
    for (const auto& [property, acc] : props) {
      AggregateRow row;
      row.dataset = key.dataset;
      row.algorithm = key.algorithm;
      row.phi = key.phi;
      row.eval_fraction = key.eval_fraction;
      row.property = property;
      row.runs = acc.runs.size();
      if (!acc.ks.empty()) {
        row.mean_ks = mean_of(acc.ks);
        row.stddev_ks = stddev_of(acc.ks, row.mean_ks);
        row.mean_skew = mean_of(acc.skew);
        row.stddev_skew = stddev_of(acc.skew, row.mean_skew);
      }
      report.rows.push_back(std::move(row));
    }
  }
  for (const auto& [_, meta] : metas) {
    report.datasets.push_back(meta);
  }
  return report;
}

Report compare_report(const std::vector<RunResult>& results) {
  std::vector<CsvRunRecord> records;
  for (const RunResult& result : results) {
    auto rows = to_csv_records(result);
    records.insert(records.end(), rows.begin(), rows.end());
  }
  return aggregate_records(records);
}

std::string Report::to_csv() const {
  std::ostringstream out;
  out << "dataset,algorithm,phi,eval_fraction,property,runs,mean_ks,"
         "stddev_ks,mean_skew,stddev_skew\n";
  for (const AggregateRow& r : rows) {
    out << r.dataset << ',' << to_string(r.algorithm) << ',' << fmt(r.phi)
        << ',' << fmt(r.eval_fraction) << ',' << to_string(r.property) << ','
        << r.runs << ',' << fmt(r.mean_ks) << ',' << fmt(r.stddev_ks) << ','
        << fmt(r.mean_skew) << ',' << fmt(r.stddev_skew) << '\n';
  }
  return out.str();
}

std::string Report::to_table(bool sort_by_density_clustering) const {
  std::vector<DatasetMeta> ordered = datasets;
  if (sort_by_density_clustering) {
    std::sort(ordered.begin(), ordered.end(),
              [](const DatasetMeta& a, const DatasetMeta& b) {
                return a.density * a.clustering < b.density * b.clustering;
              });
  } else {
    std::sort(ordered.begin(), ordered.end(),
              [](const DatasetMeta& a, const DatasetMeta& b) {
                return a.dataset < b.dataset;
              });
  }

  std::ostringstream out;
  out << std::fixed;
  for (const DatasetMeta& meta : ordered) {
    out << "dataset " << meta.dataset << "  (density "
        << std::setprecision(6) << meta.density << ", clustering "
        << meta.clustering << ")\n";
    out << "  " << std::left << std::setw(6) << "algo" << std::setw(8)
        << "phi" << std::setw(14) << "property" << std::right << std::setw(10)
        << "mean KS" << std::setw(10) << "std" << std::setw(12) << "runs"
        << '\n';

    // Final-point rows plus a per-dataset average over the four properties.
    std::map<std::pair<std::string, double>, std::vector<double>> averages;
    for (const AggregateRow& r : rows) {
      if (r.dataset != meta.dataset || r.eval_fraction != 1.0) {
        continue;
      }
      out << "  " << std::left << std::setw(6) << to_string(r.algorithm)
          << std::setw(8) << std::setprecision(2) << r.phi << std::setw(14)
          << to_string(r.property) << std::right << std::setw(10)
          << std::setprecision(4) << r.mean_ks << std::setw(10)
          << r.stddev_ks << std::setw(12) << r.runs << '\n';
      averages[{to_string(r.algorithm), r.phi}].push_back(r.mean_ks);
    }
    for (const auto& [key, values] : averages) {
      out << "  " << std::left << std::setw(6) << key.first << std::setw(8)
          << std::setprecision(2) << key.second << std::setw(14)
          << "all(avg)" << std::right << std::setw(10)
          << std::setprecision(4) << mean_of(values) << '\n';
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace gss
