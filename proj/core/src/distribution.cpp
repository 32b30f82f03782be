#include "gss/distribution.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>
#include <stdexcept>

namespace gss {

Distribution Distribution::from_samples(std::vector<double> values) {
  if (values.empty()) {
    throw std::invalid_argument("distribution requires at least one sample");
  }
  std::sort(values.begin(), values.end());
  std::vector<std::pair<double, std::uint64_t>> counts;
  for (double v : values) {
    if (!counts.empty() && counts.back().first == v) {
      ++counts.back().second;
    } else {
      counts.emplace_back(v, 1);
    }
  }
  return from_counts(std::move(counts));
}

Distribution Distribution::from_counts(
    std::vector<std::pair<double, std::uint64_t>> counts) {
  if (counts.empty()) {
    throw std::invalid_argument("distribution requires at least one sample");
  }
  std::sort(counts.begin(), counts.end());
  for (std::size_t i = 0; i + 1 < counts.size(); ++i) {
    if (counts[i].first == counts[i + 1].first) {
      throw std::invalid_argument("duplicate support value");
    }
  }

  Distribution d;
  std::uint64_t total = 0;
  for (const auto& [value, count] : counts) {
    if (count == 0) {
      throw std::invalid_argument("zero count in distribution");
    }
    if (std::isnan(value)) {
      throw std::invalid_argument("NaN support value");
    }
    total += count;
  }
  d.support_.reserve(counts.size());
  d.pdf_.reserve(counts.size());
  d.cdf_.reserve(counts.size());
  std::uint64_t running = 0;
  for (const auto& [value, count] : counts) {
    running += count;
    d.support_.push_back(value);
    d.pdf_.push_back(static_cast<double>(count) / static_cast<double>(total));
    d.cdf_.push_back(static_cast<double>(running) /
                     static_cast<double>(total));
  }
  d.sample_count_ = total;
  return d;
}

double Distribution::mean() const {
  double m = 0.0;
  for (std::size_t i = 0; i < support_.size(); ++i) {
    m += support_[i] * pdf_[i];
  }
  return m;
}

std::string Distribution::to_csv() const {
  std::ostringstream out;
  out << "value,pdf,cdf,ccdf\n";
  out << std::setprecision(17);
  for (std::size_t i = 0; i < support_.size(); ++i) {
    out << support_[i] << ',' << pdf_[i] << ',' << cdf_[i] << ','
        << ccdf(i) << '\n';
  }
  return out.str();
}

double ks_distance(const Distribution& f1, const Distribution& f2) {
  if (f1.empty() || f2.empty()) {
    throw std::invalid_argument("ks_distance requires nonempty distributions");
  }
  auto s1 = f1.support();
  auto s2 = f2.support();
  auto c1 = f1.cdf();
  auto c2 = f2.cdf();
  std::size_t i = 0;
  std::size_t j = 0;
  double cur1 = 0.0;
  double cur2 = 0.0;
  double best = 0.0;
  while (i < s1.size() || j < s2.size()) {
    double x;
    if (j >= s2.size() || (i < s1.size() && s1[i] <= s2[j])) {
      x = s1[i];
    } else {
      x = s2[j];
    }
    // Step functions are right-continuous: advance every CDF whose support
    // point equals x, then evaluate.
    while (i < s1.size() && s1[i] == x) {
      cur1 = c1[i];
      ++i;
    }
    while (j < s2.size() && s2[j] == x) {
      cur2 = c2[j];
      ++j;
    }
    best = std::max(best, std::abs(cur1 - cur2));
  }
  return best;
}

double skew_divergence(const Distribution& p, const Distribution& q,
                       double alpha) {
  if (p.empty() || q.empty()) {
    throw std::invalid_argument(
        "skew_divergence requires nonempty distributions");
  }
  if (!(alpha > 0.0 && alpha < 1.0)) {
    throw std::invalid_argument("skew_divergence: alpha must be in (0, 1)");
  }
  auto sp = p.support();
  auto sq = q.support();
  auto pp = p.pdf();
  auto pq = q.pdf();
  std::size_t i = 0;
  std::size_t j = 0;
  double total = 0.0;
  while (i < sp.size()) {
    while (j < sq.size() && sq[j] < sp[i]) {
      ++j;  // q-only support points carry no p mass
    }
    double qm = (j < sq.size() && sq[j] == sp[i]) ? pq[j] : 0.0;
    double pm = pp[i];
    double mixture = alpha * qm + (1.0 - alpha) * pm;
    total += pm * std::log(pm / mixture);
    ++i;
  }
  return total;
}

}  // namespace gss
