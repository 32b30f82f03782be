#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gss {

// Empirical discrete distribution over a sorted numeric support with PDF,
// CDF, and CCDF views. pdf sums to 1 and cdf is nondecreasing with final
// value 1, up to rounding; CCDF(x) = 1 - CDF(x) pointwise.
class Distribution {
 public:
  Distribution() = default;

  static Distribution from_samples(std::vector<double> values);
  static Distribution from_counts(
      std::vector<std::pair<double, std::uint64_t>> counts);

  std::size_t size() const { return support_.size(); }
  bool empty() const { return support_.empty(); }
  std::uint64_t sample_count() const { return sample_count_; }

  std::span<const double> support() const { return support_; }
  std::span<const double> pdf() const { return pdf_; }
  std::span<const double> cdf() const { return cdf_; }
  double ccdf(std::size_t i) const { return 1.0 - cdf_[i]; }

  double mean() const;

  // CSV with header value,pdf,cdf,ccdf.
  std::string to_csv() const;

  friend bool operator==(const Distribution& a, const Distribution& b) {
    return a.support_ == b.support_ && a.pdf_ == b.pdf_ &&
           a.sample_count_ == b.sample_count_;
  }

 private:
  std::vector<double> support_;
  std::vector<double> pdf_;
  std::vector<double> cdf_;
  std::uint64_t sample_count_ = 0;
};

// Kolmogorov-Smirnov statistic: sup over the merged support of
// |CDF1(x) - CDF2(x)| with right-continuous step evaluation. Symmetric,
// in [0, 1]. Both distributions must be nonempty.
double ks_distance(const Distribution& f1, const Distribution& f2);

// KL(p || alpha*q + (1-alpha)*p) over the merged support with the usual
// 0*log(0/.) = 0 convention. Finite for all finite discrete inputs because
// the mixture has positive mass wherever p does. Not symmetric.
double skew_divergence(const Distribution& p, const Distribution& q,
                       double alpha = 0.99);

}  // namespace gss
