#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace polyurn {

struct MomentEstimate {
  std::uint32_t r;
  double mean;            // (1/N) sum x^r
  double standard_error;  // sample sd of x^r over sqrt(N)
};

std::vector<MomentEstimate> empirical_moments(std::span<const double> sample, std::uint32_t r_max);

// sup_x |F_N(x) - F(x)| for a continuous reference F. Ties in the sample are
// handled as a single jump of the empirical CDF.
double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf);

struct ChiSquareResult {
  double statistic;
  std::uint32_t dof;
  double p_value;
  std::uint32_t bins;
};

// Pearson goodness of fit of observed counts against an exact pmf over a
// finite support. Bins with expected count < 5 are merged, working from both
// tails inward. Observations outside the support make the statistic infinite.
ChiSquareResult chi_square_pmf(const std::map<std::int64_t, std::uint64_t>& observed,
                               const std::map<std::int64_t, double>& pmf);

struct MomentRow {
  std::uint32_t r;
  double empirical;
  double analytic;
  double standard_error;
  double z;  // (empirical - analytic) / se; 0 when both agree exactly
};

struct SampleInfo {
  std::string label;
  std::uint64_t n = 0;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
};

struct ComparisonReport {
  SampleInfo sample;
  std::string reference;
  std::vector<MomentRow> moments;
  double ks_distance = 0.0;
  std::optional<ChiSquareResult> chi_square;
  std::map<std::string, bool> verdicts;

  bool all_pass() const;
  std::string to_json() const;
  // `r,empirical,analytic,standard_error,z`
  void write_moments_csv(std::ostream& out) const;
};

ComparisonReport compare(std::span<const double> sample, SampleInfo info, std::string reference,
                         std::uint32_t r_max, const std::function<double(std::uint32_t)>& analytic_moment,
                         const std::function<double(double)>& cdf);

}  // namespace polyurn
