#include "polyurn/stats.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <ostream>

#include <boost/math/special_functions/gamma.hpp>
#include <json.hpp>

#include "polyurn/errors.hpp"

namespace polyurn {

std::vector<MomentEstimate> empirical_moments(std::span<const double> sample, std::uint32_t r_max) {
  if (sample.empty()) throw EmptySample();
  if (r_max == 0) throw InvalidParams("r_max must be at least 1");
  const auto n = static_cast<double>(sample.size());
  std::vector<double> sum(r_max + 1, 0.0);
  std::vector<double> sum_sq(r_max + 1, 0.0);
  for (const double x : sample) {
    double pw = 1.0;
    for (std::uint32_t r = 1; r <= r_max; ++r) {
      pw *= x;
      sum[r] += pw;
      sum_sq[r] += pw * pw;
    }
  }
  std::vector<MomentEstimate> out;
  out.reserve(r_max);
  for (std::uint32_t r = 1; r <= r_max; ++r) {
    const double mean = sum[r] / n;
    double se = 0.0;
    if (sample.size() > 1) {
      const double var = std::max(0.0, (sum_sq[r] - n * mean * mean) / (n - 1.0));
      se = std::sqrt(var / n);
    }
    out.push_back({r, mean, se});
  }
  return out;
}

double ks_distance(std::span<const double> sample, const std::function<double(double)>& cdf) {
  if (sample.empty()) throw EmptySample();
  std::vector<double> xs(sample.begin(), sample.end());
  std::sort(xs.begin(), xs.end());
  const auto n = static_cast<double>(xs.size());
  double d = 0.0;
  std::size_t i = 0;
  while (i < xs.size()) {
    std::size_t j = i;
    while (j + 1 < xs.size() && xs[j + 1] == xs[i]) ++j;
    const double f = std::clamp(cdf(xs[i]), 0.0, 1.0);
    const double below = static_cast<double>(i) / n;
    const double above = static_cast<double>(j + 1) / n;
    d = std::max({d, std::abs(above - f), std::abs(f - below)});
    i = j + 1;
  }
  return std::min(d, 1.0);
}

ChiSquareResult chi_square_pmf(const std::map<std::int64_t, std::uint64_t>& observed,
                               const std::map<std::int64_t, double>& pmf) {
  std::uint64_t total = 0;
  std::uint64_t outside = 0;
  for (const auto& [k, c] : observed) {
    total += c;
    if (!pmf.contains(k) || pmf.at(k) <= 0.0) outside += c;
  }
  if (total == 0) throw EmptySample();

  struct Bin {
    double expected = 0.0;
    double observed = 0.0;
  };
  std::vector<Bin> cells;
  cells.reserve(pmf.size());
  for (const auto& [k, prob] : pmf) {
    if (prob <= 0.0) continue;
    const auto it = observed.find(k);
    cells.push_back({prob * static_cast<double>(total),
                     it == observed.end() ? 0.0 : static_cast<double>(it->second)});
  }

  // Merge from both tails inward until every bin expects at least 5.
  constexpr double kMinExpected = 5.0;
  std::vector<Bin> left;
  std::vector<Bin> right;
  std::size_t lo = 0;
  std::size_t hi = cells.size();
  Bin acc_l;
  Bin acc_r;
  while (lo < hi) {
    acc_l.expected += cells[lo].expected;
    acc_l.observed += cells[lo].observed;
    ++lo;
    if (acc_l.expected >= kMinExpected) {
      left.push_back(acc_l);
      acc_l = {};
    }
    if (lo >= hi) break;
    --hi;
    acc_r.expected += cells[hi].expected;
    acc_r.observed += cells[hi].observed;
    if (acc_r.expected >= kMinExpected) {
      right.push_back(acc_r);
      acc_r = {};
    }
  }
  Bin rest{acc_l.expected + acc_r.expected, acc_l.observed + acc_r.observed};
  const std::size_t left_count = left.size();
  std::vector<Bin> bins = std::move(left);
  bins.insert(bins.end(), right.rbegin(), right.rend());
  if (rest.expected > 0.0 || rest.observed > 0.0) {
    if (bins.empty()) {
      bins.push_back(rest);
    } else {
      // Fold the leftover middle into the bin next to it.
      auto& neighbour = bins[left_count > 0 ? left_count - 1 : 0];
      neighbour.expected += rest.expected;
      neighbour.observed += rest.observed;
    }
  }
  if (bins.size() < 2 || bins.front().expected < kMinExpected) {
    throw InsufficientCounts("need at least two bins with expected count >= 5, have " +
                             std::to_string(bins.size()));
  }

  ChiSquareResult res{0.0, static_cast<std::uint32_t>(bins.size() - 1), 1.0,
                      static_cast<std::uint32_t>(bins.size())};
  if (outside > 0) {
    res.statistic = std::numeric_limits<double>::infinity();
    res.p_value = 0.0;
    return res;
  }
  for (const auto& b : bins) {
    const double diff = b.observed - b.expected;
    res.statistic += diff * diff / b.expected;
  }
  res.p_value = boost::math::gamma_q(0.5 * res.dof, 0.5 * res.statistic);
  return res;
}

bool ComparisonReport::all_pass() const {
  return std::all_of(verdicts.begin(), verdicts.end(), [](const auto& kv) { return kv.second; });
}

std::string ComparisonReport::to_json() const {
  nlohmann::json j;
  j["sample"] = {{"label", sample.label}, {"n", sample.n}, {"reps", sample.reps}, {"seed", sample.seed}};
  j["reference"] = reference;
  auto& rows = j["moments"] = nlohmann::json::array();
  for (const auto& m : moments) {
    rows.push_back({{"r", m.r},
                    {"empirical", m.empirical},
                    {"analytic", m.analytic},
                    {"standard_error", m.standard_error},
                    {"z", m.z}});
  }
  j["ks_distance"] = ks_distance;
  if (chi_square) {
    j["chi_square"] = {{"statistic", chi_square->statistic},
                       {"dof", chi_square->dof},
                       {"p_value", chi_square->p_value},
                       {"bins", chi_square->bins}};
  } else {
    j["chi_square"] = nullptr;
  }
  j["verdicts"] = verdicts;
  j["pass"] = all_pass();
  return j.dump(2);
}

void ComparisonReport::write_moments_csv(std::ostream& out) const {
  out << "r,empirical,analytic,standard_error,z\n";
  char buf[160];
  for (const auto& m : moments) {
    std::snprintf(buf, sizeof buf, "%u,%.17g,%.17g,%.17g,%.17g\n", m.r, m.empirical, m.analytic,
                  m.standard_error, m.z);
    out << buf;
  }
}

ComparisonReport compare(std::span<const double> sample, SampleInfo info, std::string reference,
                         std::uint32_t r_max, const std::function<double(std::uint32_t)>& analytic_moment,
                         const std::function<double(double)>& cdf) {
  ComparisonReport rep;
  rep.sample = std::move(info);
  rep.reference = std::move(reference);
  for (const auto& est : empirical_moments(sample, r_max)) {
    const double analytic = analytic_moment(est.r);
    const double diff = est.mean - analytic;
    double z = 0.0;
    if (est.standard_error > 0.0) {
      z = diff / est.standard_error;
    } else if (diff != 0.0) {
      z = std::copysign(std::numeric_limits<double>::max(), diff);
    }
    rep.moments.push_back({est.r, est.mean, analytic, est.standard_error, z});
  }
  rep.ks_distance = ks_distance(sample, cdf);
  return rep;
}

}  // namespace polyurn
