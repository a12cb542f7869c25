#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include <gmpxx.h>

#include "polyurn/urn.hpp"

namespace polyurn {

// Counts h_{n,k} of histories reaching k black balls after n steps, for one n.
// The white count is implied by balance: total_balls(n) - k.
struct HistoryRow {
  std::uint64_t k_min = 0;
  std::vector<mpz_class> counts;  // counts[i] is h_{n, k_min + i}

  std::uint64_t k_max() const noexcept { return k_min + counts.size() - 1; }
  // Zero outside the stored range.
  mpz_class at(std::uint64_t k) const;
  mpz_class total() const;
};

// Advances a row of time n to time n + 1 (exact, one draw per history).
HistoryRow advance(const UrnSpec& spec, const HistoryRow& row, std::uint64_t n);
HistoryRow initial_row(const UrnSpec& spec);

// Exact history counts for n = 0..n_max. Immutable after construction.
//
// Storage grows fast: for the Young–Pólya urn h_n ~ n! (3/2)^n, so row n
// holds about n + 1 integers of roughly log2(n!) + 0.6 n bits each.
class HistoryTable {
 public:
  HistoryTable(UrnSpec spec, std::vector<HistoryRow> rows);

  const UrnSpec& spec() const noexcept { return spec_; }
  std::uint64_t n_max() const noexcept { return rows_.size() - 1; }
  const HistoryRow& row(std::uint64_t n) const { return rows_.at(n); }
  mpz_class count(std::uint64_t n, std::uint64_t k) const { return row(n).at(k); }
  mpz_class total(std::uint64_t n) const { return row(n).total(); }

  // Writes `n,k,count` rows (counts as decimal strings), header included.
  void write_csv(std::ostream& out) const;

 private:
  UrnSpec spec_;
  std::vector<HistoryRow> rows_;
};

HistoryTable exact_histories(const UrnSpec& spec, std::uint64_t n_max);

// h_n = sum_k h_{n,k}, without keeping earlier rows.
mpz_class history_count(const UrnSpec& spec, std::uint64_t n);

// r-th factorial moment E[B_n (B_n - 1) ... (B_n - r + 1)] as an exact rational.
mpq_class exact_moment(const HistoryRow& row, std::uint32_t r);
mpq_class exact_moment(const HistoryTable& table, std::uint64_t n, std::uint32_t r);
mpq_class exact_moment(const UrnSpec& spec, std::uint64_t n, std::uint32_t r);

// Floating-point law of B_n: probabilities pmf[i] = P(B_n = k_min + i).
// Used where exact integers become too large (n in the thousands).
struct BlackPmf {
  std::uint64_t k_min = 0;
  std::vector<double> pmf;
};

BlackPmf black_pmf(const UrnSpec& spec, std::uint64_t n);
double factorial_moment(const BlackPmf& law, std::uint32_t r);
double raw_moment(const BlackPmf& law, std::uint32_t r);

}  // namespace polyurn
