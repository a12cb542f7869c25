#include "polyurn/history.hpp"

#include <ostream>

#include "polyurn/errors.hpp"

namespace polyurn {

mpz_class HistoryRow::at(std::uint64_t k) const {
  if (k < k_min || k > k_max()) return 0;
  return counts[k - k_min];
}

mpz_class HistoryRow::total() const {
  mpz_class sum = 0;
  for (const auto& c : counts) sum += c;
  return sum;
}

HistoryRow initial_row(const UrnSpec& spec) {
  return HistoryRow{spec.b0(), {mpz_class(1)}};
}

HistoryRow advance(const UrnSpec& spec, const HistoryRow& row, std::uint64_t n) {
  const ReplacementMatrix& m = spec.matrix_for_step(n);
  const std::uint64_t total = spec.total_balls(n);
  const std::uint64_t lo = row.k_min + std::min(m.a, m.c);
  const std::uint64_t hi = row.k_max() + std::max(m.a, m.c);

  HistoryRow next{lo, std::vector<mpz_class>(hi - lo + 1)};
  for (std::uint64_t i = 0; i < row.counts.size(); ++i) {
    const mpz_class& h = row.counts[i];
    if (h == 0) continue;
    const std::uint64_t k = row.k_min + i;
    if (k > 0) {
      mpz_addmul_ui(next.counts[k + m.a - lo].get_mpz_t(), h.get_mpz_t(), k);
    }
    if (total > k) {
      mpz_addmul_ui(next.counts[k + m.c - lo].get_mpz_t(), h.get_mpz_t(), total - k);
    }
  }
  // Trim zero tails so the support is exact.
  std::size_t first = 0;
  while (first + 1 < next.counts.size() && next.counts[first] == 0) ++first;
  std::size_t last = next.counts.size();
  while (last > first + 1 && next.counts[last - 1] == 0) --last;
  if (first > 0 || last < next.counts.size()) {
    next.counts = std::vector<mpz_class>(next.counts.begin() + first, next.counts.begin() + last);
    next.k_min += first;
  }
  return next;
}

HistoryTable::HistoryTable(UrnSpec spec, std::vector<HistoryRow> rows)
    : spec_(std::move(spec)), rows_(std::move(rows)) {
  if (rows_.empty()) throw InvalidParams("history table needs at least row 0");
}

void HistoryTable::write_csv(std::ostream& out) const {
  out << "n,k,count\n";
  for (std::uint64_t n = 0; n < rows_.size(); ++n) {
    const auto& row = rows_[n];
    for (std::uint64_t i = 0; i < row.counts.size(); ++i) {
      if (row.counts[i] == 0) continue;
      out << n << ',' << row.k_min + i << ',' << row.counts[i].get_str() << '\n';
    }
  }
}

HistoryTable exact_histories(const UrnSpec& spec, std::uint64_t n_max) {
  std::vector<HistoryRow> rows;
  rows.reserve(n_max + 1);
  rows.push_back(initial_row(spec));
  for (std::uint64_t n = 0; n < n_max; ++n) rows.push_back(advance(spec, rows.back(), n));
  return HistoryTable(spec, std::move(rows));
}

namespace {

HistoryRow row_at(const UrnSpec& spec, std::uint64_t n) {
  HistoryRow row = initial_row(spec);
  for (std::uint64_t i = 0; i < n; ++i) row = advance(spec, row, i);
  return row;
}

}  // namespace

mpz_class history_count(const UrnSpec& spec, std::uint64_t n) { return row_at(spec, n).total(); }

mpq_class exact_moment(const HistoryRow& row, std::uint32_t r) {
  mpz_class num = 0;
  mpz_class den = 0;
  mpz_class falling;
  for (std::uint64_t i = 0; i < row.counts.size(); ++i) {
    const std::uint64_t k = row.k_min + i;
    den += row.counts[i];
    // k (k-1) ... (k-r+1) vanishes when k < r.
    if (k < r) continue;
    falling = 1;
    for (std::uint32_t j = 0; j < r; ++j) falling *= static_cast<unsigned long>(k - j);
    num += falling * row.counts[i];
  }
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class exact_moment(const HistoryTable& table, std::uint64_t n, std::uint32_t r) {
  return exact_moment(table.row(n), r);
}

mpq_class exact_moment(const UrnSpec& spec, std::uint64_t n, std::uint32_t r) {
  return exact_moment(row_at(spec, n), r);
}

BlackPmf black_pmf(const UrnSpec& spec, std::uint64_t n) {
  BlackPmf law{spec.b0(), {1.0}};
  std::vector<double> next;
  for (std::uint64_t step = 0; step < n; ++step) {
    const ReplacementMatrix& m = spec.matrix_for_step(step);
    const double total = static_cast<double>(spec.total_balls(step));
    const std::uint64_t lo = law.k_min + std::min(m.a, m.c);
    const std::uint64_t hi = law.k_min + law.pmf.size() - 1 + std::max(m.a, m.c);
    next.assign(hi - lo + 1, 0.0);
    for (std::size_t i = 0; i < law.pmf.size(); ++i) {
      const double mass = law.pmf[i];
      if (mass == 0.0) continue;
      const std::uint64_t k = law.k_min + i;
      const double pb = static_cast<double>(k) / total;
      next[k + m.a - lo] += mass * pb;
      next[k + m.c - lo] += mass * (1.0 - pb);
    }
    law.k_min = lo;
    law.pmf.swap(next);
  }
  return law;
}

double factorial_moment(const BlackPmf& law, std::uint32_t r) {
  double sum = 0.0;
  for (std::size_t i = 0; i < law.pmf.size(); ++i) {
    const std::uint64_t k = law.k_min + i;
    if (k < r) continue;
    double falling = 1.0;
    for (std::uint32_t j = 0; j < r; ++j) falling *= static_cast<double>(k - j);
    sum += falling * law.pmf[i];
  }
  return sum;
}

double raw_moment(const BlackPmf& law, std::uint32_t r) {
  double sum = 0.0;
  for (std::size_t i = 0; i < law.pmf.size(); ++i) {
    double power = 1.0;
    for (std::uint32_t j = 0; j < r; ++j) power *= static_cast<double>(law.k_min + i);
    sum += power * law.pmf[i];
  }
  return sum;
}

}  // namespace polyurn
