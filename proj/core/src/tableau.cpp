#include "polyurn/tableau.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>

#include "polyurn/errors.hpp"

namespace polyurn {

YoungDiagram::YoungDiagram(std::vector<std::uint32_t> rows) : rows_(std::move(rows)) {
  while (!rows_.empty() && rows_.back() == 0) rows_.pop_back();
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (i > 0 && rows_[i] > rows_[i - 1]) {
      throw InvalidParams("row lengths must be weakly decreasing bottom-up");
    }
    cells_ += rows_[i];
  }
}

std::uint32_t YoungDiagram::column_height(std::uint32_t j) const {
  std::uint32_t h = 0;
  while (h < rows_.size() && rows_[h] > j) ++h;
  return h;
}

std::uint32_t YoungDiagram::hook(std::uint32_t i, std::uint32_t j) const {
  return (rows_.at(i) - j - 1) + (column_height(j) - i - 1) + 1;
}

TableauShape make_shape(std::uint32_t p, std::uint32_t l, std::uint32_t n) {
  if (p == 0 || l == 0 || n == 0) throw InvalidParams("triangular shape needs p, l, n >= 1");
  std::vector<std::uint32_t> rows;
  rows.reserve(static_cast<std::size_t>(n) * p);
  for (std::uint32_t block = 1; block <= n; ++block) rows.insert(rows.end(), p, (n + 1 - block) * l);
  return TableauShape{p, l, n, YoungDiagram(std::move(rows))};
}

void Tableau::write_csv(std::ostream& out) const {
  const std::uint32_t w = diagram.width();
  for (const auto& row : entries) {
    for (std::uint32_t j = 0; j < w; ++j) {
      if (j > 0) out << ',';
      if (j < row.size()) out << row[j];
    }
    out << '\n';
  }
}

bool is_standard(const Tableau& t) {
  const auto& rows = t.diagram.rows();
  if (t.entries.size() != rows.size()) return false;
  std::vector<bool> seen(t.diagram.cells() + 1, false);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (t.entries[i].size() != rows[i]) return false;
    for (std::size_t j = 0; j < rows[i]; ++j) {
      const std::uint32_t v = t.entries[i][j];
      if (v < 1 || v > t.diagram.cells() || seen[v]) return false;
      seen[v] = true;
      if (j > 0 && t.entries[i][j - 1] >= v) return false;
      if (i > 0 && t.entries[i - 1][j] >= v) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::uint32_t>> hook_lengths(const YoungDiagram& d) {
  const auto& rows = d.rows();
  std::vector<std::uint32_t> heights(d.width());
  for (std::uint32_t j = 0; j < d.width(); ++j) heights[j] = d.column_height(j);
  std::vector<std::vector<std::uint32_t>> hooks(rows.size());
  for (std::uint32_t i = 0; i < rows.size(); ++i) {
    hooks[i].resize(rows[i]);
    for (std::uint32_t j = 0; j < rows[i]; ++j) hooks[i][j] = (rows[i] - j - 1) + (heights[j] - i - 1) + 1;
  }
  return hooks;
}

mpz_class syt_count(const YoungDiagram& d) {
  mpz_class num;
  mpz_fac_ui(num.get_mpz_t(), d.cells());
  mpz_class den = 1;
  for (const auto& row : hook_lengths(d)) {
    for (const auto h : row) den *= h;
  }
  return num / den;
}

HookWalkSampler::HookWalkSampler(const YoungDiagram& d)
    : diagram_(d), rows_(d.rows()), heights_(d.width()), start_heights_(d.width()) {
  for (std::uint32_t j = 0; j < d.width(); ++j) start_heights_[j] = d.column_height(j);
  const std::uint32_t w = d.width();
  start_cells_.reserve(d.cells());
  start_slot_.resize(static_cast<std::size_t>(d.row_count()) * w);
  for (std::uint32_t i = 0; i < d.row_count(); ++i) {
    for (std::uint32_t j = 0; j < d.rows()[i]; ++j) {
      start_slot_[i * w + j] = static_cast<std::uint32_t>(start_cells_.size());
      start_cells_.push_back({i, j});
    }
  }
  cells_ = start_cells_;
  slot_ = start_slot_;
}

void HookWalkSampler::reset() {
  std::copy(diagram_.rows().begin(), diagram_.rows().end(), rows_.begin());
  std::copy(start_heights_.begin(), start_heights_.end(), heights_.begin());
  std::copy(start_cells_.begin(), start_cells_.end(), cells_.begin());
  std::copy(start_slot_.begin(), start_slot_.end(), slot_.begin());
  remaining_ = diagram_.cells();
}

std::pair<std::uint32_t, std::uint32_t> HookWalkSampler::walk(Philox4x32& rng) const {
  auto [i, j] = cells_[rng.below(remaining_)];
  for (;;) {
    const std::uint32_t arm = rows_[i] - j - 1;
    const std::uint32_t leg = heights_[j] - i - 1;
    if (arm + leg == 0) return {i, j};
    const auto t = static_cast<std::uint32_t>(rng.below(arm + leg));
    const bool right = t < arm;
    j += right ? t + 1 : 0;
    i += right ? 0 : t - arm + 1;
  }
}

// Only corners are removed, so the remaining cells always form a diagram.
void HookWalkSampler::remove(std::uint32_t i, std::uint32_t j) {
  --rows_[i];
  --heights_[j];
  const std::uint32_t w = diagram_.width();
  const std::uint32_t s = slot_[i * w + j];
  const Cell last = cells_[remaining_ - 1];
  cells_[s] = last;
  slot_[last.first * w + last.second] = s;
  --remaining_;
}

void HookWalkSampler::sample_into(Philox4x32& rng, Tableau& out) {
  if (out.diagram != diagram_) {
    out.diagram = diagram_;
    out.entries.resize(diagram_.row_count());
    for (std::size_t i = 0; i < diagram_.row_count(); ++i) out.entries[i].resize(diagram_.rows()[i]);
  }
  reset();
  while (remaining_ > 0) {
    const auto label = static_cast<std::uint32_t>(remaining_);
    const auto [i, j] = walk(rng);
    out.entries[i][j] = label;
    remove(i, j);
  }
}

void HookWalkSampler::sample_rows(Philox4x32& rng, std::span<std::uint32_t> row_of_label) {
  if (row_of_label.size() != diagram_.cells()) throw InvalidParams("row_of_label must have one slot per cell");
  reset();
  while (remaining_ > 0) {
    const auto [i, j] = walk(rng);
    row_of_label[remaining_ - 1] = i;
    remove(i, j);
  }
}

Tableau HookWalkSampler::sample(Philox4x32& rng) {
  Tableau t;
  sample_into(rng, t);
  return t;
}

std::uint32_t HookWalkSampler::sample_corner_entry(Philox4x32& rng) {
  if (diagram_.cells() == 0) throw InvalidParams("empty diagram has no corner");
  const std::uint32_t corner_col = diagram_.width() - 1;
  reset();
  for (;;) {
    const auto label = static_cast<std::uint32_t>(remaining_);
    const auto [i, j] = walk(rng);
    if (i == 0 && j == corner_col) return label;
    remove(i, j);
  }
}

Tableau sample_syt_hookwalk(const YoungDiagram& d, Philox4x32& rng) {
  return HookWalkSampler(d).sample(rng);
}

std::uint32_t sample_corner_entry(const YoungDiagram& d, Philox4x32& rng) {
  return HookWalkSampler(d).sample_corner_entry(rng);
}

std::uint64_t enumerate_syt(const YoungDiagram& d, const std::function<void(const Tableau&)>& visit,
                            std::size_t bound) {
  if (d.cells() > bound) throw BoundExceeded(d.cells(), bound);
  const auto& rows = d.rows();
  const std::size_t r = rows.size();
  Tableau t{d, {}};
  t.entries.resize(r);
  for (std::size_t i = 0; i < r; ++i) t.entries[i].assign(rows[i], 0);
  std::vector<std::uint32_t> filled(r, 0);
  std::uint64_t count = 0;
  const auto total = static_cast<std::uint32_t>(d.cells());

  // Labels go in increasing order; label `next` may extend row i when the
  // row below is already longer (French convention: columns grow upward).
  std::function<void(std::uint32_t)> place = [&](std::uint32_t next) {
    if (next > total) {
      ++count;
      visit(t);
      return;
    }
    for (std::size_t i = 0; i < r; ++i) {
      if (filled[i] >= rows[i]) continue;
      if (i > 0 && filled[i] >= filled[i - 1]) continue;
      t.entries[i][filled[i]] = next;
      ++filled[i];
      place(next + 1);
      --filled[i];
    }
  };
  place(1);
  return count;
}

std::vector<Tableau> enumerate_syt(const YoungDiagram& d, std::size_t bound) {
  std::vector<Tableau> out;
  enumerate_syt(d, [&](const Tableau& t) { out.push_back(t); }, bound);
  return out;
}

std::uint32_t corner_entry(const Tableau& t) {
  if (t.entries.empty() || t.entries.front().empty()) throw InvalidParams("empty tableau has no corner");
  return t.entries.front().back();
}

std::map<std::uint32_t, mpz_class> corner_entry_counts(const YoungDiagram& d, std::size_t bound) {
  std::map<std::uint32_t, mpz_class> counts;
  enumerate_syt(d, [&](const Tableau& t) { counts[corner_entry(t)] += 1; }, bound);
  return counts;
}

double corner_statistic(std::uint64_t x, std::uint32_t p, std::uint32_t l, std::uint32_t n) {
  if (p == 0 || l == 0 || n == 0) throw InvalidParams("corner statistic needs p, l, n >= 1");
  const std::uint64_t N = static_cast<std::uint64_t>(p) * l * n * (n + 1) / 2;
  if (x < 1 || x > N) throw InvalidParams("corner entry must lie in [1, N]");
  const double delta = static_cast<double>(p) / static_cast<double>(p + l);
  return std::pow(static_cast<double>(p), delta) / static_cast<double>(p + l) *
         static_cast<double>(N - x) / std::pow(static_cast<double>(n), 1.0 + delta);
}

double corner_limit_scale(std::uint32_t p, std::uint32_t l) {
  if (p == 0 || l == 0) throw InvalidParams("corner scale needs p, l >= 1");
  const double delta = static_cast<double>(p) / static_cast<double>(p + l);
  return std::pow(static_cast<double>(p), delta) * l * p / (2.0 * (p + l));
}

}  // namespace polyurn
