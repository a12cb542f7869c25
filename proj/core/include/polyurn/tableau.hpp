#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "polyurn/random.hpp"

namespace polyurn {

// Young diagram in French convention: rows listed bottom-up, weakly
// decreasing lengths. Cell (i, j) is row i, column j, both 0-based.
class YoungDiagram {
 public:
  YoungDiagram() = default;
  explicit YoungDiagram(std::vector<std::uint32_t> rows);

  const std::vector<std::uint32_t>& rows() const noexcept { return rows_; }
  std::size_t row_count() const noexcept { return rows_.size(); }
  std::uint32_t width() const noexcept { return rows_.empty() ? 0 : rows_.front(); }
  std::uint64_t cells() const noexcept { return cells_; }
  // Height of column j.
  std::uint32_t column_height(std::uint32_t j) const;

  // Cells strictly right of / strictly above (i, j), plus one.
  std::uint32_t hook(std::uint32_t i, std::uint32_t j) const;

  friend bool operator==(const YoungDiagram&, const YoungDiagram&) = default;

 private:
  std::vector<std::uint32_t> rows_;
  std::uint64_t cells_ = 0;
};

// Triangular shape of slope -l/p: block i = 1..n is p rows of length (n+1-i) l.
struct TableauShape {
  std::uint32_t p;
  std::uint32_t l;
  std::uint32_t n;
  YoungDiagram diagram;

  std::uint64_t N() const noexcept { return diagram.cells(); }
  double delta() const noexcept { return static_cast<double>(p) / static_cast<double>(p + l); }
};

TableauShape make_shape(std::uint32_t p, std::uint32_t l, std::uint32_t n);

// A standard filling: entries[i][j] is the label of cell (i, j), labels 1..N.
struct Tableau {
  YoungDiagram diagram;
  std::vector<std::vector<std::uint32_t>> entries;

  // Rows bottom-up, one CSV line per row, `width()` fields, blanks past the row end.
  void write_csv(std::ostream& out) const;
};

bool is_standard(const Tableau& t);

// Hook length of every cell, same layout as Tableau::entries.
std::vector<std::vector<std::uint32_t>> hook_lengths(const YoungDiagram& d);
// N! / prod of hooks.
mpz_class syt_count(const YoungDiagram& d);

// Hook-walk sampler bound to one diagram. Keeps its scratch state between
// draws, so repeated sampling does not allocate. Not thread-safe; use one
// sampler per worker.
class HookWalkSampler {
 public:
  explicit HookWalkSampler(const YoungDiagram& d);

  const YoungDiagram& diagram() const noexcept { return diagram_; }

  Tableau sample(Philox4x32& rng);
  void sample_into(Philox4x32& rng, Tableau& out);
  // row_of_label[x - 1] = row holding label x (the Yamanouchi word).
  void sample_rows(Philox4x32& rng, std::span<std::uint32_t> row_of_label);
  std::uint32_t sample_corner_entry(Philox4x32& rng);

 private:
  void reset();
  // Walks from a uniform remaining cell to a corner of the remaining diagram.
  std::pair<std::uint32_t, std::uint32_t> walk(Philox4x32& rng) const;
  void remove(std::uint32_t i, std::uint32_t j);

  YoungDiagram diagram_;
  std::vector<std::uint32_t> rows_;
  std::vector<std::uint32_t> heights_;
  std::vector<std::uint32_t> start_heights_;
  // Remaining cells, unordered; slot_[i * width + j] is the index of (i, j).
  using Cell = std::pair<std::uint32_t, std::uint32_t>;
  std::vector<Cell> start_cells_;
  std::vector<Cell> cells_;
  std::vector<std::uint32_t> start_slot_;
  std::vector<std::uint32_t> slot_;
  std::uint64_t remaining_ = 0;
};

// Uniform standard tableau by repeated hook walks: the largest remaining
// label goes to the corner where a walk ends.
Tableau sample_syt_hookwalk(const YoungDiagram& d, Philox4x32& rng);

// Label of the last cell of the bottom row, stopping the hook walks as soon
// as that cell is filled. Same law as corner_entry(sample_syt_hookwalk(d)).
std::uint32_t sample_corner_entry(const YoungDiagram& d, Philox4x32& rng);

inline constexpr std::size_t kDefaultSytBound = 18;

// Calls visit(t) once per standard tableau; returns how many were visited.
// Throws BoundExceeded when d has more than `bound` cells.
std::uint64_t enumerate_syt(const YoungDiagram& d, const std::function<void(const Tableau&)>& visit,
                            std::size_t bound = kDefaultSytBound);
std::vector<Tableau> enumerate_syt(const YoungDiagram& d, std::size_t bound = kDefaultSytBound);

// Entry of the last cell of the bottom row.
std::uint32_t corner_entry(const Tableau& t);

// Exact law of corner_entry over all standard tableaux (by enumeration):
// label -> number of tableaux.
std::map<std::uint32_t, mpz_class> corner_entry_counts(const YoungDiagram& d,
                                                       std::size_t bound = kDefaultSytBound);

// p^δ/(p+l) · (N - x) / n^{1+δ}, δ = p/(p+l).
double corner_statistic(std::uint64_t x, std::uint32_t p, std::uint32_t l, std::uint32_t n);

// c such that corner_statistic converges in law to c · ProdGenGamma(p, l, p, l).
// Equals p^δ l p / (2 (p+l)); (2/(l p)) (N - X_n)/n^{1+δ} itself tends to
// ProdGenGamma(p, l, p, l).
double corner_limit_scale(std::uint32_t p, std::uint32_t l);

}  // namespace polyurn
