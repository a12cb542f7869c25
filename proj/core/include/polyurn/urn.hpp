#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polyurn {

// Balls added after a draw: black drawn -> (a black, b white),
// white drawn -> (c black, d white).
struct ReplacementMatrix {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t c = 0;
  std::uint32_t d = 0;

  bool balanced() const noexcept { return a + b == c + d; }
  // Ball increment K; only meaningful when balanced().
  std::uint32_t increment() const noexcept { return a + b; }

  friend bool operator==(const ReplacementMatrix&, const ReplacementMatrix&) = default;
};

// A balanced periodic Pólya urn. Matrix i (0-based) is used at every step
// s >= 1 with (s - 1) mod p == i.
class UrnSpec {
 public:
  UrnSpec(std::vector<ReplacementMatrix> matrices, std::uint64_t b0, std::uint64_t w0);

  std::size_t period() const noexcept { return matrices_.size(); }
  const std::vector<ReplacementMatrix>& matrices() const noexcept { return matrices_; }
  std::uint64_t b0() const noexcept { return b0_; }
  std::uint64_t w0() const noexcept { return w0_; }

  // Matrix applied on the step from time n to time n + 1.
  const ReplacementMatrix& matrix_for_step(std::uint64_t n) const noexcept {
    return matrices_[n % matrices_.size()];
  }
  // Number of balls after n steps (deterministic for balanced urns).
  std::uint64_t total_balls(std::uint64_t n) const noexcept;
  // Inclusive range of black counts reachable after n steps.
  std::uint64_t min_black(std::uint64_t n) const noexcept;
  std::uint64_t max_black(std::uint64_t n) const noexcept;

  friend bool operator==(const UrnSpec&, const UrnSpec&) = default;

 private:
  std::uint64_t sum_over_steps(std::uint64_t n, std::uint32_t (*pick)(const ReplacementMatrix&)) const noexcept;

  std::vector<ReplacementMatrix> matrices_;
  std::uint64_t b0_;
  std::uint64_t w0_;
  std::uint64_t period_increment_ = 0;
};

// Validating constructor. `p` must equal matrices.size().
UrnSpec make_urn_spec(std::size_t p, std::vector<ReplacementMatrix> matrices,
                      std::uint64_t b0, std::uint64_t w0);

// Young–Pólya urn of period p and parameter l: identity matrices for the
// first p - 1 steps of each period, then [[1, l], [0, 1 + l]].
struct YoungPolyaFamily {
  std::uint32_t p = 2;
  std::uint32_t l = 1;
  std::uint64_t b0 = 1;
  std::uint64_t w0 = 1;

  // p / (p + l)
  double delta() const noexcept { return static_cast<double>(p) / static_cast<double>(p + l); }
  UrnSpec to_spec() const;

  friend bool operator==(const YoungPolyaFamily&, const YoungPolyaFamily&) = default;
};

// The period-2 urn with b0 = w0 = 1.
inline YoungPolyaFamily young_polya() { return {2, 1, 1, 1}; }

// Recovers the family parameters when `spec` has Young–Pólya structure.
std::optional<YoungPolyaFamily> as_young_polya(const UrnSpec& spec);

// {"p": int, "matrices": [[a,b,c,d], ...], "b0": int, "w0": int}
std::string to_json(const UrnSpec& spec);
UrnSpec urn_spec_from_json(std::string_view text);

}  // namespace polyurn
