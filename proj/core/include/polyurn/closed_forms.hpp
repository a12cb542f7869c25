#pragma once

#include <cstdint>
#include <vector>

#include <gmpxx.h>

#include "polyurn/urn.hpp"

namespace polyurn {

// Extended-precision real used by the closed-form evaluators.
using Real = long double;

// Closed forms for the period-2 Young–Pólya urn (b0 = w0 = 1).
namespace young_polya_2 {

// log h_n from the Gamma-function closed form:
//   n even: 3^n Γ(n/2 + 1) Γ(n/2 + 2/3) / Γ(2/3)
//   n odd:  3^n Γ(n/2 + 1/2) Γ(n/2 + 7/6) / Γ(2/3)
Real log_history_count(std::uint64_t n);
Real history_count(std::uint64_t n);

// Exact h_n through the two-step recurrences read off the decoupled ODEs
//   4 h(m+2) = (9m² + 30m + 24) h(m)   (m even)
//   4 h(m+2) = (9m² + 30m + 21) h(m)   (m odd)
// with h(0) = 1, h(1) = 2.
mpz_class history_count_exact(std::uint64_t n);
std::vector<mpz_class> history_counts_exact(std::uint64_t n_max);

// The one-line recurrence h(n+2) = 2/3 h(n+1) + 1/4 (9n² + 21n + 12) h(n)
// as printed alongside the closed form, seeded with h(0) = 1, h(1) = 2.
// It does not reproduce the history counts (it gives h(2) = 13/3); kept so
// the mismatch stays visible in tests and reports.
std::vector<mpq_class> printed_recurrence(std::uint64_t n_max);

// Mean number of black balls E(B_n), exact closed form.
Real mean_black(std::uint64_t n);

// Limit moments Γ(r/3 + 1/3) / Γ(1/3) of the rescaled black count.
Real limit_moment(std::uint32_t r);

// Asymptotic ratio h_n / (n! (3/2)^n n^{1/6}) -> sqrt(pi) / (2^{1/6} Γ(2/3)).
Real history_asymptotic_constant();

}  // namespace young_polya_2

// Leading term of E(B_n^r) for a Young–Pólya family:
//   (p+l)^r / p^{δr} · Γ(b0+r)Γ(b0+w0) / (Γ(b0)Γ(b0+w0+r))
//     · Π_{i<l} Γ((b0+w0+p+r+i)/(p+l)) / Γ((b0+w0+p+i)/(p+l)) · n^{δr}
Real asymptotic_moment(const YoungPolyaFamily& family, std::uint32_t r, std::uint64_t n);
// Same without the n^{δr} factor.
Real asymptotic_moment_coefficient(const YoungPolyaFamily& family, std::uint32_t r);

struct CarlemanTerm {
  std::uint32_t r;
  Real term;         // m_r^{-1/(2r)}
  Real partial_sum;  // sum of terms up to r
  Real reference;    // (3e/r)^{1/6}
};

// Terms of the Carleman series for the limit moments, r = 1..r_max.
std::vector<CarlemanTerm> carleman_series(std::uint32_t r_max);

}  // namespace polyurn
