#include "polyurn/closed_forms.hpp"

#include <cmath>
#include <numbers>

#include "polyurn/errors.hpp"

namespace polyurn {

namespace {

Real lgam(Real x) { return std::lgamma(x); }

}  // namespace

namespace young_polya_2 {

Real log_history_count(std::uint64_t n) {
  const Real half = static_cast<Real>(n) / 2;
  const Real base = static_cast<Real>(n) * std::log(3.0L) - lgam(2.0L / 3);
  if (n % 2 == 0) return base + lgam(half + 1) + lgam(half + 2.0L / 3);
  return base + lgam(half + 0.5L) + lgam(half + 7.0L / 6);
}

Real history_count(std::uint64_t n) { return std::exp(log_history_count(n)); }

std::vector<mpz_class> history_counts_exact(std::uint64_t n_max) {
  std::vector<mpz_class> h(n_max + 1);
  h[0] = 1;
  if (n_max >= 1) h[1] = 2;
  for (std::uint64_t m = 0; m + 2 <= n_max; ++m) {
    const std::uint64_t c = (m % 2 == 0) ? 9 * m * m + 30 * m + 24 : 9 * m * m + 30 * m + 21;
    mpz_class next = h[m] * static_cast<unsigned long>(c);
    // c = (3m+4)(3m+6) or (3m+3)(3m+7): two even factors for the matching parity.
    mpz_class q, rem;
    mpz_fdiv_qr_ui(q.get_mpz_t(), rem.get_mpz_t(), next.get_mpz_t(), 4);
    if (rem != 0) throw Error("parity recurrence produced a non-integer at n=" + std::to_string(m + 2));
    h[m + 2] = q;
  }
  return h;
}

mpz_class history_count_exact(std::uint64_t n) { return history_counts_exact(n)[n]; }

std::vector<mpq_class> printed_recurrence(std::uint64_t n_max) {
  std::vector<mpq_class> h(n_max + 1);
  h[0] = 1;
  if (n_max >= 1) h[1] = 2;
  for (std::uint64_t n = 0; n + 2 <= n_max; ++n) {
    const mpq_class two_thirds(2, 3);
    const mpq_class quarter(1, 4);
    const mpz_class poly = static_cast<unsigned long>(9 * n * n + 21 * n + 12);
    h[n + 2] = two_thirds * h[n + 1] + quarter * mpq_class(poly) * h[n];
    h[n + 2].canonicalize();
  }
  return h;
}

Real mean_black(std::uint64_t n) {
  const Real pi = std::numbers::pi_v<Real>;
  const Real half = static_cast<Real>(n) / 2;
  const Real lead = 1.5L * std::log(3.0L) + 2 * lgam(2.0L / 3) - std::log(pi);
  if (n % 2 == 0) {
    return std::exp(lead - std::log(2.0L) + lgam(half + 4.0L / 3) - lgam(half + 2.0L / 3));
  }
  return std::exp(lead - std::log(4.0L) + std::log(static_cast<Real>(n) + 1) +
                  lgam(half + 5.0L / 6) - lgam(half + 7.0L / 6));
}

Real limit_moment(std::uint32_t r) {
  return std::exp(lgam((static_cast<Real>(r) + 1) / 3) - lgam(1.0L / 3));
}

Real history_asymptotic_constant() {
  return std::sqrt(std::numbers::pi_v<Real>) / (std::pow(2.0L, 1.0L / 6) * std::tgamma(2.0L / 3));
}

}  // namespace young_polya_2

Real asymptotic_moment_coefficient(const YoungPolyaFamily& f, std::uint32_t r) {
  if (f.p == 0 || f.l == 0 || f.b0 == 0 || f.w0 == 0) {
    throw InvalidParams("asymptotic moments need p, l, b0, w0 >= 1");
  }
  const Real p = f.p;
  const Real pl = static_cast<Real>(f.p + f.l);
  const Real delta = p / pl;
  const Real rr = r;
  const Real b0 = static_cast<Real>(f.b0);
  const Real s = b0 + static_cast<Real>(f.w0);
  Real log_c = rr * std::log(pl) - delta * rr * std::log(p) + lgam(b0 + rr) + lgam(s) - lgam(b0) -
               lgam(s + rr);
  for (std::uint32_t i = 0; i < f.l; ++i) {
    log_c += lgam((s + p + rr + i) / pl) - lgam((s + p + i) / pl);
  }
  return std::exp(log_c);
}

Real asymptotic_moment(const YoungPolyaFamily& f, std::uint32_t r, std::uint64_t n) {
  const Real delta = static_cast<Real>(f.p) / static_cast<Real>(f.p + f.l);
  return asymptotic_moment_coefficient(f, r) *
         std::pow(static_cast<Real>(n), delta * static_cast<Real>(r));
}

std::vector<CarlemanTerm> carleman_series(std::uint32_t r_max) {
  std::vector<CarlemanTerm> out;
  out.reserve(r_max);
  Real sum = 0;
  const Real e = std::numbers::e_v<Real>;
  for (std::uint32_t r = 1; r <= r_max; ++r) {
    const Real log_m = lgam((static_cast<Real>(r) + 1) / 3) - lgam(1.0L / 3);
    const Real term = std::exp(-log_m / (2 * static_cast<Real>(r)));
    sum += term;
    out.push_back({r, term, sum, std::pow(3 * e / static_cast<Real>(r), 1.0L / 6)});
  }
  return out;
}

}  // namespace polyurn
