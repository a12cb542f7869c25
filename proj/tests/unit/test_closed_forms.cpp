#include <doctest.h>

#include <cmath>

#include <boost/math/special_functions/gamma.hpp>

#include <polyurn/closed_forms.hpp>
#include <polyurn/history.hpp>

#include "test_support.hpp"

using namespace polyurn;
namespace yp = polyurn::young_polya_2;
using boost::math::tgamma;

namespace {

const UrnSpec kYp = young_polya().to_spec();

long double log_mpz(const mpz_class& z) {
  long exp = 0;
  const double mant = mpz_get_d_2exp(&exp, z.get_mpz_t());
  return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp) * std::log(2.0L);
}

}  // namespace

TEST_CASE("parity recurrences reproduce the exact counts") {
  CHECK(yp::history_count_exact(0) == 1);
  CHECK(yp::history_count_exact(1) == 2);
  CHECK(yp::history_count_exact(2) == 6);
  CHECK(yp::history_count_exact(5) == 1440);
  CHECK(yp::history_count_exact(10) == 359251200);

  const auto all = yp::history_counts_exact(200);
  REQUIRE(all.size() == 201);
  const HistoryTable table = exact_histories(kYp, 200);
  for (std::uint64_t n = 0; n <= 200; ++n) CHECK(all[n] == table.total(n));
}

TEST_CASE("two-step recurrence ratios") {
  // (3/4)(n+2)(3n+4) for even n, (3/4)(n+1)(3n+7) for odd n.
  const auto h = yp::history_counts_exact(40);
  for (std::uint64_t n = 0; n + 2 <= 40; ++n) {
    const mpq_class ratio = testing::q(h[n + 2], h[n]);
    const mpq_class want = n % 2 == 0 ? testing::q(3 * (n + 2) * (3 * n + 4), 4)
                                      : testing::q(3 * (n + 1) * (3 * n + 7), 4);
    CHECK(ratio == want);
  }
}

TEST_CASE("gamma closed form for history counts") {
  CHECK(static_cast<double>(yp::history_count(2)) == doctest::Approx(6.0).epsilon(1e-14));
  CHECK(static_cast<double>(yp::history_count(3)) == doctest::Approx(30.0).epsilon(1e-14));
  const auto h = yp::history_counts_exact(200);
  for (std::uint64_t n = 2; n <= 200; ++n) {
    const long double want = log_mpz(h[n]);
    const long double got = yp::log_history_count(n);
    CHECK(static_cast<double>(std::abs(got - want) / want) <= 1e-12);
  }
  CHECK(yp::log_history_count(0) == doctest::Approx(0.0));
}

TEST_CASE("history asymptotics") {
  const double c = std::sqrt(M_PI) / (std::pow(2.0, 1.0 / 6.0) * tgamma(2.0 / 3.0));
  CHECK(static_cast<double>(yp::history_asymptotic_constant()) == doctest::Approx(c).epsilon(1e-14));
  CHECK(c == doctest::Approx(1.16613).epsilon(1e-5));
  for (std::uint64_t n : {100u, 1000u, 10000u}) {
    const long double log_ratio = yp::log_history_count(n) - std::lgamma(static_cast<long double>(n) + 1) -
                                  n * std::log(1.5L) - std::log(static_cast<long double>(n)) / 6;
    CHECK(std::abs(static_cast<double>(std::exp(log_ratio)) / c - 1.0) < 2.0 / static_cast<double>(n));
  }
}

TEST_CASE("printed one-line recurrence does not give the counts") {
  const auto seq = yp::printed_recurrence(6);
  REQUIRE(seq.size() == 7);
  CHECK(seq[0] == 1);
  CHECK(seq[1] == 2);
  CHECK(seq[2] == testing::q(13, 3));
  CHECK(seq[2] != 6);
}

TEST_CASE("mean black closed form") {
  CHECK(static_cast<double>(yp::mean_black(0)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(static_cast<double>(yp::mean_black(1)) == doctest::Approx(1.5).epsilon(1e-14));
  CHECK(static_cast<double>(yp::mean_black(2)) == doctest::Approx(2.0).epsilon(1e-14));
  const HistoryTable table = exact_histories(kYp, 300);
  for (std::uint64_t n = 0; n <= 300; n += 7) {
    const double exact = exact_moment(table, n, 1).get_d();
    CHECK(testing::rel_err(static_cast<double>(yp::mean_black(n)), exact) <= 1e-12);
  }
}

TEST_CASE("limit moments") {
  CHECK(static_cast<double>(yp::limit_moment(1)) == doctest::Approx(tgamma(2.0 / 3) / tgamma(1.0 / 3)).epsilon(1e-14));
  CHECK(static_cast<double>(yp::limit_moment(1)) == doctest::Approx(0.505468).epsilon(1e-6));
  CHECK(static_cast<double>(yp::limit_moment(3)) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  CHECK(static_cast<double>(yp::limit_moment(0)) == doctest::Approx(1.0));
}

TEST_CASE("asymptotic moment coefficients") {
  const YoungPolyaFamily fam = young_polya();
  CHECK(static_cast<double>(asymptotic_moment_coefficient(fam, 0)) == doctest::Approx(1.0));
  const double r1 = 3.0 / std::pow(2.0, 2.0 / 3.0) * tgamma(2.0 / 3) / tgamma(1.0 / 3);
  CHECK(static_cast<double>(asymptotic_moment_coefficient(fam, 1)) == doctest::Approx(r1).epsilon(1e-13));
  const double r2 = 9.0 / std::pow(2.0, 4.0 / 3.0) / tgamma(1.0 / 3);
  CHECK(static_cast<double>(asymptotic_moment_coefficient(fam, 2)) == doctest::Approx(r2).epsilon(1e-13));
  CHECK(r2 == doctest::Approx(1.3332342).epsilon(1e-7));
  CHECK(static_cast<double>(asymptotic_moment(fam, 2, 1000)) ==
        doctest::Approx(r2 * std::pow(1000.0, 4.0 / 3.0)).epsilon(1e-12));
}

TEST_CASE("general family coefficient from gamma functions") {
  for (const YoungPolyaFamily fam : {YoungPolyaFamily{3, 2, 3, 2}, YoungPolyaFamily{1, 1, 2, 5},
                                     YoungPolyaFamily{4, 3, 1, 1}}) {
    const double p = fam.p, l = fam.l, b0 = static_cast<double>(fam.b0), w0 = static_cast<double>(fam.w0);
    const double delta = p / (p + l);
    for (std::uint32_t r = 1; r <= 5; ++r) {
      double want = std::pow(p + l, r) / std::pow(p, delta * r) * tgamma(b0 + r) * tgamma(b0 + w0) /
                    (tgamma(b0) * tgamma(b0 + w0 + r));
      for (std::uint32_t i = 0; i < fam.l; ++i) {
        want *= tgamma((b0 + w0 + p + r + i) / (p + l)) / tgamma((b0 + w0 + p + i) / (p + l));
      }
      CHECK(static_cast<double>(asymptotic_moment_coefficient(fam, r)) == doctest::Approx(want).epsilon(1e-12));
    }
  }
}

TEST_CASE("carleman terms") {
  const auto terms = carleman_series(200);
  REQUIRE(terms.size() == 200);
  for (std::size_t i = 1; i < terms.size(); ++i) CHECK(terms[i].partial_sum > terms[i - 1].partial_sum);
  for (const auto& t : terms) {
    const double m = tgamma(t.r / 3.0 + 1.0 / 3) / tgamma(1.0 / 3);
    CHECK(static_cast<double>(t.term) == doctest::Approx(std::pow(m, -1.0 / (2.0 * t.r))).epsilon(1e-10));
    CHECK(static_cast<double>(t.reference) == doctest::Approx(std::pow(3.0 * M_E / t.r, 1.0 / 6)).epsilon(1e-12));
    if (t.r >= 100) {
      const double ratio = static_cast<double>(t.term / t.reference);
      CHECK(ratio >= 0.9);
      CHECK(ratio <= 1.1);
    }
  }
}
