#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <polyurn/distributions.hpp>
#include <polyurn/errors.hpp>

#include "test_support.hpp"

using namespace polyurn;
using boost::math::tgamma;
namespace quad = boost::math::quadrature;

namespace {

double integrate(const std::function<double(double)>& f, double a, double b) {
  quad::tanh_sinh<double> ts;
  return ts.integrate(f, a, b);
}

std::vector<double> draw(int n, std::uint64_t seed, const std::function<double(Philox4x32&)>& sampler) {
  Philox4x32 rng(seed, 0);
  std::vector<double> xs(n);
  for (auto& x : xs) x = sampler(rng);
  return xs;
}

void check_moments(const std::vector<double>& xs, int r_max, const std::function<double(int)>& want,
                   double se_tol) {
  for (int r = 1; r <= r_max; ++r) {
    const auto est = testing::power_mean_se(xs, r);
    CAPTURE(r);
    CAPTURE(est.mean);
    CAPTURE(want(r));
    CHECK(std::abs(est.mean - want(r)) <= se_tol * est.se);
  }
}

}  // namespace

TEST_CASE("generalized gamma density values") {
  CHECK(gengamma_pdf(1.0, {1, 1}) == doctest::Approx(std::exp(-1.0)).epsilon(1e-14));
  CHECK(gengamma_pdf(1e-12, {1, 3}) == doctest::Approx(3.0 / tgamma(1.0 / 3)).epsilon(1e-10));
  CHECK(3.0 / tgamma(1.0 / 3) == doctest::Approx(1.11985).epsilon(1e-5));
  CHECK(gengamma_pdf(0.0, {1, 3}) == 0.0);
  CHECK(gengamma_pdf(-2.0, {1, 3}) == 0.0);
  CHECK(gengamma_log_pdf(2.0, {4, 3}) == doctest::Approx(std::log(gengamma_pdf(2.0, {4, 3}))).epsilon(1e-13));
}

TEST_CASE("invalid parameters") {
  CHECK_THROWS_AS(GenGammaParams(0.0, 1.0), InvalidParams);
  CHECK_THROWS_AS(GenGammaParams(1.0, -1.0), InvalidParams);
  CHECK_THROWS_AS(GenGammaParams(std::nan(""), 1.0), InvalidParams);
  CHECK_THROWS_AS(gengamma_moment(-1.0, {1, 3}), InvalidParams);
  CHECK_THROWS_AS(beta_pdf(0.5, 0.0, 1.0), InvalidParams);
  Philox4x32 rng(1, 0);
  CHECK_THROWS_AS(gamma_sample(rng, 0.0), InvalidParams);
}

TEST_CASE("densities integrate to one") {
  for (const GenGammaParams g : {GenGammaParams{1, 3}, GenGammaParams{4, 3}, GenGammaParams{0.5, 2},
                                 GenGammaParams{7, 5}, GenGammaParams{2, 1}}) {
    const double upper = std::pow(60.0, 1.0 / g.beta);
    CHECK(integrate([&](double x) { return gengamma_pdf(x, g); }, 0.0, upper) == doctest::Approx(1.0).epsilon(1e-9));
  }
  for (const auto [a, b] : {std::pair{1.0, 1.0}, std::pair{2.0, 1.0}, std::pair{3.0, 2.0}, std::pair{2.5, 4.0}}) {
    CHECK(integrate([&](double x) { return beta_pdf(x, a, b); }, 0.0, 1.0) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("generalized gamma moments") {
  CHECK(gengamma_moment(0, {1, 3}) == doctest::Approx(1.0));
  CHECK(gengamma_moment(1, {1, 3}) == doctest::Approx(0.505468).epsilon(1e-6));
  CHECK(gengamma_moment(3, {1, 3}) == doctest::Approx(1.0 / 3).epsilon(1e-14));
  for (const GenGammaParams g : {GenGammaParams{1, 3}, GenGammaParams{4, 3}, GenGammaParams{2.5, 1.5}}) {
    for (double r : {0.5, 1.0, 2.0, 4.0}) {
      const double upper = std::pow(80.0, 1.0 / g.beta);
      const double m = integrate([&](double x) { return std::pow(x, r) * gengamma_pdf(x, g); }, 0.0, upper);
      CHECK(gengamma_moment(r, g) == doctest::Approx(m).epsilon(1e-9));
    }
  }
}

TEST_CASE("generalized gamma cdf") {
  CHECK(gengamma_cdf(0.0, {1, 3}) == 0.0);
  CHECK(gengamma_cdf(-1.0, {1, 3}) == 0.0);
  CHECK(gengamma_cdf(1.0, {1, 1}) == doctest::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
  CHECK(gengamma_cdf(1e6, {1, 3}) == 1.0);
  CHECK(gengamma_cdf(std::numeric_limits<double>::infinity(), {1, 3}) == 1.0);
  for (const GenGammaParams g : {GenGammaParams{1, 3}, GenGammaParams{4, 3}, GenGammaParams{2, 3}}) {
    double prev = 0.0;
    for (double x = 0.05; x < 3.0; x += 0.05) {
      const double want = integrate([&](double t) { return gengamma_pdf(t, g); }, 0.0, x);
      CHECK(std::abs(gengamma_cdf(x, g) - want) <= 1e-9);
      CHECK(gengamma_cdf(x, g) >= prev);
      prev = gengamma_cdf(x, g);
      const double h = 1e-5;
      const double deriv = (gengamma_cdf(x + h, g) - gengamma_cdf(x - h, g)) / (2 * h);
      CHECK(std::abs(deriv - gengamma_pdf(x, g)) <= 1e-6);
    }
  }
}

TEST_CASE("gengamma with beta one is the gamma law") {
  for (const double a : {0.3, 1.0, 2.5, 9.0}) {
    for (double x = 0.1; x < 10; x += 0.7) {
      CHECK(gengamma_pdf(x, {a, 1}) == doctest::Approx(gamma_pdf(x, a)).epsilon(1e-13));
      CHECK(gamma_pdf(x, a) == doctest::Approx(std::pow(x, a - 1) * std::exp(-x) / tgamma(a)).epsilon(1e-12));
    }
  }
}

TEST_CASE("gamma sampler moments across shapes") {
  for (const double a : {0.05, 1.0 / 3, 0.9, 1.0, 2.5, 40.0}) {
    CAPTURE(a);
    const auto xs = draw(1000000, 17, [&](Philox4x32& rng) { return gamma_sample(rng, a); });
    for (const double x : xs) REQUIRE(x >= 0.0);
    check_moments(xs, 4, [&](int r) { return tgamma(a + r) / tgamma(a); }, 4.0);
  }
}

TEST_CASE("gengamma sampler") {
  SUBCASE("(1, 3) mean") {
    const auto xs = draw(1000000, 1, [](Philox4x32& rng) { return gengamma_sample(rng, {1, 3}); });
    const auto est = testing::mean_se(xs);
    CHECK(std::abs(est.mean - 0.505468) <= 3 * est.se);
  }
  SUBCASE("(4, 3) moments") {
    const GenGammaParams g{4, 3};
    const auto xs = draw(1000000, 2, [&](Philox4x32& rng) { return gengamma_sample(rng, g); });
    check_moments(xs, 4, [](int r) { return tgamma((4.0 + r) / 3) / tgamma(4.0 / 3); }, 3.0);
  }
  SUBCASE("beta one reduces to a gamma draw") {
    Philox4x32 a(5, 5), b(5, 5);
    for (int i = 0; i < 1000; ++i) CHECK(gengamma_sample(a, {2.5, 1}) == doctest::Approx(gamma_sample(b, 2.5)));
  }
}

TEST_CASE("beta law") {
  CHECK(beta_pdf(0.3, 1, 1) == doctest::Approx(1.0));
  CHECK(beta_pdf(0.3, 2, 1) == doctest::Approx(0.6));
  CHECK(beta_pdf(1.5, 2, 1) == 0.0);
  CHECK(beta_cdf(0.3, 2, 1) == doctest::Approx(0.09));
  CHECK(beta_moment(1, 2, 1) == doctest::Approx(2.0 / 3));
  CHECK(beta_moment(2, 3, 2) == doctest::Approx(3.0 * 4 / (5 * 6)));
  const auto xs = draw(1000000, 3, [](Philox4x32& rng) { return beta_sample(rng, 2, 1); });
  const auto est = testing::mean_se(xs);
  CHECK(std::abs(est.mean - 2.0 / 3) <= 3 * est.se);
  const auto ys = draw(1000000, 4, [](Philox4x32& rng) { return beta_sample(rng, 3, 2); });
  check_moments(ys, 4, [](int r) { return beta_moment(r, 3, 2); }, 4.0);
}

TEST_CASE("normal sampler") {
  const auto xs = draw(1000000, 8, [](Philox4x32& rng) { return normal_sample(rng); });
  check_moments(xs, 4, [](int r) { return r % 2 == 1 ? 0.0 : (r == 2 ? 1.0 : 3.0); }, 4.0);
}
