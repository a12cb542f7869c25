#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/special_functions/gamma.hpp>

#include <polyurn/errors.hpp>
#include <polyurn/prodgengamma.hpp>

#include "test_support.hpp"

using namespace polyurn;
using boost::math::tgamma;

TEST_CASE("period-2 product law equals GenGamma(1, 3) in moments") {
  const ProdGenGammaSpec spec(2, 1, 1, 1);
  CHECK(prodgengamma_moment(0, spec) == 1.0);
  for (int r = 1; r <= 6; ++r) {
    CHECK(testing::rel_err(prodgengamma_moment(r, spec), gengamma_moment(r, {1, 3})) <= 1e-12);
  }
}

TEST_CASE("moments factor over independent components") {
  for (const ProdGenGammaSpec spec : {ProdGenGammaSpec(3, 2, 3, 2), ProdGenGammaSpec(2, 3, 1, 4),
                                      ProdGenGammaSpec(1, 1, 1, 1)}) {
    for (int r = 1; r <= 8; ++r) {
      double want = beta_moment(r, spec.b0, spec.w0);
      for (std::uint32_t i = 0; i < spec.l; ++i) want *= gengamma_moment(r, spec.factor(i));
      CHECK(testing::rel_err(prodgengamma_moment(r, spec), want) <= 1e-12);
    }
  }
}

TEST_CASE("factor parameters and validation") {
  const ProdGenGammaSpec spec(3, 2, 3, 2);
  CHECK(spec.factor(0).alpha == 8.0);
  CHECK(spec.factor(1).alpha == 9.0);
  CHECK(spec.factor(1).beta == 5.0);
  CHECK(spec.delta() == doctest::Approx(0.6));
  CHECK_THROWS_AS(ProdGenGammaSpec(0, 1, 1, 1), InvalidParams);
  CHECK_THROWS_AS(ProdGenGammaSpec(1, 1, 0, 1), InvalidParams);
  CHECK(ProdGenGammaSpec::from_family({3, 2, 3, 2}).w0 == 2.0);
}

TEST_CASE("sampler agrees with the moment formula") {
  for (const ProdGenGammaSpec spec : {ProdGenGammaSpec(3, 2, 3, 2), ProdGenGammaSpec(2, 1, 1, 1)}) {
    Philox4x32 rng(21, spec.p);
    std::vector<double> xs(1000000);
    for (auto& x : xs) x = prodgengamma_sample(rng, spec);
    for (int r = 1; r <= 4; ++r) {
      const auto est = testing::power_mean_se(xs, r);
      CHECK(std::abs(est.mean - prodgengamma_moment(r, spec)) <= 4 * est.se);
    }
    const auto est = testing::mean_se(xs);
    CHECK(std::abs(est.mean - prodgengamma_moment(1, spec)) <= 3 * est.se);
  }
}

TEST_CASE("tabulated cdf for one gengamma factor") {
  const ProdGenGammaCdf cdf(ProdGenGammaSpec(2, 1, 1, 1));
  // Beta(1, 1) x GenGamma(4, 3) is GenGamma(1, 3).
  for (double x = 0.02; x < 2.5; x += 0.03) {
    CHECK(std::abs(cdf(x) - gengamma_cdf(x, {1, 3})) <= 5e-6);
    CHECK(std::abs(cdf.exact(x) - gengamma_cdf(x, {1, 3})) <= 1e-9);
  }
  CHECK(cdf(0.0) == 0.0);
  CHECK(cdf(100.0) == 1.0);
}

TEST_CASE("tabulated cdf for a two-factor product") {
  const ProdGenGammaSpec spec(3, 2, 3, 2);
  const ProdGenGammaCdf cdf(spec);
  // Mean from the cdf, E X = int (1 - F).
  double mean = 0.0;
  const double h = 1e-3;
  for (double x = h / 2; x < 6.0; x += h) mean += (1.0 - cdf(x)) * h;
  CHECK(mean == doctest::Approx(prodgengamma_moment(1, spec)).epsilon(1e-4));

  Philox4x32 rng(5, 0);
  std::vector<double> xs(200000);
  for (auto& x : xs) x = prodgengamma_sample(rng, spec);
  std::sort(xs.begin(), xs.end());
  double d = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double f = cdf(xs[i]);
    d = std::max({d, std::abs(f - static_cast<double>(i) / xs.size()), std::abs(f - static_cast<double>(i + 1) / xs.size())});
  }
  CHECK(d < 1.95 / std::sqrt(static_cast<double>(xs.size())));
}

TEST_CASE("interpolated table tracks direct quadrature") {
  // p = 2, l = 2, b0 = 1, w0 = 1: Beta(1, 1) GenGamma(4, 4) GenGamma(5, 4).
  const ProdGenGammaSpec spec(2, 2, 1, 1);
  const ProdGenGammaCdf cdf(spec);
  for (double x : {0.3, 0.6, 0.9, 1.2}) CHECK(cdf(x) == doctest::Approx(cdf.exact(x)).epsilon(1e-5));
}
