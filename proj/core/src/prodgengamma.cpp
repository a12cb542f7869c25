#include "polyurn/prodgengamma.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

// Boost 1.74's pchip calls isnan unqualified.
#include <math.h>

#include <boost/math/interpolators/pchip.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "polyurn/errors.hpp"

namespace polyurn {

namespace {

constexpr double kTail = 1e-15;

// Range of log X for X ~ GenGamma carrying all but ~2e-15 of the mass.
std::pair<double, double> log_range(const GenGammaParams& g) {
  const double shape = g.alpha / g.beta;
  const double lo = boost::math::gamma_p_inv(shape, kTail);
  const double hi = boost::math::gamma_q_inv(shape, kTail);
  return {std::log(lo) / g.beta, std::log(hi) / g.beta};
}

// Density of log X at t.
double log_density(double t, const GenGammaParams& g) {
  const double x = std::exp(t);
  return std::exp(gengamma_log_pdf(x, g) + t);
}

// Monotone cubic interpolant in log x over a uniform log grid. Below the grid
// the CDF is continued as C x^tail, matched at the edge.
std::function<double(double)> log_interpolant(std::vector<double> table, double log_lo, double log_hi,
                                              double tail) {
  const double step = (log_hi - log_lo) / static_cast<double>(table.size() - 1);
  std::vector<double> knots(table.size());
  for (std::size_t i = 0; i < knots.size(); ++i) knots[i] = log_lo + step * static_cast<double>(i);
  knots.back() = log_hi;
  const double front = table.front();
  boost::math::interpolators::pchip<std::vector<double>> spline(std::move(knots), std::move(table));
  return [spline = std::move(spline), front, log_lo, log_hi, tail](double x) {
    if (x <= 0.0) return 0.0;
    const double lx = std::log(x);
    if (lx >= log_hi) return 1.0;
    if (lx <= log_lo) return front * std::exp(tail * (lx - log_lo));
    return std::clamp(spline(lx), 0.0, 1.0);
  };
}

template <class F>
double integrate(F f, double a, double b) {
  return boost::math::quadrature::gauss_kronrod<double, 31>::integrate(f, a, b, 12, 1e-12);
}

}  // namespace

ProdGenGammaSpec::ProdGenGammaSpec(std::uint32_t p_, std::uint32_t l_, double b0_, double w0_)
    : p(p_), l(l_), b0(b0_), w0(w0_) {
  if (p == 0 || l == 0) throw InvalidParams("ProdGenGamma needs p >= 1 and l >= 1");
  if (!(b0 > 0.0) || !(w0 > 0.0)) throw InvalidParams("ProdGenGamma needs b0 > 0 and w0 > 0");
}

ProdGenGammaSpec ProdGenGammaSpec::from_family(const YoungPolyaFamily& f) {
  return ProdGenGammaSpec(f.p, f.l, static_cast<double>(f.b0), static_cast<double>(f.w0));
}

GenGammaParams ProdGenGammaSpec::factor(std::uint32_t i) const {
  return GenGammaParams(b0 + w0 + p + i, static_cast<double>(p + l));
}

double prodgengamma_moment(double r, const ProdGenGammaSpec& spec) {
  if (r < 0.0) throw InvalidParams("moment order must be non-negative");
  if (r == 0.0) return 1.0;
  double log_m = std::lgamma(spec.b0 + r) + std::lgamma(spec.b0 + spec.w0) - std::lgamma(spec.b0) -
                 std::lgamma(spec.b0 + spec.w0 + r);
  const double pl = spec.p + spec.l;
  for (std::uint32_t i = 0; i < spec.l; ++i) {
    const double base = spec.b0 + spec.w0 + spec.p + i;
    log_m += std::lgamma((base + r) / pl) - std::lgamma(base / pl);
  }
  return std::exp(log_m);
}

double prodgengamma_sample(Philox4x32& rng, const ProdGenGammaSpec& spec) {
  double x = beta_sample(rng, spec.b0, spec.w0);
  for (std::uint32_t i = 0; i < spec.l; ++i) x *= gengamma_sample(rng, spec.factor(i));
  return x;
}

ProdGenGammaCdf::ProdGenGammaCdf(const ProdGenGammaSpec& spec, std::size_t grid_points) : spec_(spec) {
  if (grid_points < 16) throw InvalidParams("ProdGenGamma CDF grid needs at least 16 points");

  double sum_lo = 0.0;
  double sum_hi = 0.0;
  for (std::uint32_t i = 0; i < spec_.l; ++i) {
    const auto [lo, hi] = log_range(spec_.factor(i));
    sum_lo += lo;
    sum_hi += hi;
  }

  if (spec_.l >= 2) {
    // Stage j holds the CDF of the first j + 1 factors on a common grid.
    const double step = (sum_hi - sum_lo) / static_cast<double>(grid_points - 1);
    std::vector<double> stage(grid_points);
    const GenGammaParams first = spec_.factor(0);
    for (std::size_t t = 0; t < grid_points; ++t) {
      stage[t] = gengamma_cdf(std::exp(sum_lo + step * static_cast<double>(t)), first);
    }
    for (std::uint32_t j = 1; j < spec_.l; ++j) {
      const GenGammaParams g = spec_.factor(j);
      const auto [glo, ghi] = log_range(g);
      const auto previous = log_interpolant(stage, sum_lo, sum_hi, first.alpha);
      std::vector<double> next(grid_points);
      for (std::size_t t = 0; t < grid_points; ++t) {
        const double lx = sum_lo + step * static_cast<double>(t);
        next[t] = integrate(
            [&](double s) {
              return log_density(s, g) * previous(std::exp(lx - s));
            },
            glo, ghi);
      }
      stage.swap(next);
    }
    product_cdf_ = log_interpolant(std::move(stage), sum_lo, sum_hi, first.alpha);
  }

  // Beta(b0, w0) lies in (0, 1), so log X <= log of the product's upper end;
  // at the low end go far enough that F(x) is below ~1e-9.
  log_hi_ = sum_hi;
  log_lo_ = sum_lo + std::log(1e-9) / std::max(spec_.b0, 1.0);
  std::vector<double> table(grid_points);
  const double step = (log_hi_ - log_lo_) / static_cast<double>(grid_points - 1);
  for (std::size_t t = 0; t < grid_points; ++t) table[t] = exact(std::exp(log_lo_ + step * static_cast<double>(t)));
  // Quadrature noise can break monotonicity at the 1e-13 level.
  for (std::size_t t = 1; t < grid_points; ++t) table[t] = std::clamp(table[t], table[t - 1], 1.0);
  cdf_ = log_interpolant(std::move(table), log_lo_, log_hi_, spec_.b0);
}

double ProdGenGammaCdf::factor_product_cdf(double x) const {
  if (spec_.l == 1) return gengamma_cdf(x, spec_.factor(0));
  return product_cdf_(x);
}

double ProdGenGammaCdf::exact(double x) const {
  if (x <= 0.0) return 0.0;
  // Boost declares integrate() non-const; the object also caches abscissae lazily.
  thread_local boost::math::quadrature::tanh_sinh<double> quad;
  // P(U V <= x) = E[F_V(x / U)], U ~ Beta(b0, w0).
  return quad.integrate(
      [&](double u) -> double {
        const double density = beta_pdf(u, spec_.b0, spec_.w0);
        if (density == 0.0 || !std::isfinite(density)) return 0.0;
        return density * factor_product_cdf(x / u);
      },
      0.0, 1.0);
}

double ProdGenGammaCdf::operator()(double x) const { return cdf_(x); }

}  // namespace polyurn
