#include "polyurn/distributions.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <boost/math/special_functions/beta.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include "polyurn/errors.hpp"

namespace polyurn {

namespace {

void require_positive(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw InvalidParams(std::string(name) + " must be a positive finite number, got " + std::to_string(v));
  }
}

}  // namespace

GenGammaParams::GenGammaParams(double a, double b) : alpha(a), beta(b) {
  require_positive(alpha, "alpha");
  require_positive(beta, "beta");
}

double gengamma_log_pdf(double x, const GenGammaParams& g) {
  if (x <= 0.0) return -std::numeric_limits<double>::infinity();
  return std::log(g.beta) + (g.alpha - 1.0) * std::log(x) - std::pow(x, g.beta) -
         std::lgamma(g.alpha / g.beta);
}

double gengamma_pdf(double x, const GenGammaParams& g) {
  if (x <= 0.0) return 0.0;
  return std::exp(gengamma_log_pdf(x, g));
}

double gengamma_cdf(double x, const GenGammaParams& g) {
  if (x <= 0.0) return 0.0;
  const double t = std::pow(x, g.beta);
  if (!std::isfinite(t)) return 1.0;
  return boost::math::gamma_p(g.alpha / g.beta, t);
}

double gengamma_moment(double r, const GenGammaParams& g) {
  if (r < 0.0) throw InvalidParams("moment order must be non-negative");
  if (r == 0.0) return 1.0;
  return std::exp(std::lgamma((g.alpha + r) / g.beta) - std::lgamma(g.alpha / g.beta));
}

double gengamma_sample(Philox4x32& rng, const GenGammaParams& g) {
  const double gamma = gamma_sample(rng, g.alpha / g.beta);
  return g.beta == 1.0 ? gamma : std::pow(gamma, 1.0 / g.beta);
}

double normal_sample(Philox4x32& rng) {
  for (;;) {
    const double u = 2.0 * rng.uniform() - 1.0;
    const double v = 2.0 * rng.uniform() - 1.0;
    const double s = u * u + v * v;
    if (s > 0.0 && s < 1.0) return u * std::sqrt(-2.0 * std::log(s) / s);
  }
}

double gamma_sample(Philox4x32& rng, double shape) {
  require_positive(shape, "gamma shape");
  if (shape < 1.0) {
    // Gamma(a) = Gamma(a + 1) * U^{1/a}; done in log space so tiny shapes
    // don't underflow to exactly zero too early.
    const double g = gamma_sample(rng, shape + 1.0);
    return std::exp(std::log(g) + std::log(rng.uniform_open()) / shape);
  }
  const double d = shape - 1.0 / 3.0;
  const double c = 1.0 / std::sqrt(9.0 * d);
  for (;;) {
    double x;
    double v;
    do {
      x = normal_sample(rng);
      v = 1.0 + c * x;
    } while (v <= 0.0);
    v = v * v * v;
    const double u = rng.uniform_open();
    const double x2 = x * x;
    if (u < 1.0 - 0.0331 * x2 * x2) return d * v;
    if (std::log(u) < 0.5 * x2 + d * (1.0 - v + std::log(v))) return d * v;
  }
}

double gamma_pdf(double x, double shape) {
  require_positive(shape, "gamma shape");
  if (x <= 0.0) return 0.0;
  return std::exp((shape - 1.0) * std::log(x) - x - std::lgamma(shape));
}

double beta_pdf(double x, double a, double b) {
  require_positive(a, "beta a");
  require_positive(b, "beta b");
  if (x < 0.0 || x > 1.0) return 0.0;
  if ((x == 0.0 && a != 1.0) || (x == 1.0 && b != 1.0)) {
    const bool blows_up = (x == 0.0) ? a < 1.0 : b < 1.0;
    return blows_up ? std::numeric_limits<double>::infinity() : 0.0;
  }
  double log_pdf = std::lgamma(a + b) - std::lgamma(a) - std::lgamma(b);
  if (a != 1.0) log_pdf += (a - 1.0) * std::log(x);
  if (b != 1.0) log_pdf += (b - 1.0) * std::log1p(-x);
  return std::exp(log_pdf);
}

double beta_cdf(double x, double a, double b) {
  require_positive(a, "beta a");
  require_positive(b, "beta b");
  if (x <= 0.0) return 0.0;
  if (x >= 1.0) return 1.0;
  return boost::math::ibeta(a, b, x);
}

double beta_moment(double r, double a, double b) {
  require_positive(a, "beta a");
  require_positive(b, "beta b");
  if (r < 0.0) throw InvalidParams("moment order must be non-negative");
  return std::exp(std::lgamma(a + r) + std::lgamma(a + b) - std::lgamma(a) - std::lgamma(a + b + r));
}

double beta_sample(Philox4x32& rng, double a, double b) {
  require_positive(a, "beta a");
  require_positive(b, "beta b");
  const double x = gamma_sample(rng, a);
  const double y = gamma_sample(rng, b);
  return x / (x + y);
}

}  // namespace polyurn
