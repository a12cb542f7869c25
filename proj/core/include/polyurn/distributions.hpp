#pragma once

#include <cstdint>

#include "polyurn/random.hpp"

namespace polyurn {

// Generalized Gamma law with density  beta x^{alpha-1} exp(-x^beta) / Γ(alpha/beta)
// on (0, inf). GenGamma(alpha, 1) is the Gamma(alpha) law, and
// GenGamma(alpha, beta) is the law of G^{1/beta} with G ~ Gamma(alpha/beta).
struct GenGammaParams {
  double alpha;
  double beta;

  GenGammaParams(double alpha, double beta);
};

double gengamma_pdf(double x, const GenGammaParams& params);
double gengamma_log_pdf(double x, const GenGammaParams& params);
// P(X <= x) = P(alpha/beta, x^beta), regularized lower incomplete Gamma.
double gengamma_cdf(double x, const GenGammaParams& params);
// E(X^r) = Γ((alpha + r)/beta) / Γ(alpha/beta), r >= 0.
double gengamma_moment(double r, const GenGammaParams& params);
double gengamma_sample(Philox4x32& rng, const GenGammaParams& params);

// Shape-only Gamma(shape) variate, exact for every shape > 0.
//
// Marsaglia & Tsang's squeeze for shape >= 1; for shape < 1 a Gamma(shape+1)
// draw is scaled by U^{1/shape}.
double gamma_sample(Philox4x32& rng, double shape);
double gamma_pdf(double x, double shape);

// Standard normal variate (polar method, no cached second value).
double normal_sample(Philox4x32& rng);

double beta_pdf(double x, double a, double b);
double beta_cdf(double x, double a, double b);
double beta_moment(double r, double a, double b);
double beta_sample(Philox4x32& rng, double a, double b);

}  // namespace polyurn
