#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "polyurn/distributions.hpp"
#include "polyurn/urn.hpp"

namespace polyurn {

// Beta(b0, w0) * prod_{i=0}^{l-1} GenGamma(b0 + w0 + p + i, p + l), all
// factors independent. This is the limit law of p^δ/(p+l) B_n / n^δ for the
// Young–Pólya urn of period p and parameter l, δ = p/(p+l).
struct ProdGenGammaSpec {
  std::uint32_t p;
  std::uint32_t l;
  double b0;
  double w0;

  ProdGenGammaSpec(std::uint32_t p, std::uint32_t l, double b0, double w0);
  static ProdGenGammaSpec from_family(const YoungPolyaFamily& family);

  double delta() const noexcept { return static_cast<double>(p) / static_cast<double>(p + l); }
  GenGammaParams factor(std::uint32_t i) const;
};

double prodgengamma_moment(double r, const ProdGenGammaSpec& spec);
double prodgengamma_sample(Philox4x32& rng, const ProdGenGammaSpec& spec);

// Distribution function of ProdGenGamma, tabulated once on a logarithmic grid
// from nested quadrature (each stage integrates one more independent factor)
// and interpolated in log x by monotone cubic Hermite afterwards. The
// default grid keeps the table within a few 1e-6 of direct quadrature.
class ProdGenGammaCdf {
 public:
  explicit ProdGenGammaCdf(const ProdGenGammaSpec& spec, std::size_t grid_points = 1024);

  double operator()(double x) const;
  // Direct quadrature without the table; slow, used to validate it.
  double exact(double x) const;

  const ProdGenGammaSpec& spec() const noexcept { return spec_; }

 private:
  double factor_product_cdf(double x) const;  // CDF of the GenGamma product alone

  ProdGenGammaSpec spec_;
  double log_lo_ = 0.0;
  double log_hi_ = 0.0;
  // Tabulated CDF of the GenGamma product (only when l >= 2).
  std::function<double(double)> product_cdf_;
  std::function<double(double)> cdf_;
};

}  // namespace polyurn
