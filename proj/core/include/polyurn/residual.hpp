#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "polyurn/history.hpp"

namespace polyurn {

// Coefficient-level check of the differential equations satisfied by the
// period-2 Young–Pólya urn (b0 = w0 = 1). With H_n(x) = sum_k h_{n,k} x^k and
// H(x, z) = sum_n H_n(x) z^n / n!, split into even and odd parts:
//
//   d/dz H_e = x(x-1) d/dx H_o + 3/2 z d/dz H_o + 3/2 H_o
//   d/dz H_o = x(x-1) d/dx H_e + 3/2 z d/dz H_e + 2 H_e
//   (9z² - 4) H_e'' + 39 z H_e' + 24 H_e = 0    at x = 1
//   (9z² - 4) H_o'' + 39 z H_o' + 21 H_o = 0    at x = 1
//
// Every coefficient of z^n/n! x^k is an integer identity in the h_{n,k}
// (scaled by 2 for the first pair and kept as is for the ODEs).
enum class UrnEquation { kPdeEven, kPdeOdd, kOdeEven, kOdeOdd };

std::string to_string(UrnEquation eq);

struct ResidualOffender {
  UrnEquation equation;
  std::uint64_t n;  // row produced by the equation
  std::int64_t k;   // power of x; -1 for the x = 1 ODEs
  mpz_class residual;
};

struct EquationResidual {
  UrnEquation equation;
  mpz_class max_abs;
  std::uint64_t coefficients_checked = 0;
};

struct ResidualReport {
  std::uint64_t n_max = 0;
  std::vector<EquationResidual> equations;
  std::optional<ResidualOffender> first_offender;

  bool zero() const noexcept { return !first_offender.has_value(); }
  mpz_class max_abs() const;
  std::string to_json() const;
};

// Checks all coefficients with row index <= n_max (n_max <= table.n_max()).
ResidualReport pde_residual(const HistoryTable& table, std::uint64_t n_max);

// Same check; throws NonZeroResidual at the first offending (n, k).
void require_zero_residual(const HistoryTable& table, std::uint64_t n_max);

}  // namespace polyurn
