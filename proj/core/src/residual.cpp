#include "polyurn/residual.hpp"

#include <algorithm>

#include <json.hpp>

#include "polyurn/errors.hpp"

namespace polyurn {

std::string to_string(UrnEquation eq) {
  switch (eq) {
    case UrnEquation::kPdeEven: return "pde_even";
    case UrnEquation::kPdeOdd: return "pde_odd";
    case UrnEquation::kOdeEven: return "ode_even";
    case UrnEquation::kOdeOdd: return "ode_odd";
  }
  return "unknown";
}

mpz_class ResidualReport::max_abs() const {
  mpz_class m = 0;
  for (const auto& e : equations) m = std::max(m, e.max_abs);
  return m;
}

std::string ResidualReport::to_json() const {
  nlohmann::json j;
  j["n_max"] = n_max;
  j["max_abs_residual"] = max_abs().get_str();
  j["zero"] = zero();
  auto& eqs = j["equations"] = nlohmann::json::array();
  for (const auto& e : equations) {
    eqs.push_back({{"equation", to_string(e.equation)},
                   {"max_abs_residual", e.max_abs.get_str()},
                   {"coefficients_checked", e.coefficients_checked}});
  }
  if (first_offender) {
    j["first_offender"] = {{"equation", to_string(first_offender->equation)},
                           {"n", first_offender->n},
                           {"k", first_offender->k},
                           {"residual", first_offender->residual.get_str()}};
  } else {
    j["first_offender"] = nullptr;
  }
  return j.dump(2);
}

namespace {

class Tracker {
 public:
  explicit Tracker(ResidualReport& report) : report_(report) {
    for (auto eq : {UrnEquation::kPdeEven, UrnEquation::kPdeOdd, UrnEquation::kOdeEven,
                    UrnEquation::kOdeOdd}) {
      report_.equations.push_back({eq, 0, 0});
    }
  }

  void record(UrnEquation eq, std::uint64_t n, std::int64_t k, const mpz_class& residual) {
    auto& slot = report_.equations[static_cast<std::size_t>(eq)];
    ++slot.coefficients_checked;
    const mpz_class a = abs(residual);
    if (a > slot.max_abs) slot.max_abs = a;
    if (a != 0 && !report_.first_offender) report_.first_offender = ResidualOffender{eq, n, k, residual};
  }

 private:
  ResidualReport& report_;
};

}  // namespace

ResidualReport pde_residual(const HistoryTable& table, std::uint64_t n_max) {
  const auto family = as_young_polya(table.spec());
  if (!family || *family != young_polya()) {
    throw InvalidParams("residual checks apply to the period-2 Young-Polya urn with b0 = w0 = 1");
  }
  if (n_max > table.n_max()) {
    throw InvalidParams("residual check up to n=" + std::to_string(n_max) + " but table stops at n=" +
                        std::to_string(table.n_max()));
  }

  ResidualReport report;
  report.n_max = n_max;
  Tracker tracker(report);

  std::vector<mpz_class> totals(n_max + 1);
  for (std::uint64_t n = 0; n <= n_max; ++n) totals[n] = table.total(n);

  mpz_class rhs;
  for (std::uint64_t n = 1; n <= n_max; ++n) {
    // Row n from row m = n - 1: 2 h_{n,k} = 2[(k-1) h_{m,k-1} - k h_{m,k}] + c_m h_{m,k},
    // c_m = 3(m+1) for odd m (even equation) and 3m + 4 for even m (odd equation).
    const std::uint64_t m = n - 1;
    const bool produces_even = (n % 2 == 0);
    const unsigned long c = produces_even ? 3 * (m + 1) : 3 * m + 4;
    const UrnEquation eq = produces_even ? UrnEquation::kPdeEven : UrnEquation::kPdeOdd;
    const HistoryRow& prev = table.row(m);
    const HistoryRow& cur = table.row(n);
    const std::uint64_t k_lo = std::min(prev.k_min, cur.k_min);
    const std::uint64_t k_hi = std::max(prev.k_max() + 1, cur.k_max());
    for (std::uint64_t k = k_lo; k <= k_hi; ++k) {
      const mpz_class h_k = prev.at(k);
      rhs = 2 * ((k > 0 ? mpz_class(prev.at(k - 1) * static_cast<unsigned long>(k - 1)) : mpz_class(0)) -
                 h_k * static_cast<unsigned long>(k));
      rhs += h_k * c;
      tracker.record(eq, n, static_cast<std::int64_t>(k), 2 * cur.at(k) - rhs);
    }

    // x = 1 ODEs: 4 h_{n} = (9m² + 30m + 24 or 21) h_{m}, m = n - 2, same parity as n.
    if (n >= 2) {
      const std::uint64_t mm = n - 2;
      const bool even = (n % 2 == 0);
      const unsigned long coeff = 9 * mm * mm + 30 * mm + (even ? 24 : 21);
      tracker.record(even ? UrnEquation::kOdeEven : UrnEquation::kOdeOdd, n, -1,
                     4 * totals[n] - totals[mm] * coeff);
    }
  }
  return report;
}

void require_zero_residual(const HistoryTable& table, std::uint64_t n_max) {
  const ResidualReport report = pde_residual(table, n_max);
  if (const auto& off = report.first_offender) {
    throw NonZeroResidual(to_string(off->equation), off->n, off->k);
  }
}

}  // namespace polyurn
