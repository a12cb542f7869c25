#include "polyurn/urn.hpp"

#include <algorithm>

#include <json.hpp>

#include "polyurn/errors.hpp"

namespace polyurn {

UrnSpec::UrnSpec(std::vector<ReplacementMatrix> matrices, std::uint64_t b0, std::uint64_t w0)
    : matrices_(std::move(matrices)), b0_(b0), w0_(w0) {
  if (matrices_.empty()) throw InvalidParams("urn period must be at least 1");
  for (std::size_t i = 0; i < matrices_.size(); ++i) {
    if (!matrices_[i].balanced()) throw UnbalancedMatrix(i);
    period_increment_ += matrices_[i].increment();
  }
  if (b0_ == 0 && w0_ == 0) throw EmptyUrn();
}

std::uint64_t UrnSpec::sum_over_steps(std::uint64_t n,
                                      std::uint32_t (*pick)(const ReplacementMatrix&)) const noexcept {
  const std::uint64_t p = matrices_.size();
  std::uint64_t per_period = 0;
  for (const auto& m : matrices_) per_period += pick(m);
  std::uint64_t sum = (n / p) * per_period;
  for (std::uint64_t i = 0; i < n % p; ++i) sum += pick(matrices_[i]);
  return sum;
}

std::uint64_t UrnSpec::total_balls(std::uint64_t n) const noexcept {
  return b0_ + w0_ + sum_over_steps(n, [](const ReplacementMatrix& m) { return m.increment(); });
}

std::uint64_t UrnSpec::min_black(std::uint64_t n) const noexcept {
  return b0_ + sum_over_steps(n, [](const ReplacementMatrix& m) { return std::min(m.a, m.c); });
}

std::uint64_t UrnSpec::max_black(std::uint64_t n) const noexcept {
  return b0_ + sum_over_steps(n, [](const ReplacementMatrix& m) { return std::max(m.a, m.c); });
}

UrnSpec make_urn_spec(std::size_t p, std::vector<ReplacementMatrix> matrices,
                      std::uint64_t b0, std::uint64_t w0) {
  if (p == 0) throw InvalidParams("urn period must be at least 1");
  if (p != matrices.size()) {
    throw InvalidParams("period " + std::to_string(p) + " does not match " +
                        std::to_string(matrices.size()) + " replacement matrices");
  }
  return UrnSpec(std::move(matrices), b0, w0);
}

UrnSpec YoungPolyaFamily::to_spec() const {
  if (p == 0 || l == 0) throw InvalidParams("Young-Polya family needs p >= 1 and l >= 1");
  std::vector<ReplacementMatrix> ms(p, ReplacementMatrix{1, 0, 0, 1});
  ms.back() = ReplacementMatrix{1, l, 0, 1 + l};
  return make_urn_spec(p, std::move(ms), b0, w0);
}

std::optional<YoungPolyaFamily> as_young_polya(const UrnSpec& spec) {
  const auto& ms = spec.matrices();
  const ReplacementMatrix& last = ms.back();
  if (last.a != 1 || last.c != 0 || last.b == 0 || last.d != 1 + last.b) return std::nullopt;
  for (std::size_t i = 0; i + 1 < ms.size(); ++i) {
    if (ms[i] != ReplacementMatrix{1, 0, 0, 1}) return std::nullopt;
  }
  return YoungPolyaFamily{static_cast<std::uint32_t>(ms.size()), last.b, spec.b0(), spec.w0()};
}

std::string to_json(const UrnSpec& spec) {
  nlohmann::json j;
  j["p"] = spec.period();
  auto& arr = j["matrices"] = nlohmann::json::array();
  for (const auto& m : spec.matrices()) arr.push_back({m.a, m.b, m.c, m.d});
  j["b0"] = spec.b0();
  j["w0"] = spec.w0();
  return j.dump();
}

UrnSpec urn_spec_from_json(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidParams(std::string("urn spec is not valid JSON: ") + e.what());
  }
  try {
    std::vector<ReplacementMatrix> ms;
    for (const auto& row : j.at("matrices")) {
      if (!row.is_array() || row.size() != 4) {
        throw InvalidParams("each replacement matrix must be [a, b, c, d]");
      }
      for (const auto& v : row) {
        if (!v.is_number_unsigned()) throw InvalidParams("matrix entries must be non-negative integers");
      }
      ms.push_back({row[0].get<std::uint32_t>(), row[1].get<std::uint32_t>(),
                    row[2].get<std::uint32_t>(), row[3].get<std::uint32_t>()});
    }
    const auto p = j.contains("p") ? j.at("p").get<std::size_t>() : ms.size();
    return make_urn_spec(p, std::move(ms), j.at("b0").get<std::uint64_t>(),
                         j.at("w0").get<std::uint64_t>());
  } catch (const nlohmann::json::exception& e) {
    throw InvalidParams(std::string("malformed urn spec: ") + e.what());
  }
}

}  // namespace polyurn
