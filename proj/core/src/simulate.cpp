#include "polyurn/simulate.hpp"

#include <cmath>
#include <cstdio>
#include <ostream>

#include <json.hpp>

#include "polyurn/errors.hpp"

namespace polyurn {

namespace {

// Draws are identical between the two entry points; `path` may be null.
std::uint64_t run(const UrnSpec& spec, std::uint64_t n, Philox4x32& rng, std::vector<std::uint64_t>* path) {
  const auto& ms = spec.matrices();
  const std::size_t p = ms.size();
  std::uint64_t black = spec.b0();
  std::uint64_t total = spec.b0() + spec.w0();
  if (path) {
    path->reserve(n + 1);
    path->push_back(black);
  }
  std::size_t m = 0;
  for (std::uint64_t i = 0; i < n; ++i) {
    const ReplacementMatrix& mat = ms[m];
    black += (rng.below(total) < black) ? mat.a : mat.c;
    total += mat.a + mat.b;
    if (++m == p) m = 0;
    if (path) path->push_back(black);
  }
  return black;
}

}  // namespace

Trajectory simulate_urn(const UrnSpec& spec, std::uint64_t n, Philox4x32& rng, bool keep_path) {
  Trajectory t;
  t.n = n;
  t.final_black = run(spec, n, rng, keep_path ? &t.black_counts : nullptr);
  return t;
}

std::uint64_t simulate_final_black(const UrnSpec& spec, std::uint64_t n, Philox4x32& rng) {
  return run(spec, n, rng, nullptr);
}

double normalize(double value, std::uint64_t n, std::uint32_t p, std::uint32_t l) {
  if (n == 0) throw InvalidParams("normalization needs n >= 1");
  if (p == 0 || l == 0) throw InvalidParams("normalization needs p >= 1 and l >= 1");
  const double delta = static_cast<double>(p) / static_cast<double>(p + l);
  return std::pow(static_cast<double>(p), delta) / static_cast<double>(p + l) * value /
         std::pow(static_cast<double>(n), delta);
}

double normalize(std::uint64_t final_black, std::uint64_t n, const YoungPolyaFamily& family) {
  return normalize(static_cast<double>(final_black), n, family.p, family.l);
}

void EmpiricalSample::write_csv(std::ostream& out) const {
  out << "rep,final_black,normalized\n";
  const bool have_norm = normalized.size() == final_black.size();
  char buf[32];
  for (std::size_t j = 0; j < final_black.size(); ++j) {
    out << j << ',' << final_black[j] << ',';
    if (have_norm) {
      std::snprintf(buf, sizeof buf, "%.17g", normalized[j]);
      out << buf;
    }
    out << '\n';
  }
}

std::string EmpiricalSample::metadata_json() const {
  nlohmann::json j;
  j["spec"] = nlohmann::json::parse(to_json(spec));
  j["n"] = n;
  j["reps"] = reps;
  j["seed"] = seed;
  return j.dump(2);
}

EmpiricalSample run_experiment(const UrnSpec& spec, std::uint64_t n, std::uint64_t reps,
                               std::uint64_t seed, unsigned workers) {
  if (reps == 0) throw InvalidParams("reps must be at least 1");
  if (workers == 0) throw InvalidParams("workers must be at least 1");
  EmpiricalSample s{spec, n, reps, seed, std::vector<std::uint64_t>(reps), {}};
  parallel_for_index(reps, workers, [&](std::uint64_t j) {
    Philox4x32 rng = make_stream(seed, j);
    s.final_black[j] = simulate_final_black(spec, n, rng);
  });
  if (const auto family = as_young_polya(spec); family && n >= 1) {
    s.normalized.reserve(reps);
    for (const auto b : s.final_black) s.normalized.push_back(normalize(b, n, *family));
  }
  return s;
}

}  // namespace polyurn
