#include "commands.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

#include <polyurn/closed_forms.hpp>
#include <polyurn/distributions.hpp>
#include <polyurn/errors.hpp>
#include <polyurn/history.hpp>
#include <polyurn/prodgengamma.hpp>
#include <polyurn/residual.hpp>
#include <polyurn/simulate.hpp>
#include <polyurn/stats.hpp>
#include <polyurn/tableau.hpp>
#include <polyurn/tree.hpp>

#include "output.hpp"

namespace polyurn::cli {

namespace {

using nlohmann::json;
namespace yp = polyurn::young_polya_2;

// Fixed chunking of the tableau replications: chunk c draws from stream
// (seed, c), so results do not depend on the worker count.
constexpr std::uint64_t kTableauChunks = 64;

std::string format(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

struct ResolvedUrn {
  UrnSpec spec;
  std::optional<YoungPolyaFamily> family;
  std::string source;
};

ResolvedUrn resolve_urn(const RunConfig& c) {
  const int sources = int(c.young_polya) + int(c.spec_file.has_value()) + int(c.p.has_value() || c.l.has_value());
  if (sources != 1) throw UsageError("choose exactly one urn: --young-polya, --spec FILE, or --p/--l [--b0 --w0]");
  if (c.young_polya) {
    if (c.b0 || c.w0) throw UsageError("--young-polya fixes b0 = w0 = 1; use --p 2 --l 1 --b0 .. --w0 .. instead");
    return {young_polya().to_spec(), young_polya(), "young-polya"};
  }
  if (c.spec_file) {
    std::ifstream in(*c.spec_file);
    if (!in) throw UsageError("cannot read spec file " + *c.spec_file);
    std::stringstream text;
    text << in.rdbuf();
    UrnSpec spec = urn_spec_from_json(text.str());
    return {spec, as_young_polya(spec), *c.spec_file};
  }
  if (!c.p || !c.l) throw UsageError("--p and --l go together");
  const YoungPolyaFamily fam{*c.p, *c.l, c.b0.value_or(1), c.w0.value_or(1)};
  return {fam.to_spec(), fam, "flags"};
}

std::uint64_t require(const std::optional<std::uint64_t>& v, const char* flag, const char* cmd) {
  if (!v) throw UsageError(std::string(cmd) + " needs " + flag);
  return *v;
}

json config_json(const RunConfig& c) {
  json j;
  j["subcommand"] = c.subcommand;
  j["argv"] = c.argv;
  auto opt = [&](const char* key, const auto& v) {
    if (v) j[key] = *v;
  };
  opt("n", c.n);
  opt("n_max", c.n_max);
  opt("reps", c.reps);
  opt("seed", c.seed);
  opt("ks_max", c.ks_max);
  opt("moment_rel_tol", c.moment_rel_tol);
  j["workers"] = c.workers;
  j["r_max"] = c.r_max;
  if (c.subcommand == "tableau") j["exact"] = c.exact;
  if (c.subcommand == "enumerate") j["budget_mb"] = c.budget_mb;
  return j;
}

// Writes metadata.json, prints a summary, and maps verdicts to the exit code.
int finish(const RunConfig& c, const RunOutput& out, json meta, const Verdicts& verdicts,
           std::chrono::steady_clock::time_point started) {
  meta["tool"] = "polyurn";
  meta["version"] = POLYURN_VERSION;
  meta["config"] = config_json(c);
  meta["outputs"] = out.files();
  meta["verdicts"] = verdicts.to_json();
  meta["pass"] = verdicts.all_pass();
  meta["elapsed_seconds"] = std::chrono::duration<double>(std::chrono::steady_clock::now() - started).count();
  out.write_json("metadata.json", meta);
  for (const auto& [name, ok] : verdicts.flags) std::cout << (ok ? "PASS " : "FAIL ") << name << '\n';
  std::cout << "outputs in " << out.dir().string() << '\n';
  return verdicts.all_pass() ? 0 : 1;
}

// Rough memory of an exact table: each row holds its k-range of integers of
// about log2(h_n) bits.
double estimate_dp_megabytes(const UrnSpec& spec, std::uint64_t n_max) {
  double log2_h = 0.0, bytes = 0.0;
  for (std::uint64_t n = 0; n <= n_max; ++n) {
    const auto entries = static_cast<double>(spec.max_black(n) - spec.min_black(n) + 1);
    bytes += entries * (log2_h / 8.0 + 32.0);
    log2_h += std::log2(static_cast<double>(spec.total_balls(n)));
  }
  return bytes / (1024.0 * 1024.0);
}

// Decimal rendering of exp(log_value) that does not overflow.
std::string from_log(long double log_value) {
  const long double l10 = log_value / std::log(10.0L);
  const long double e = std::floor(l10);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17Lfe%+.0Lf", std::pow(10.0L, l10 - e), e);
  return buf;
}

long double log_of(const mpz_class& v) {
  long exp2 = 0;
  const double mant = mpz_get_d_2exp(&exp2, v.get_mpz_t());
  return std::log(static_cast<long double>(mant)) + static_cast<long double>(exp2) * std::log(2.0L);
}

json corner_pmf_json(const std::map<std::uint32_t, mpz_class>& counts) {
  json j = json::object();
  for (const auto& [x, c] : counts) j[std::to_string(x)] = c.get_str();
  return j;
}

}  // namespace

int cmd_enumerate(const RunConfig& c) {
  const auto started = std::chrono::steady_clock::now();
  const ResolvedUrn urn = resolve_urn(c);
  const std::uint64_t n_max = require(c.n_max, "--n-max", "enumerate");
  const double mb = estimate_dp_megabytes(urn.spec, n_max);
  if (mb > c.budget_mb) {
    throw UsageError(format("exact tables up to this --n-max need about %.0f MB", mb) +
                     format(" (budget %.0f MB); lower --n-max or raise --budget-mb", c.budget_mb));
  }

  RunOutput out(c.out_dir, c.force);
  for (const char* f : {"histories.csv", "totals.csv", "residuals.json", "metadata.json"}) out.declare(f);
  out.prepare();

  const HistoryTable table = exact_histories(urn.spec, n_max);
  {
    auto f = out.open("histories.csv");
    table.write_csv(f);
  }

  // Closed form: the Gamma expression for the period-2 urn, otherwise the
  // product of urn sizes (each history picks one ball per step).
  const bool yp2 = urn.family && *urn.family == young_polya();
  Verdicts verdicts;
  bool totals_ok = true;
  {
    auto f = out.open("totals.csv");
    f << "n,h_n,closed_form,rel_err\n";
    mpz_class product = 1;
    for (std::uint64_t n = 0; n <= n_max; ++n) {
      const mpz_class h = table.total(n);
      std::string closed;
      long double rel = 0.0L;
      if (yp2) {
        const long double lc = yp::log_history_count(n);
        closed = from_log(lc);
        rel = std::abs(std::expm1(lc - log_of(h)));
        totals_ok = totals_ok && rel <= 1e-12L;
      } else {
        closed = product.get_str();
        if (product != h) {
          rel = std::abs(std::expm1(log_of(product) - log_of(h)));
          totals_ok = false;
        }
      }
      char buf[40];
      std::snprintf(buf, sizeof buf, "%.3Le", rel);
      f << n << ',' << h.get_str() << ',' << closed << ',' << buf << '\n';
      product *= static_cast<unsigned long>(urn.spec.total_balls(n));
    }
  }
  verdicts.set("totals_match_closed_form", totals_ok);

  if (yp2) {
    const ResidualReport r = pde_residual(table, n_max);
    out.write_json("residuals.json", json::parse(r.to_json()));
    verdicts.set("residuals_zero", r.zero());
  } else {
    out.write_json("residuals.json", json{{"applicable", false},
                                          {"reason", "the differential equations cover the period-2 urn with b0 = w0 = 1"}});
  }

  json meta;
  meta["spec"] = json::parse(to_json(urn.spec));
  meta["spec_source"] = urn.source;
  meta["h_n_max"] = table.total(n_max).get_str();
  return finish(c, out, meta, verdicts, started);
}

int cmd_simulate(const RunConfig& c) {
  const auto started = std::chrono::steady_clock::now();
  const ResolvedUrn urn = resolve_urn(c);
  const std::uint64_t n = require(c.n, "--n", "simulate");
  const std::uint64_t reps = require(c.reps, "--reps", "simulate");
  const std::uint64_t seed = require(c.seed, "--seed", "simulate");
  if (reps == 0) throw UsageError("--reps must be at least 1");

  RunOutput out(c.out_dir, c.force);
  const bool compare_law = urn.family.has_value() && n >= 1;
  out.declare("sample.csv");
  if (compare_law) {
    out.declare("report.json");
    out.declare("moments.csv");
  }
  out.declare("metadata.json");
  out.prepare();

  const EmpiricalSample sample = run_experiment(urn.spec, n, reps, seed, c.workers);
  {
    auto f = out.open("sample.csv");
    sample.write_csv(f);
  }

  json meta = json::parse(sample.metadata_json());
  meta["spec_source"] = urn.source;
  meta["rng"] = {{"engine", "philox4x32-10"}, {"streams", "replication j uses stream (seed, j)"}};
  Verdicts verdicts;
  if (compare_law) {
    const YoungPolyaFamily fam = *urn.family;
    const ProdGenGammaSpec law = ProdGenGammaSpec::from_family(fam);
    std::string label = "ProdGenGamma(" + std::to_string(fam.p) + "," + std::to_string(fam.l) + "," +
                        std::to_string(fam.b0) + "," + std::to_string(fam.w0) + ")";
    std::function<double(double)> cdf;
    if (fam == young_polya()) {
      // Beta(1,1) x GenGamma(4,3) collapses to GenGamma(1,3); use its closed CDF.
      label = "GenGamma(1,3)";
      cdf = [](double x) { return gengamma_cdf(x, {1, 3}); };
    } else {
      cdf = [table = std::make_shared<ProdGenGammaCdf>(law)](double x) { return (*table)(x); };
    }
    ComparisonReport report = compare(
        sample.normalized, {urn.source, n, reps, seed}, label, c.r_max,
        [&](std::uint32_t r) { return prodgengamma_moment(r, law); }, cdf);
    const double ks_max = c.ks_max.value_or(0.02);
    report.verdicts["ks_distance_le_" + format("%g", ks_max)] = report.ks_distance <= ks_max;
    if (c.moment_rel_tol) {
      for (const auto& row : report.moments) {
        report.verdicts["moment_r" + std::to_string(row.r) + "_rel_err_le_" + format("%g", *c.moment_rel_tol)] =
            std::abs(row.empirical / row.analytic - 1.0) <= *c.moment_rel_tol;
      }
    }
    out.write_json("report.json", json::parse(report.to_json()));
    auto f = out.open("moments.csv");
    report.write_moments_csv(f);
    verdicts.merge(report.verdicts);
    std::cout << format("KS distance %.5f", report.ks_distance) << " vs " << label << '\n';
  }
  return finish(c, out, meta, verdicts, started);
}

int cmd_tableau(const RunConfig& c) {
  const auto started = std::chrono::steady_clock::now();
  if (!c.p || !c.l || !c.n) throw UsageError("tableau needs --p, --l and --n");
  if (c.young_polya || c.spec_file || c.b0 || c.w0) {
    throw UsageError("tableau takes the shape from --p, --l, --n only (the urn uses b0 = p, w0 = l)");
  }
  const std::uint32_t p = *c.p, l = *c.l;
  if (*c.n > 0xFFFFFFFFu) throw UsageError("--n is too large for a tableau");
  const auto n = static_cast<std::uint32_t>(*c.n);
  const bool sampling = c.reps.has_value();
  if (sampling && !c.seed) throw UsageError("tableau sampling needs --seed");
  if (sampling && *c.reps == 0) throw UsageError("--reps must be at least 1");
  if (!sampling && !c.exact) throw UsageError("nothing to do: pass --reps with --seed, and/or --exact");
  const TableauShape shape = make_shape(p, l, n);
  if (c.exact && shape.N() > kDefaultSytBound) {
    throw UsageError("--exact enumerates every tableau, and this shape has N = " + std::to_string(shape.N()) +
                     " cells (limit " + std::to_string(kDefaultSytBound) +
                     "); use a smaller --n, or sample with --reps and --seed instead");
  }

  RunOutput out(c.out_dir, c.force);
  if (sampling) {
    out.declare("sample.csv");
    out.declare("report.json");
    out.declare("moments.csv");
  }
  if (c.exact) {
    out.declare("corner_pmf.csv");
    out.declare("exact.json");
  }
  out.declare("metadata.json");
  out.prepare();

  json meta;
  meta["shape"] = {{"p", p}, {"l", l}, {"n", n}, {"N", shape.N()}, {"rows", shape.diagram.rows()}};
  Verdicts verdicts;

  if (c.exact) {
    json ex;
    const std::uint64_t count = enumerate_syt(shape.diagram, [](const Tableau&) {});
    const mpz_class hook = syt_count(shape.diagram);
    ex["tableaux"] = count;
    ex["hook_length_formula"] = hook.get_str();
    verdicts.set("enumeration_equals_hook_formula", mpz_class(static_cast<unsigned long>(count)) == hook);

    const auto corner = corner_entry_counts(shape.diagram);
    ex["corner_pmf_counts"] = corner_pmf_json(corner);
    {
      auto f = out.open("corner_pmf.csv");
      f << "x,count,probability\n";
      for (const auto& [x, k] : corner) {
        mpq_class q{k, hook};
        q.canonicalize();
        f << x << ',' << k.get_str() << ',' << format("%.17g", q.get_d()) << '\n';
      }
    }

    // X_n against the label of v_{nl} in T, and |S| - E_S(v_{nl}) against the urn.
    const TreePair trees = build_trees(p, l, n);
    const std::int64_t tag = static_cast<std::int64_t>(n) * l;
    const auto tree_counts = extension_label_counts(trees.big, tag, kDefaultSytBound + 1);
    const mpz_class extensions = count_linear_extensions(trees.big);
    bool corner_match = true;
    for (const auto& [x, k] : corner) {
      const auto it = tree_counts.find(x);
      const mpz_class t = it == tree_counts.end() ? mpz_class(0) : it->second;
      corner_match = corner_match && k * extensions == t * hook;
    }
    for (const auto& [x, k] : tree_counts) corner_match = corner_match && (k == 0 || corner.contains(x));
    ex["tree_vertices"] = trees.big.subtree_size;
    ex["tree_reconciliation"] = {{"stated_root_children", trees.reconciliation.stated_root_children},
                                 {"applied_root_children", trees.reconciliation.applied_root_children},
                                 {"shortfall", trees.reconciliation.shortfall}};
    verdicts.set("corner_law_equals_tree_label_law", corner_match);

    std::map<std::int64_t, mpz_class> stat;
    for (const auto& [x, k] : extension_label_counts(trees.small, tag, kDefaultSytBound + 1)) {
      stat[small_tree_urn_statistic(trees.small.subtree_size, x)] += k;
    }
    const UrnSpec urn = YoungPolyaFamily{p, l, p, l}.to_spec();
    const std::uint64_t steps = static_cast<std::uint64_t>(n - 1) * p;
    const HistoryRow row = exact_histories(urn, steps).row(steps);
    const mpz_class s_total = count_linear_extensions(trees.small);
    const mpz_class u_total = row.total();
    bool urn_match = true;
    for (const auto& [k, v] : stat) {
      urn_match = urn_match && k >= 0 && v * u_total == row.at(static_cast<std::uint64_t>(k)) * s_total;
    }
    for (std::size_t i = 0; i < row.counts.size(); ++i) {
      if (row.counts[i] != 0) urn_match = urn_match && stat.contains(static_cast<std::int64_t>(row.k_min + i));
    }
    verdicts.set("small_tree_statistic_equals_urn_law", urn_match);
    out.write_json("exact.json", ex);
    std::cout << count << " tableaux\n";
  }

  if (sampling) {
    const std::uint64_t reps = *c.reps, seed = *c.seed;
    std::vector<std::uint64_t> corner(reps);
    std::vector<double> stat(reps);
    parallel_for_index(kTableauChunks, c.workers, [&](std::uint64_t chunk) {
      HookWalkSampler sampler(shape.diagram);
      Philox4x32 rng = make_stream(seed, chunk);
      for (std::uint64_t i = reps * chunk / kTableauChunks; i < reps * (chunk + 1) / kTableauChunks; ++i) {
        corner[i] = sampler.sample_corner_entry(rng);
        stat[i] = corner_statistic(corner[i], p, l, n);
      }
    });
    {
      // Same layout as the simulate sample: the raw column holds X_n.
      auto f = out.open("sample.csv");
      f << "rep,final_black,normalized\n";
      for (std::uint64_t i = 0; i < reps; ++i) f << i << ',' << corner[i] << ',' << format("%.17g", stat[i]) << '\n';
    }
    const ProdGenGammaSpec law(p, l, p, l);
    const double scale = corner_limit_scale(p, l);
    const ProdGenGammaCdf table(law);
    const std::string label = format("%.9g", scale) + " * ProdGenGamma(" + std::to_string(p) + "," +
                              std::to_string(l) + "," + std::to_string(p) + "," + std::to_string(l) + ")";
    ComparisonReport report = compare(
        stat, {"tableau", n, reps, seed}, label, c.r_max,
        [&](std::uint32_t r) { return std::pow(scale, r) * prodgengamma_moment(r, law); },
        [&](double x) { return table(x / scale); });
    const double ks_max = c.ks_max.value_or(0.05);
    report.verdicts["ks_distance_le_" + format("%g", ks_max)] = report.ks_distance <= ks_max;
    if (c.moment_rel_tol) {
      for (const auto& row : report.moments) {
        report.verdicts["moment_r" + std::to_string(row.r) + "_rel_err_le_" + format("%g", *c.moment_rel_tol)] =
            std::abs(row.empirical / row.analytic - 1.0) <= *c.moment_rel_tol;
      }
    }
    out.write_json("report.json", json::parse(report.to_json()));
    auto f = out.open("moments.csv");
    report.write_moments_csv(f);
    verdicts.merge(report.verdicts);
    meta["rng"] = {{"engine", "philox4x32-10"},
                   {"streams", "replications split into " + std::to_string(kTableauChunks) +
                                   " contiguous chunks; chunk c uses stream (seed, c)"}};
    std::cout << format("KS distance %.5f", report.ks_distance) << " vs " << label << '\n';
  }
  return finish(c, out, meta, verdicts, started);
}

}  // namespace polyurn::cli
