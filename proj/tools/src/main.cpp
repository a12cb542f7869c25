#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include <polyurn/errors.hpp>

#include "commands.hpp"
#include "output.hpp"

using polyurn::cli::RunConfig;

namespace {

void add_urn_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_flag("--young-polya", c.young_polya, "Period-2 urn with l = 1 and b0 = w0 = 1");
  cmd.add_option("--spec", c.spec_file, "Urn spec as JSON: {\"p\", \"matrices\": [[a,b,c,d], ...], \"b0\", \"w0\"}")
      ->check(CLI::ExistingFile);
  cmd.add_option("--b0", c.b0, "Initial black balls (with --p/--l)")->check(CLI::PositiveNumber);
  cmd.add_option("--w0", c.w0, "Initial white balls (with --p/--l)")->check(CLI::PositiveNumber);
}

void add_common_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--out", c.out_dir, "Output directory")->envname("POLYURN_OUT_DIR")->default_val("polyurn-out");
  cmd.add_flag("--force", c.force, "Overwrite existing output files");
}

void add_sampling_options(CLI::App& cmd, RunConfig& c) {
  cmd.add_option("--reps", c.reps, "Independent replications");
  cmd.add_option("--seed", c.seed, "RNG seed (required when sampling)");
  cmd.add_option("--workers", c.workers, "Worker threads; results do not depend on it")->check(CLI::PositiveNumber);
  cmd.add_option("--ks-max", c.ks_max, "KS distance threshold for the pass verdict");
  cmd.add_option("--moment-rel-tol", c.moment_rel_tol, "Also require each moment within this relative error");
  cmd.add_option("--r-max", c.r_max, "Highest moment reported")->check(CLI::Range(1, 12));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact enumeration, simulation and checks for periodic Polya urns and triangular tableaux"};
  app.set_version_flag("--version", POLYURN_VERSION);
  app.require_subcommand(1);

  RunConfig c;
  c.workers = std::max(1u, std::thread::hardware_concurrency());
  for (int i = 0; i < argc; ++i) c.argv.emplace_back(argv[i]);

  auto* enumerate = app.add_subcommand("enumerate", "Exact history counts, totals and residual report");
  add_urn_options(*enumerate, c);
  enumerate->add_option("--p", c.p, "Period p")->check(CLI::PositiveNumber);
  enumerate->add_option("--l", c.l, "Adding parameter l")->check(CLI::PositiveNumber);
  enumerate->add_option("--n-max", c.n_max, "Last time step")->required();
  enumerate->add_option("--budget-mb", c.budget_mb, "Memory budget of the exact tables in MB")
      ->check(CLI::PositiveNumber);
  add_common_options(*enumerate, c);

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo urn runs compared with the limit law");
  add_urn_options(*simulate, c);
  simulate->add_option("--p", c.p, "Period p")->check(CLI::PositiveNumber);
  simulate->add_option("--l", c.l, "Adding parameter l")->check(CLI::PositiveNumber);
  simulate->add_option("--n", c.n, "Number of draws")->required();
  add_sampling_options(*simulate, c);
  add_common_options(*simulate, c);

  auto* tableau = app.add_subcommand("tableau", "Corner entry of random triangular tableaux");
  tableau->add_option("--p", c.p, "Rows per block")->required()->check(CLI::PositiveNumber);
  tableau->add_option("--l", c.l, "Row length step")->required()->check(CLI::PositiveNumber);
  tableau->add_option("--n", c.n, "Number of blocks")->required()->check(CLI::PositiveNumber);
  tableau->add_flag("--exact", c.exact, "Run the enumeration cross-checks (small shapes only)");
  add_sampling_options(*tableau, c);
  add_common_options(*tableau, c);

  CLI11_PARSE(app, argc, argv);

  try {
    if (enumerate->parsed()) {
      c.subcommand = "enumerate";
      return polyurn::cli::cmd_enumerate(c);
    }
    if (simulate->parsed()) {
      c.subcommand = "simulate";
      return polyurn::cli::cmd_simulate(c);
    }
    c.subcommand = "tableau";
    return polyurn::cli::cmd_tableau(c);
  } catch (const polyurn::cli::UsageError& e) {
    std::cerr << "polyurn: " << e.what() << '\n';
    return 2;
  } catch (const polyurn::Error& e) {
    std::cerr << "polyurn: " << e.what() << '\n';
    return 2;
  }
}
