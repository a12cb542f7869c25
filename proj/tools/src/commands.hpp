#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace polyurn::cli {

struct RunConfig {
  std::string subcommand;
  std::vector<std::string> argv;

  // Urn source: exactly one of these.
  bool young_polya = false;
  std::optional<std::string> spec_file;
  std::optional<std::uint32_t> p;
  std::optional<std::uint32_t> l;
  std::optional<std::uint64_t> b0;
  std::optional<std::uint64_t> w0;

  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> n_max;
  std::optional<std::uint64_t> reps;
  std::optional<std::uint64_t> seed;
  unsigned workers = 1;

  std::string out_dir;
  bool force = false;

  std::optional<double> ks_max;
  std::optional<double> moment_rel_tol;
  std::uint32_t r_max = 4;
  bool exact = false;
  double budget_mb = 1024.0;
};

// Each returns the process exit status: 0 when every verdict passes, 1 otherwise.
int cmd_enumerate(const RunConfig& config);
int cmd_simulate(const RunConfig& config);
int cmd_tableau(const RunConfig& config);

}  // namespace polyurn::cli
