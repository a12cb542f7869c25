#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "polyurn/random.hpp"
#include "polyurn/urn.hpp"

namespace polyurn {

struct Trajectory {
  std::uint64_t n = 0;
  std::uint64_t final_black = 0;
  // B_0..B_n; filled only when requested.
  std::vector<std::uint64_t> black_counts;
};

// One run of n draws. Each step draws an integer uniformly below
// total_balls(i) and picks black iff it is < B_i.
Trajectory simulate_urn(const UrnSpec& spec, std::uint64_t n, Philox4x32& rng, bool keep_path = false);

// Same draw sequence as simulate_urn, returning only B_n.
std::uint64_t simulate_final_black(const UrnSpec& spec, std::uint64_t n, Philox4x32& rng);

// p^δ/(p+l) · B_n / n^δ with δ = p/(p+l).
double normalize(std::uint64_t final_black, std::uint64_t n, const YoungPolyaFamily& family);
double normalize(double value, std::uint64_t n, std::uint32_t p, std::uint32_t l);

struct EmpiricalSample {
  UrnSpec spec;
  std::uint64_t n = 0;
  std::uint64_t reps = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> final_black;
  // Filled when the spec is a Young–Pólya family and n >= 1.
  std::vector<double> normalized;

  // `rep,final_black,normalized`; normalized left blank when unavailable.
  void write_csv(std::ostream& out) const;
  // {"spec": ..., "n": ..., "reps": ..., "seed": ...}
  std::string metadata_json() const;
};

// reps independent runs; run j uses stream (seed, j). The result does not
// depend on `workers`: replication indices are split into contiguous blocks
// and merged in index order.
EmpiricalSample run_experiment(const UrnSpec& spec, std::uint64_t n, std::uint64_t reps,
                               std::uint64_t seed, unsigned workers = 1);

// Runs body(j) for j in [0, count) over `workers` threads with contiguous
// blocks. Used by every replication loop in the library.
template <class Body>
void parallel_for_index(std::uint64_t count, unsigned workers, Body&& body);

}  // namespace polyurn

#include "polyurn/detail/parallel.hpp"
