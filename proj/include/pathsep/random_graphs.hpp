#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/verify.hpp"

namespace pathsep {

Graph gen_gnp(int n, double p, std::uint64_t seed);

struct SetSystem {
  std::vector<std::vector<int>> blocks;  // each ascending
};

// Blocks over element positions 0..n-1. With n = 2k + q the first k
// positions form A, the next k form B and a final odd position forms C.
// Every non-empty block count is at most ceil(log2 n) + 1 and membership
// signatures are distinct and non-empty.
SetSystem separating_set_system(int n);

int ceil_log2(std::uint64_t n);

enum class SearchStatus { Found, NotFound, CertifiedNone };

struct HamiltonianResult {
  SearchStatus status = SearchStatus::NotFound;
  std::optional<Path> path;
};

// Spanning path of g[block]: rotation-extension restarts first, then exact
// backtracking with a node budget. CertifiedNone only when backtracking
// finished without exhausting the budget.
HamiltonianResult hamiltonian_path(const Graph& g, const std::vector<Vertex>& block, std::uint64_t seed = 1,
                                   std::uint64_t node_budget = 10'000'000);

// Separating set system over a seeded shuffle of the vertices, one spanning
// path per block. Verified for vertices before return; nullopt if some block
// has no path found.
std::optional<PathSystem> random_vertex_system(const Graph& g, std::uint64_t seed);

int isolated_count(const Graph& g);

struct ExperimentConfig {
  int n = 0;
  double p = 0.0;
  int trials = 1;
  std::uint64_t seed = 0;
};

struct TrialRecord {
  std::uint64_t seed = 0;
  bool success = false;
  int system_size = 0;
  int isolated = 0;
  PathSystem system;  // empty unless success; the graph is gen_gnp(n, p, seed)
};

struct ExperimentStats {
  ExperimentConfig config;
  std::vector<TrialRecord> trials;
  int successes = 0;
  int failures = 0;
  double success_rate = 0.0;
  double mean_isolated = 0.0;
  double elapsed_ms = 0.0;
};

// Seed of trial i, derived from the master seed by a splitmix64 step.
std::uint64_t trial_seed(std::uint64_t master, int trial);

ExperimentStats run_experiment(const ExperimentConfig& cfg);

double supercritical_p(int n);  // (2 ln n + 6 ln ln n) / n, clamped to [0, 1]
double subcritical_p(int n);    // (ln n - 3 ln ln n) / n, clamped to [0, 1]

}  // namespace pathsep
