#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/tree.hpp"
#include "pathsep/verify.hpp"

namespace pathsep {

// Length-0 paths by vertex, then one path per vertex pair ordered by (min, max).
// Throws TooLarge above max_order.
std::vector<Path> enumerate_paths(const Tree& t, bool include_trivial, int max_order = 12);

// Every simple path of a general graph, one representative per distinct set of
// vertices and edges, shortest-first then lexicographic.
std::vector<Path> enumerate_graph_paths(const Graph& g, bool include_trivial, int max_order = 9);

struct OracleOptions {
  bool require_cover = true;
  // Unset: length-0 paths are candidates exactly when the targets contain vertices.
  std::optional<bool> include_trivial;
  // Zero means no wall-clock limit.
  std::chrono::milliseconds budget{0};
  int max_order = 12;
};

struct OracleResult {
  int size = 0;
  PathSystem system;
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

// Minimum family of candidate paths separating (and, if asked, covering) the
// targets: iterative deepening on the family size, branching on the splitters
// of the least-served unresolved pair. Throws Timeout when the budget runs
// out and PreconditionViolated when no candidate family works at all.
OracleResult min_separating(const Graph& host, const std::vector<Path>& candidates, const TargetSet& ts,
                            const OracleOptions& opt = {});
OracleResult min_separating(const Tree& t, const TargetSet& ts, const OracleOptions& opt = {});
OracleResult min_separating_graph(const Graph& g, const TargetSet& ts, const OracleOptions& opt = {});

// Plain combination scan, independent of the search above.
bool exists_family_of_size(const Graph& host, const std::vector<Path>& candidates, const TargetSet& ts, int k,
                           bool require_cover);

// One tree per isomorphism class on n vertices (labels 0..n-1), 2 <= n <= 10.
std::vector<Tree> enumerate_trees(int n);

}  // namespace pathsep
