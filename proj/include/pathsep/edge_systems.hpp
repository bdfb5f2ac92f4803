#pragma once

#include <optional>
#include <vector>

#include "pathsep/tree.hpp"
#include "pathsep/verify.hpp"

namespace pathsep {

// max(ceil((2 h1 + h2) / 3), ceil((h1 + h2) / 2)).
int edge_formula(int h1, int h2);

// Size of a minimum edge-separating-covering system: edge_formula for every
// tree except the binary tree of depth two (4) and the single edge (1).
int edge_optimum(const Tree& t);

// Leaves a_1..a_k, b_1..b_k, c_1..c_k in DFS order; paths a_i-b_i then
// a_i-c_i. Needs n >= 3, h2 = 0 and h1 divisible by 3.
PathSystem abc_construction(const Tree& t);

// Consecutive leaves of the DFS leaf cycle joined pairwise (h1 paths). Needs
// h2 = 0 and h1 >= 3. Every edge ends up on exactly two paths.
PathSystem planar_construction(const Tree& t);

// Per bunch: the path between its last two leaves and a connector from its
// last leaf to the first leaf of the next bunch. The leaves left over are
// pooled in bunch order, grouped in threes joined as seagulls (u-v, v-w),
// and any final one or two leaves get their single pendant edge.
// Needs t != K_{1,3} and every bunch of size >= 2.
PathSystem bunch_construction(const Tree& t);

enum class ReductionCase { DegreeAtLeast4, Degree3NonNeighbor };

struct ReductionPair {
  Vertex leaf = -1;  // useful leaf u
  Vertex deg2 = -1;  // degree-2 vertex v
  ReductionCase kind = ReductionCase::DegreeAtLeast4;

  bool operator==(const ReductionPair&) const = default;
};

// An added edge a-b of the reduced tree that stands for a-middle-b.
struct Expansion {
  int a = 0;  // labels
  int b = 0;
  int middle = 0;
};

struct Reduction {
  Tree reduced;
  std::vector<Expansion> expansions;
  int leaf_label = 0;
  int deg2_label = 0;

  // Re-expands every added edge, maps into `original` and appends the
  // leaf-to-degree-2 path.
  PathSystem lift(const Tree& original, const PathSystem& reduced_system) const;
};

// Lexicographically least (leaf, deg2) reduction pair. With forbid_binary,
// pairs whose reduced tree is the binary tree of depth two are skipped.
std::optional<ReductionPair> find_reduction_pair(const Tree& t, bool forbid_binary);

// Throws InvalidPair when rp is not a reduction pair of t.
Reduction apply_reduction(const Tree& t, const ReductionPair& rp);

// A minimum edge-separating-covering system, machine-checked before return.
// Throws TreeTooSmall for n < 2 and InternalClassificationError if a
// construction step ever produces an unverified family.
PathSystem edge_system(const Tree& t);

// Re-expresses `p` (a path of `from`) in `to`, inserting the middle vertex of
// every expansion whose end labels appear consecutively.
Path expand_path(const Graph& from, const Path& p, const Graph& to, const std::vector<Expansion>& expansions);

}  // namespace pathsep
