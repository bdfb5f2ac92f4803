#pragma once

#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/tree.hpp"

namespace pathsep {

struct Bunch {
  std::vector<Vertex> vertices;  // ascending
  std::vector<Vertex> leaves;    // ascending

  int size() const { return static_cast<int>(leaves.size()); }
};

// Structural parameters of a tree.
//
// h2star discounts one degree-2 vertex on every leafless bare path with at
// least two edges (the set I); those are exactly the vertices a
// vertex-separating system gets for free.
struct TreeProfile {
  int n = 0;
  int h1 = 0;
  int h2 = 0;
  std::vector<Vertex> leaves;
  std::vector<Vertex> deg2;
  std::vector<Edge> interior_edges;
  std::vector<Path> bare_paths;
  std::vector<int> set_i;  // indices into bare_paths
  int h2star = 0;
  std::vector<Bunch> bunches;  // ordered by smallest vertex
  std::vector<Vertex> useful_leaves;

  bool is_leaf(Vertex v) const;
  bool in_set_i(int bare_path_index) const;
};

TreeProfile profile(const Tree& t);

// Sum over bare paths of (|E|-1), or (|E|-2) for members of I. Agrees with
// h2 - |I|; kept separate so the two can be checked against each other.
int h2star_by_sum(const std::vector<Path>& bare, const std::vector<Vertex>& leaves);

}  // namespace pathsep
