#pragma once

#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

// A connected acyclic graph. Only the factories below produce one, so every
// Tree value satisfies |E| = n - 1 and connectivity.
class Tree : public Graph {
 public:
  Tree() = default;

  // Builds from (label, label) pairs. Labels may be any distinct
  // non-negative ints; they are kept as the external vertex ids.
  static Tree from_label_edges(const std::vector<std::pair<int, int>>& edges);
  static Tree single_vertex(int label = 0);

  // Wraps a graph after checking the tree invariants.
  static Tree from_graph(Graph g);

  std::vector<std::pair<int, int>> label_edges() const;

 private:
  explicit Tree(Graph g) : Graph(std::move(g)) {}
};

// Edge-list document: one "u v" pair per line, '#' starts a comment.
// Throws BadToken, DuplicateEdge, HasCycle or NotConnected naming the first
// offending line.
Tree parse_tree(std::string_view text);
// Sorted "u v" lines; parse_tree(write_tree(t)) reproduces t exactly.
std::string write_tree(const Tree& t);
std::string emit_dot(const Tree& t);

// The unique u-v path; u == v gives the length-0 path.
Path unique_path(const Tree& t, Vertex u, Vertex v);

// Leaves in first-visit order of a DFS from `start` that explores neighbours
// in ascending id order. This is the canonical cyclic leaf order used by the
// planar-drawing based constructions.
std::vector<Vertex> dfs_leaf_order(const Tree& t, Vertex start);

// Maximal paths whose interior vertices all have degree 2, each starting at
// its lower-id extreme, sorted lexicographically. They partition E(t).
std::vector<Path> bare_paths(const Tree& t);

struct Contraction {
  Tree tree;                 // labels are the surviving labels of the source tree
  std::vector<Path> source;  // source[i]: bare path (source indices) behind tree.edges()[i]

  const Path& expand(Edge e) const;
};

// Replaces every bare path by a single edge. Requires n >= 2.
Contraction contract_bare_paths(const Tree& t);

// Tree surgery used by the recursive constructions. New vertices receive
// labels above the current maximum.
Tree remove_and_join(const Tree& t, std::span<const Vertex> removed,
                     const std::vector<std::pair<Vertex, Vertex>>& added);
std::pair<Tree, int> subdivide(const Tree& t, Edge e);
std::pair<Tree, int> add_leaf(const Tree& t, Vertex at);

// Re-expresses a path of `from` in the index space of `to` by label.
Path translate(const Graph& from, const Path& p, const Graph& to);

std::string format_path(const Graph& g, const Path& p, std::string_view sep = "-");

}  // namespace pathsep
