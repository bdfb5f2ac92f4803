#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace pathsep {

// Dense vertex index into a host graph. External ids ("labels") are kept by
// the host and are strictly increasing in the index, so ordering by index
// and ordering by label agree everywhere.
using Vertex = int;

struct Edge {
  Vertex u = 0;  // u < v
  Vertex v = 0;

  static Edge make(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }
  bool touches(Vertex x) const { return u == x || v == x; }

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A sequence of distinct vertices, consecutive ones adjacent in the host.
// Single-vertex (length-0) paths are legal.
struct Path {
  std::vector<Vertex> vertices;

  Path() = default;
  explicit Path(std::vector<Vertex> vs) : vertices(std::move(vs)) {}

  std::size_t size() const { return vertices.size(); }
  std::size_t length() const { return vertices.empty() ? 0 : vertices.size() - 1; }
  bool empty() const { return vertices.empty(); }
  Vertex front() const { return vertices.front(); }
  Vertex back() const { return vertices.back(); }

  bool contains(Vertex x) const;
  bool contains(Edge e) const;
  std::vector<Edge> edges() const;
  Path reversed() const;

  friend auto operator<=>(const Path&, const Path&) = default;
};

class Graph {
 public:
  Graph() = default;

  // `labels` must be strictly increasing; edges are given in index space.
  Graph(std::vector<int> labels, const std::vector<Edge>& edges);

  // Identity labels 0..n-1.
  static Graph with_order(int n, const std::vector<Edge>& edges);

  int order() const { return static_cast<int>(labels_.size()); }
  std::size_t size() const { return edges_.size(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex a, Vertex b) const;
  bool has_vertex(Vertex v) const { return v >= 0 && v < order(); }
  bool has_edge(Edge e) const { return has_vertex(e.u) && has_vertex(e.v) && adjacent(e.u, e.v); }

  // Sorted ascending.
  const std::vector<Edge>& edges() const { return edges_; }

  int label(Vertex v) const { return labels_[static_cast<std::size_t>(v)]; }
  const std::vector<int>& labels() const { return labels_; }
  std::optional<Vertex> find_label(int label) const;
  // Throws UnknownVertex.
  Vertex index_of(int label) const;

  // True iff `p` is nonempty, has distinct vertices and consecutive
  // vertices are adjacent.
  bool is_path(const Path& p) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 protected:
  std::vector<int> labels_;
  std::vector<std::vector<Vertex>> adj_;
  std::vector<Edge> edges_;
};

}  // namespace pathsep
