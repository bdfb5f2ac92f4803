#include "pathsep/graph.hpp"

#include <algorithm>
#include <string>

#include "pathsep/error.hpp"

namespace pathsep {

bool Path::contains(Vertex x) const {
  return std::find(vertices.begin(), vertices.end(), x) != vertices.end();
}

bool Path::contains(Edge e) const {
  for (std::size_t i = 1; i < vertices.size(); ++i) {
    if (Edge::make(vertices[i - 1], vertices[i]) == e) return true;
  }
  return false;
}

std::vector<Edge> Path::edges() const {
  std::vector<Edge> out;
  for (std::size_t i = 1; i < vertices.size(); ++i) out.push_back(Edge::make(vertices[i - 1], vertices[i]));
  return out;
}

Path Path::reversed() const { return Path(std::vector<Vertex>(vertices.rbegin(), vertices.rend())); }

Graph::Graph(std::vector<int> labels, const std::vector<Edge>& edges) : labels_(std::move(labels)) {
  for (std::size_t i = 1; i < labels_.size(); ++i) {
    if (labels_[i - 1] >= labels_[i]) throw Error(ErrorCode::BadToken, "vertex labels must be strictly increasing");
  }
  const int n = order();
  adj_.assign(labels_.size(), {});
  edges_.reserve(edges.size());
  for (Edge e : edges) {
    Edge norm = Edge::make(e.u, e.v);
    if (norm.u < 0 || norm.v >= n) throw Error(ErrorCode::UnknownVertex, "edge endpoint out of range");
    if (norm.u == norm.v) throw Error(ErrorCode::BadToken, "self-loop at " + std::to_string(labels_[norm.u]));
    edges_.push_back(norm);
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto it = std::adjacent_find(edges_.begin(), edges_.end()); it != edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                std::to_string(labels_[it->u]) + " " + std::to_string(labels_[it->v]));
  }
  for (Edge e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::with_order(int n, const std::vector<Edge>& edges) {
  std::vector<int> labels(static_cast<std::size_t>(std::max(n, 0)));
  for (int i = 0; i < n; ++i) labels[i] = i;
  return Graph(std::move(labels), edges);
}

bool Graph::adjacent(Vertex a, Vertex b) const {
  const auto& na = adj_[static_cast<std::size_t>(a)];
  return std::binary_search(na.begin(), na.end(), b);
}

std::optional<Vertex> Graph::find_label(int label) const {
  auto it = std::lower_bound(labels_.begin(), labels_.end(), label);
  if (it == labels_.end() || *it != label) return std::nullopt;
  return static_cast<Vertex>(it - labels_.begin());
}

Vertex Graph::index_of(int label) const {
  if (auto v = find_label(label)) return *v;
  throw Error(ErrorCode::UnknownVertex, std::to_string(label));
}

bool Graph::is_path(const Path& p) const {
  if (p.empty()) return false;
  std::vector<char> seen(labels_.size(), 0);
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex x = p.vertices[i];
    if (!has_vertex(x) || seen[x]) return false;
    seen[x] = 1;
    if (i > 0 && !adjacent(p.vertices[i - 1], x)) return false;
  }
  return true;
}

}  // namespace pathsep
