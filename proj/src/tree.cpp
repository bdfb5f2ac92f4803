#include "pathsep/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "pathsep/error.hpp"

namespace pathsep {

namespace {

struct DisjointSets {
  std::vector<int> parent;
  explicit DisjointSets(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
};

std::string line_ref(int line) { return "line " + std::to_string(line); }

bool parse_id(std::string_view tok, int& out) {
  if (tok.empty()) return false;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), out);
  return ec == std::errc{} && ptr == tok.data() + tok.size() && out >= 0;
}

}  // namespace

Tree Tree::from_label_edges(const std::vector<std::pair<int, int>>& edges) {
  std::vector<int> labels;
  for (auto [a, b] : edges) {
    labels.push_back(a);
    labels.push_back(b);
  }
  std::sort(labels.begin(), labels.end());
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  if (labels.empty()) throw Error(ErrorCode::TreeTooSmall, "no edges");
  std::vector<Edge> idx;
  idx.reserve(edges.size());
  auto pos = [&](int l) { return static_cast<Vertex>(std::lower_bound(labels.begin(), labels.end(), l) - labels.begin()); };
  for (auto [a, b] : edges) idx.push_back(Edge::make(pos(a), pos(b)));
  return from_graph(Graph(std::move(labels), idx));
}

Tree Tree::single_vertex(int label) { return Tree(Graph({label}, {})); }

Tree Tree::from_graph(Graph g) {
  const int n = g.order();
  if (n == 0) throw Error(ErrorCode::TreeTooSmall, "empty graph");
  if (static_cast<int>(g.size()) >= n) throw Error(ErrorCode::HasCycle, "too many edges for a tree");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<Vertex> stack{0};
  seen[0] = 1;
  int reached = 1;
  while (!stack.empty()) {
    Vertex x = stack.back();
    stack.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (!seen[y]) {
        seen[y] = 1;
        ++reached;
        stack.push_back(y);
      }
    }
  }
  if (reached != n) throw Error(ErrorCode::NotConnected, "graph is disconnected");
  return Tree(std::move(g));
}

std::vector<std::pair<int, int>> Tree::label_edges() const {
  std::vector<std::pair<int, int>> out;
  out.reserve(edges_.size());
  for (Edge e : edges_) out.emplace_back(label(e.u), label(e.v));
  return out;
}

Tree parse_tree(std::string_view text) {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> lines;
  std::set<std::pair<int, int>> seen;
  std::map<int, int> slot;
  DisjointSets sets(0);
  auto id_of = [&](int label) {
    auto [it, inserted] = slot.emplace(label, static_cast<int>(slot.size()));
    if (inserted) sets.parent.push_back(it->second);
    return it->second;
  };

  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    start = end + 1;
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (tokens.empty()) {
      if (end == text.size()) break;
      continue;
    }
    int a = 0;
    int b = 0;
    if (tokens.size() != 2 || !parse_id(tokens[0], a) || !parse_id(tokens[1], b)) {
      throw Error(ErrorCode::BadToken, line_ref(line_no) + ": expected two non-negative vertex ids");
    }
    if (a == b) throw Error(ErrorCode::HasCycle, line_ref(line_no) + ": self-loop at " + std::to_string(a));
    auto key = std::minmax(a, b);
    if (!seen.insert(key).second) {
      throw Error(ErrorCode::DuplicateEdge, line_ref(line_no) + ": " + std::to_string(a) + " " + std::to_string(b));
    }
    if (!sets.unite(id_of(a), id_of(b))) {
      throw Error(ErrorCode::HasCycle, line_ref(line_no) + ": edge " + std::to_string(a) + " " + std::to_string(b) +
                                           " closes a cycle");
    }
    edges.emplace_back(a, b);
    lines.push_back(line_no);
    if (end == text.size()) break;
  }
  if (edges.empty()) throw Error(ErrorCode::BadToken, "empty edge list");
  const int root = sets.find(slot.at(edges.front().first));
  for (std::size_t k = 0; k < edges.size(); ++k) {
    if (sets.find(slot.at(edges[k].first)) != root) {
      throw Error(ErrorCode::NotConnected, line_ref(lines[k]) + ": edge is not connected to line " +
                                               std::to_string(lines.front()));
    }
  }
  return Tree::from_label_edges(edges);
}

std::string write_tree(const Tree& t) {
  std::ostringstream out;
  for (auto [a, b] : t.label_edges()) out << a << ' ' << b << '\n';
  return out.str();
}

std::string emit_dot(const Tree& t) {
  std::ostringstream out;
  out << "graph T {\n";
  if (t.size() == 0) {
    for (int l : t.labels()) out << "  " << l << ";\n";
  }
  for (auto [a, b] : t.label_edges()) out << "  " << a << " -- " << b << ";\n";
  out << "}\n";
  return out.str();
}

Path unique_path(const Tree& t, Vertex u, Vertex v) {
  if (!t.has_vertex(u)) throw Error(ErrorCode::UnknownVertex, std::to_string(u));
  if (!t.has_vertex(v)) throw Error(ErrorCode::UnknownVertex, std::to_string(v));
  if (u == v) return Path({u});
  // Parents towards v, then walk from u.
  std::vector<Vertex> parent(static_cast<std::size_t>(t.order()), -1);
  std::vector<Vertex> queue{v};
  parent[v] = v;
  for (std::size_t head = 0; head < queue.size() && parent[u] < 0; ++head) {
    Vertex x = queue[head];
    for (Vertex y : t.neighbors(x)) {
      if (parent[y] < 0) {
        parent[y] = x;
        queue.push_back(y);
      }
    }
  }
  Path p;
  for (Vertex x = u; x != v; x = parent[x]) p.vertices.push_back(x);
  p.vertices.push_back(v);
  return p;
}

std::vector<Vertex> dfs_leaf_order(const Tree& t, Vertex start) {
  if (!t.has_vertex(start)) throw Error(ErrorCode::UnknownVertex, std::to_string(start));
  if (t.degree(start) != 1) throw Error(ErrorCode::NotALeaf, std::to_string(t.label(start)));
  std::vector<Vertex> leaves{start};
  // (vertex, parent, next neighbour slot)
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack{{start, -1, 0}};
  while (!stack.empty()) {
    Frame& f = stack.back();
    auto nb = t.neighbors(f.v);
    if (f.next == nb.size()) {
      stack.pop_back();
      continue;
    }
    Vertex y = nb[f.next++];
    if (y == f.parent) continue;
    if (t.degree(y) == 1) leaves.push_back(y);
    stack.push_back({y, f.v, 0});
  }
  return leaves;
}

std::vector<Path> bare_paths(const Tree& t) {
  std::vector<Path> out;
  for (Vertex s = 0; s < t.order(); ++s) {
    if (t.degree(s) == 2) continue;
    for (Vertex x : t.neighbors(s)) {
      Path p({s, x});
      Vertex prev = s;
      Vertex cur = x;
      while (t.degree(cur) == 2) {
        auto nb = t.neighbors(cur);
        Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
        p.vertices.push_back(cur);
      }
      if (s < cur) out.push_back(std::move(p));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

const Path& Contraction::expand(Edge e) const {
  const auto& es = tree.edges();
  auto it = std::lower_bound(es.begin(), es.end(), e);
  if (it == es.end() || *it != e) throw Error(ErrorCode::UnknownElement, "edge not in contracted tree");
  return source[static_cast<std::size_t>(it - es.begin())];
}

Contraction contract_bare_paths(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorCode::TreeTooSmall, "contraction needs n >= 2");
  auto paths = bare_paths(t);
  std::vector<std::pair<int, int>> label_edges;
  std::map<std::pair<int, int>, Path> by_ends;
  for (auto& p : paths) {
    std::pair<int, int> key{t.label(p.front()), t.label(p.back())};
    label_edges.push_back(key);
    by_ends.emplace(key, p);
  }
  Contraction c{Tree::from_label_edges(label_edges), {}};
  for (Edge e : c.tree.edges()) c.source.push_back(by_ends.at({c.tree.label(e.u), c.tree.label(e.v)}));
  return c;
}

Tree remove_and_join(const Tree& t, std::span<const Vertex> removed,
                     const std::vector<std::pair<Vertex, Vertex>>& added) {
  std::vector<char> gone(static_cast<std::size_t>(t.order()), 0);
  for (Vertex r : removed) gone[r] = 1;
  std::vector<std::pair<int, int>> edges;
  for (Edge e : t.edges()) {
    if (!gone[e.u] && !gone[e.v]) edges.emplace_back(t.label(e.u), t.label(e.v));
  }
  for (auto [a, b] : added) edges.emplace_back(t.label(a), t.label(b));
  if (edges.empty()) {
    for (Vertex x = 0; x < t.order(); ++x) {
      if (!gone[x]) return Tree::single_vertex(t.label(x));
    }
    throw Error(ErrorCode::TreeTooSmall, "surgery removed every vertex");
  }
  return Tree::from_label_edges(edges);
}

std::pair<Tree, int> subdivide(const Tree& t, Edge e) {
  const int fresh = t.labels().back() + 1;
  std::vector<std::pair<int, int>> edges;
  for (Edge f : t.edges()) {
    if (f == e) {
      edges.emplace_back(t.label(f.u), fresh);
      edges.emplace_back(fresh, t.label(f.v));
    } else {
      edges.emplace_back(t.label(f.u), t.label(f.v));
    }
  }
  return {Tree::from_label_edges(edges), fresh};
}

std::pair<Tree, int> add_leaf(const Tree& t, Vertex at) {
  const int fresh = t.labels().back() + 1;
  auto edges = t.label_edges();
  edges.emplace_back(t.label(at), fresh);
  return {Tree::from_label_edges(edges), fresh};
}

Path translate(const Graph& from, const Path& p, const Graph& to) {
  Path out;
  out.vertices.reserve(p.size());
  for (Vertex x : p.vertices) out.vertices.push_back(to.index_of(from.label(x)));
  return out;
}

std::string format_path(const Graph& g, const Path& p, std::string_view sep) {
  std::string s;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += sep;
    s += std::to_string(g.label(p.vertices[i]));
  }
  return s;
}

}  // namespace pathsep
