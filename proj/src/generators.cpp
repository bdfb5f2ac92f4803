#include "pathsep/generators.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "pathsep/error.hpp"
#include "pathsep/isomorphism.hpp"

namespace pathsep {

namespace {

int uniform(std::mt19937_64& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

Tree subdivided_ds6(int extra) {
  std::vector<std::pair<int, int>> e{{0, 2}, {0, 3}, {0, 4}, {1, 5}, {1, 6}, {1, 7}};
  int prev = 0;
  for (int i = 0; i < extra; ++i) {
    e.emplace_back(prev, 8 + i);
    prev = 8 + i;
  }
  e.emplace_back(prev, 1);
  return Tree::from_label_edges(e);
}

}  // namespace

Tree named_tree(std::string_view name) {
  if (name == "E1") return Tree::from_label_edges({{0, 1}});
  if (name == "P3") return path_tree(3);
  if (name == "P4") return path_tree(4);
  if (name == "K13") return star_tree(3);
  if (name == "TA") return binary_depth_two();
  if (name == "DS6") return subdivided_ds6(0);
  if (name == "DS6s") return subdivided_ds6(1);
  if (name == "DS6ss") return subdivided_ds6(2);
  if (name == "HUB") return Tree::from_label_edges({{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}});
  throw Error(ErrorCode::UsageError, "unknown fixture '" + std::string(name) + "'");
}

Tree path_tree(int n) {
  if (n < 1) throw Error(ErrorCode::TreeTooSmall, "a path needs at least one vertex");
  if (n == 1) return Tree::single_vertex(0);
  std::vector<std::pair<int, int>> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Tree::from_label_edges(e);
}

Tree star_tree(int leaves) {
  if (leaves < 1) throw Error(ErrorCode::TreeTooSmall, "a star needs at least one leaf");
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
  return Tree::from_label_edges(e);
}

Tree relabel_compact(const Tree& t) {
  if (t.order() == 1) return Tree::single_vertex(0);
  std::vector<std::pair<int, int>> e;
  for (Edge x : t.edges()) e.emplace_back(x.u, x.v);
  return Tree::from_label_edges(e);
}

Tree random_tree(int n, std::mt19937_64& rng) {
  if (n < 1) throw Error(ErrorCode::TreeTooSmall, "a tree needs at least one vertex");
  if (n == 1) return Tree::single_vertex(0);
  if (n == 2) return Tree::from_label_edges({{0, 1}});
  std::vector<int> code(static_cast<std::size_t>(n - 2));
  for (int& c : code) c = uniform(rng, 0, n - 1);
  std::vector<int> degree(static_cast<std::size_t>(n), 1);
  for (int c : code) ++degree[c];
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 0; v < n; ++v) {
    if (degree[v] == 1) leaves.push(v);
  }
  std::vector<std::pair<int, int>> e;
  for (int c : code) {
    const int leaf = leaves.top();
    leaves.pop();
    e.emplace_back(leaf, c);
    if (--degree[c] == 1) leaves.push(c);
  }
  const int a = leaves.top();
  leaves.pop();
  e.emplace_back(a, leaves.top());
  return Tree::from_label_edges(e);
}

Tree random_contracted_tree(int max_n, std::mt19937_64& rng) {
  for (;;) {
    const Tree raw = random_tree(uniform(rng, 4, max_n), rng);
    const Tree c = relabel_compact(contract_bare_paths(raw).tree);
    if (c.order() >= 4) return c;
  }
}

Tree random_bushy_tree(int max_n, std::mt19937_64& rng) {
  for (;;) {
    const int s = uniform(rng, 1, std::max(1, max_n / 5));
    const Tree skeleton = random_tree(s, rng);
    std::vector<std::pair<int, int>> e = skeleton.label_edges();
    int next = s;
    for (Vertex v = 0; v < s; ++v) {
      const int d = s == 1 ? 0 : skeleton.degree(v);
      int extra = 0;
      if (d <= 2 || uniform(rng, 0, 1) == 1) extra = uniform(rng, 3, 5);
      for (int i = 0; i < extra; ++i) e.emplace_back(v, next++);
    }
    if (next <= max_n && next >= 4) return Tree::from_label_edges(e);
  }
}

std::vector<Tree> random_tree_suite(int count, int max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Tree> out;
  out.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    switch (i % 3) {
      case 0:
        out.push_back(random_tree(uniform(rng, 2, max_n), rng));
        break;
      case 1:
        out.push_back(random_contracted_tree(max_n, rng));
        break;
      default:
        out.push_back(random_bushy_tree(max_n, rng));
        break;
    }
  }
  return out;
}

}  // namespace pathsep
