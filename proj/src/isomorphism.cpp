#include "pathsep/isomorphism.hpp"

#include <algorithm>
#include <functional>

namespace pathsep {

namespace {

std::vector<Vertex> centers(const Tree& t) {
  const int n = t.order();
  if (n <= 2) {
    std::vector<Vertex> all(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) all[i] = i;
    return all;
  }
  std::vector<int> deg(static_cast<std::size_t>(n));
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = t.degree(v);
    if (deg[v] == 1) layer.push_back(v);
  }
  int remaining = n;
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<Vertex> next;
    for (Vertex x : layer) {
      deg[x] = 0;
      for (Vertex y : t.neighbors(x)) {
        if (deg[y] > 0 && --deg[y] == 1) next.push_back(y);
      }
    }
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

// Rooted codes for every vertex of the tree hanging from `root`.
std::vector<std::string> rooted_codes(const Tree& t, Vertex root) {
  std::vector<std::string> code(static_cast<std::size_t>(t.order()));
  std::function<void(Vertex, Vertex)> go = [&](Vertex v, Vertex parent) {
    std::vector<std::string> kids;
    for (Vertex c : t.neighbors(v)) {
      if (c == parent) continue;
      go(c, v);
      kids.push_back(code[c]);
    }
    std::sort(kids.begin(), kids.end());
    std::string s = "(";
    for (auto& k : kids) s += k;
    s += ")";
    code[v] = std::move(s);
  };
  go(root, -1);
  return code;
}

}  // namespace

std::string canonical_form(const Tree& t) {
  std::string best;
  for (Vertex c : centers(t)) {
    std::string s = rooted_codes(t, c)[c];
    if (best.empty() || s < best) best = std::move(s);
  }
  return best;
}

std::optional<std::vector<Vertex>> find_isomorphism(const Tree& pattern, const Tree& target) {
  if (pattern.order() != target.order() || pattern.size() != target.size()) return std::nullopt;
  const auto pc = centers(pattern);
  const auto tc = centers(target);
  if (pc.size() != tc.size()) return std::nullopt;
  const auto pcode = rooted_codes(pattern, pc[0]);
  for (Vertex troot : tc) {
    const auto tcode = rooted_codes(target, troot);
    if (tcode[troot] != pcode[pc[0]]) continue;
    std::vector<Vertex> map(static_cast<std::size_t>(pattern.order()), -1);
    // Equal codes mean isomorphic subtrees, so greedy child matching works.
    std::function<void(Vertex, Vertex, Vertex, Vertex)> match = [&](Vertex p, Vertex pp, Vertex q, Vertex qp) {
      map[p] = q;
      std::vector<Vertex> pk;
      std::vector<Vertex> qk;
      for (Vertex c : pattern.neighbors(p)) {
        if (c != pp) pk.push_back(c);
      }
      for (Vertex c : target.neighbors(q)) {
        if (c != qp) qk.push_back(c);
      }
      std::vector<char> used(qk.size(), 0);
      for (Vertex c : pk) {
        for (std::size_t j = 0; j < qk.size(); ++j) {
          if (!used[j] && tcode[qk[j]] == pcode[c]) {
            used[j] = 1;
            match(c, p, qk[j], q);
            break;
          }
        }
      }
    };
    match(pc[0], -1, troot, -1);
    return map;
  }
  return std::nullopt;
}

const Tree& binary_depth_two() {
  static const Tree t = Tree::from_label_edges({{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 6}, {3, 7}});
  return t;
}

bool is_binary_depth_two(const Tree& t) {
  if (t.order() != 7) return false;
  return canonical_form(t) == canonical_form(binary_depth_two());
}

}  // namespace pathsep
