#include "pathsep/profile.hpp"

#include <algorithm>
#include <numeric>

namespace pathsep {

namespace {

bool path_has_leaf(const Path& p, const std::vector<Vertex>& leaves) {
  return std::binary_search(leaves.begin(), leaves.end(), p.front()) ||
         std::binary_search(leaves.begin(), leaves.end(), p.back());
}

}  // namespace

bool TreeProfile::is_leaf(Vertex v) const { return std::binary_search(leaves.begin(), leaves.end(), v); }

bool TreeProfile::in_set_i(int bare_path_index) const {
  return std::find(set_i.begin(), set_i.end(), bare_path_index) != set_i.end();
}

int h2star_by_sum(const std::vector<Path>& bare, const std::vector<Vertex>& leaves) {
  int total = 0;
  for (const Path& p : bare) {
    const int len = static_cast<int>(p.length());
    const bool in_i = !path_has_leaf(p, leaves) && len >= 2;
    total += in_i ? len - 2 : len - 1;
  }
  return total;
}

TreeProfile profile(const Tree& t) {
  TreeProfile pr;
  pr.n = t.order();
  if (pr.n < 2) return pr;

  for (Vertex v = 0; v < pr.n; ++v) {
    if (t.degree(v) == 1) pr.leaves.push_back(v);
    if (t.degree(v) == 2) pr.deg2.push_back(v);
  }
  pr.h1 = static_cast<int>(pr.leaves.size());
  pr.h2 = static_cast<int>(pr.deg2.size());

  for (Edge e : t.edges()) {
    if (t.degree(e.u) > 1 && t.degree(e.v) > 1) pr.interior_edges.push_back(e);
  }

  pr.bare_paths = bare_paths(t);
  for (int i = 0; i < static_cast<int>(pr.bare_paths.size()); ++i) {
    const Path& p = pr.bare_paths[i];
    if (!path_has_leaf(p, pr.leaves) && p.length() >= 2) pr.set_i.push_back(i);
  }
  pr.h2star = pr.h2 - static_cast<int>(pr.set_i.size());

  // Components of T minus the interior edges; the non-trivial ones are bunches.
  std::vector<int> comp(static_cast<std::size_t>(pr.n), -1);
  int ncomp = 0;
  for (Vertex s = 0; s < pr.n; ++s) {
    if (comp[s] >= 0) continue;
    comp[s] = ncomp;
    std::vector<Vertex> stack{s};
    while (!stack.empty()) {
      Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : t.neighbors(x)) {
        if (comp[y] >= 0) continue;
        if (t.degree(x) > 1 && t.degree(y) > 1) continue;  // interior edge
        comp[y] = ncomp;
        stack.push_back(y);
      }
    }
    ++ncomp;
  }
  std::vector<Bunch> groups(static_cast<std::size_t>(ncomp));
  for (Vertex v = 0; v < pr.n; ++v) {
    groups[comp[v]].vertices.push_back(v);
    if (t.degree(v) == 1) groups[comp[v]].leaves.push_back(v);
  }
  for (auto& g : groups) {
    if (g.vertices.size() >= 2) pr.bunches.push_back(std::move(g));
  }

  for (Vertex leaf : pr.leaves) {
    if (t.degree(t.neighbors(leaf)[0]) != 2) pr.useful_leaves.push_back(leaf);
  }
  return pr;
}

}  // namespace pathsep
