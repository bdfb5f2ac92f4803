#include "pathsep/vertex_systems.hpp"

#include <algorithm>
#include <set>

#include "pathsep/edge_systems.hpp"
#include "pathsep/error.hpp"
#include "pathsep/isomorphism.hpp"

namespace pathsep {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

bool is_path_tree(const Tree& t) {
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) > 2) return false;
  }
  return true;
}

bool bunches_at_least_three(const TreeProfile& pr) {
  if (pr.bunches.empty()) return false;
  return std::all_of(pr.bunches.begin(), pr.bunches.end(), [](const Bunch& b) { return b.size() >= 3; });
}

bool contraction_supported(const Tree& t) {
  if (t.order() < 2) return false;
  const Contraction c = contract_bare_paths(t);
  const TreeProfile pr = profile(c.tree);
  if (c.tree.order() == 4 && pr.h1 == 3) return false;
  return bunches_at_least_three(pr);
}

void require_vertex_separation(const Tree& t, const PathSystem& fs) {
  const auto ts = TargetSet::of(t, TargetKind::Vertices);
  const auto sep = separates(t, fs, ts);
  const auto cov = covers(t, fs, ts);
  if (!sep.ok() || !cov.ok()) {
    throw Error(ErrorCode::InternalClassificationError,
                "vertex construction failed verification: " + describe(t, sep) + ", " + describe(t, cov));
  }
}

// Index of the bare path with the most unmarked vertices, skipping `other`.
int fullest(const std::vector<int>& unmarked, int other) {
  int best = -1;
  for (int i = 0; i < static_cast<int>(unmarked.size()); ++i) {
    if (i == other || unmarked[i] == 0) continue;
    if (best < 0 || unmarked[i] > unmarked[best]) best = i;
  }
  return best;
}

}  // namespace

int vertex_lower_bound(int h1, int h2star) { return std::max(ceil_div(h1 + h2star, 2), ceil_div(2 * h1 + h2star, 3)); }
int vertex_lower_bound(const TreeProfile& p) { return vertex_lower_bound(p.h1, p.h2star); }

int vertex_upper_formula(int h1, int h2star) { return ceil_div(2 * h1, 3) + ceil_div(h2star + 1, 2); }
int vertex_upper_formula(const TreeProfile& p) { return vertex_upper_formula(p.h1, p.h2star); }

PathSystem sliding_window_cover(const Tree& t, const std::vector<Vertex>& run) {
  if (run.empty()) throw Error(ErrorCode::NotConsecutive, "empty run");
  for (Vertex v : run) {
    if (!t.has_vertex(v)) throw Error(ErrorCode::NotConsecutive, "run names an unknown vertex");
  }
  if (!t.is_path(Path(run))) throw Error(ErrorCode::NotConsecutive, "run vertices do not form a path");
  const int k = static_cast<int>(run.size());
  const int count = ceil_div(k + 1, 2);
  const int width = k - count + 1;
  PathSystem fs;
  for (int j = 0; j < count; ++j) {
    fs.paths.push_back(Path(std::vector<Vertex>(run.begin() + j, run.begin() + j + width)));
  }
  return fs;
}

bool is_star(const Tree& t) {
  if (t.order() < 3) return false;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) == t.order() - 1) return true;
  }
  return false;
}

bool vertex_system_supported(const Tree& t) {
  if (is_star(t) && t.order() >= 5) return true;
  return contraction_supported(t);
}

std::optional<std::string> vertex_precondition_warning(const Tree& t) {
  if (t.order() < 3 || is_star(t)) return std::nullopt;
  const bool own = bunches_at_least_three(profile(t));
  const bool contracted = contraction_supported(t);
  if (own == contracted) return std::nullopt;
  return std::string("bunch-size condition ") + (own ? "holds" : "fails") + " on the tree but " +
         (contracted ? "holds" : "fails") + " on its bare-path contraction; the contraction decides";
}

PathSystem vertex_system(const Tree& t) {
  if (is_star(t) && t.order() >= 5) {
    PathSystem fs = bunch_construction(t);
    require_vertex_separation(t, fs);
    return fs;
  }
  if (!contraction_supported(t)) {
    throw Error(ErrorCode::UnsupportedTree,
                "the bare-path contraction must differ from K_{1,3} and have only bunches of size >= 3");
  }
  const Contraction c = contract_bare_paths(t);
  PathSystem fs;
  for (const Path& p : bunch_construction(c.tree).paths) {
    fs.paths.push_back(unique_path(t, t.index_of(c.tree.label(p.front())), t.index_of(c.tree.label(p.back()))));
  }

  const TreeProfile pr = profile(t);
  const auto& bare = pr.bare_paths;
  const int r = static_cast<int>(bare.size());
  std::vector<int> unmarked(static_cast<std::size_t>(r));
  for (int i = 0; i < r; ++i) unmarked[i] = static_cast<int>(bare[i].length()) - 1 - (pr.in_set_i(i) ? 1 : 0);

  // Pair the fullest bare paths until at most one keeps unmarked vertices.
  std::vector<std::pair<int, int>> pairs;
  for (;;) {
    const int i = fullest(unmarked, -1);
    const int j = i < 0 ? -1 : fullest(unmarked, i);
    if (j < 0) break;
    --unmarked[i];
    --unmarked[j];
    pairs.emplace_back(i, j);
  }

  // A pairing path leaves bare path i through one of its two extremes. Inside
  // each bare path the slots leaving through the first extreme take the
  // positions next to it, the slots leaving through the last extreme take the
  // positions next to that one, and the marked vertex and the final run sit
  // in between. Paths leaving through the same extreme are then nested and
  // paths leaving through opposite extremes never overlap.
  const auto leaves_through_front = [&](int i, int j) {
    const Path route = unique_path(t, bare[i].vertices[1], bare[j].vertices[1]);
    return route.vertices[1] == bare[i].front();
  };
  std::vector<int> front_used(static_cast<std::size_t>(r), 0);
  std::vector<int> back_used(static_cast<std::size_t>(r), 0);
  const auto take_slot = [&](int i, int j) {
    const auto& vs = bare[i].vertices;
    if (leaves_through_front(i, j)) return vs[1 + front_used[i]++];
    return vs[vs.size() - 2 - back_used[i]++];
  };
  PathSystem extra;
  for (auto [i, j] : pairs) {
    const Vertex u = take_slot(i, j);
    const Vertex x = take_slot(j, i);
    extra.paths.push_back(unique_path(t, u, x));
  }
  const int last = fullest(unmarked, -1);
  if (last >= 0) {
    const auto& vs = bare[last].vertices;
    const int start = 1 + front_used[last] + (pr.in_set_i(last) ? 1 : 0);
    std::vector<Vertex> run(vs.begin() + start, vs.begin() + start + unmarked[last]);
    for (Path& p : sliding_window_cover(t, run).paths) extra.paths.push_back(std::move(p));
  }
  for (Path& p : extra.paths) fs.paths.push_back(std::move(p));

  require_vertex_separation(t, fs);
  if (static_cast<int>(fs.size()) > vertex_upper_formula(pr)) {
    throw Error(ErrorCode::InternalClassificationError, "vertex construction exceeds the upper bound");
  }
  return fs;
}

PathSystem vertex_interior_system(const Tree& t) {
  PathSystem fs = planar_construction(t);
  if (!separates_and_covers(t, fs, TargetSet::of(t, TargetKind::VerticesAndInteriorEdges))) {
    throw Error(ErrorCode::InternalClassificationError, "planar system does not separate vertices and interior edges");
  }
  return fs;
}

bool is_c13(const Tree& t) {
  if (t.order() < 4) return false;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) != 1 && t.degree(v) != 3) return false;
  }
  return true;
}

bool is_c13_star(const Tree& t) {
  if (t.order() < 4) return false;
  const Contraction c = contract_bare_paths(t);
  if (!is_c13(c.tree)) return false;
  for (const Path& p : bare_paths(t)) {
    const bool pendant = t.degree(p.front()) == 1 || t.degree(p.back()) == 1;
    if (p.length() != (pendant ? 1u : 2u)) return false;
  }
  return true;
}

Tree subdivide_interior_edges(const Tree& t) {
  std::vector<std::pair<int, int>> interior;
  for (Edge e : t.edges()) {
    if (t.degree(e.u) > 1 && t.degree(e.v) > 1) interior.emplace_back(t.label(e.u), t.label(e.v));
  }
  Tree out = t;
  for (auto [a, b] : interior) {
    out = subdivide(out, Edge::make(out.index_of(a), out.index_of(b))).first;
  }
  return out;
}

std::vector<Tree> c13_family(int max_n) {
  std::vector<Tree> all;
  if (max_n < 4) return all;
  std::set<std::string> seen;
  std::vector<Tree> frontier{Tree::from_label_edges({{0, 1}, {0, 2}, {0, 3}})};
  seen.insert(canonical_form(frontier.front()));
  while (!frontier.empty()) {
    std::vector<Tree> next;
    for (const Tree& t : frontier) {
      all.push_back(t);
      if (t.order() + 2 > max_n) continue;
      for (Vertex r = 0; r < t.order(); ++r) {
        if (t.degree(r) != 1) continue;
        auto [once, a] = add_leaf(t, r);
        auto [twice, b] = add_leaf(once, once.index_of(t.label(r)));
        (void)a;
        (void)b;
        if (seen.insert(canonical_form(twice)).second) next.push_back(std::move(twice));
      }
    }
    frontier = std::move(next);
  }
  return all;
}

std::optional<int> sharp_value(const Tree& t, TargetKind kind) {
  const int n = t.order();
  if (n == 0) return std::nullopt;
  switch (kind) {
    case TargetKind::Edges:
      if (n < 2) return std::nullopt;
      return edge_optimum(t);
    case TargetKind::Vertices: {
      if (is_path_tree(t)) return ceil_div(n + 1, 2);
      const TreeProfile pr = profile(t);
      // Only K_{1,3} and its one-interior-edge successor attain h1; from
      // order 10 on the optimum drops below h1.
      if (is_c13_star(t) && n <= 7) return pr.h1;
      if (is_star(t) && pr.h1 >= 4) return ceil_div(2 * pr.h1, 3);
      if (pr.h2 == 0 && pr.bunches.size() >= 2 && bunches_at_least_three(pr)) return ceil_div(2 * pr.h1, 3);
      return std::nullopt;
    }
    case TargetKind::VerticesAndInteriorEdges:
      if (is_c13(t)) return profile(t).h1;
      return std::nullopt;
    case TargetKind::Custom:
      return std::nullopt;
  }
  return std::nullopt;
}

}  // namespace pathsep
