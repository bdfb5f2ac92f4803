#include "pathsep/edge_systems.hpp"

#include <algorithm>
#include <string>

#include "pathsep/error.hpp"
#include "pathsep/isomorphism.hpp"
#include "pathsep/profile.hpp"

namespace pathsep {

namespace {

int ceil_div(int a, int b) { return (a + b - 1) / b; }

struct Fixture {
  Tree tree;
  std::vector<std::vector<int>> family;  // labels of `tree`
};

Fixture make_fixture(const std::vector<std::pair<int, int>>& edges, std::vector<std::vector<int>> family) {
  return Fixture{Tree::from_label_edges(edges), std::move(family)};
}

const Fixture& binary_fixture() {
  static const Fixture f{binary_depth_two(), {{1, 2, 4}, {1, 2, 5}, {1, 3, 6}, {1, 3, 7}}};
  return f;
}

// Spider with legs 1, 1, 2.
const Fixture& fixture_five() {
  static const Fixture f = make_fixture({{0, 1}, {0, 2}, {0, 3}, {3, 4}}, {{1, 0, 3}, {2, 0, 3, 4}, {3, 4}});
  return f;
}

// Spider with legs 1, 2, 2 centred at 2.
const Fixture& fixture_six() {
  static const Fixture f =
      make_fixture({{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}}, {{0, 1, 2, 3}, {1, 2, 3, 4}, {1, 2, 5}});
  return f;
}

const Fixture& fixture_nine() {
  static const Fixture f = make_fixture({{0, 3}, {1, 3}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {5, 8}},
                                        {{0, 3, 4, 5, 6}, {1, 3, 4, 5, 6, 7}, {2, 3, 4}, {1, 3, 4, 5, 8}});
  return f;
}

std::optional<PathSystem> map_fixture(const Fixture& fx, const Tree& t) {
  if (fx.tree.order() != t.order()) return std::nullopt;
  auto iso = find_isomorphism(fx.tree, t);
  if (!iso) return std::nullopt;
  PathSystem fs;
  for (const auto& labels : fx.family) {
    Path p;
    for (int l : labels) p.vertices.push_back((*iso)[fx.tree.index_of(l)]);
    fs.paths.push_back(std::move(p));
  }
  std::sort(fs.paths.begin(), fs.paths.end());
  return fs;
}

PathSystem fixture_or_throw(const Fixture& fx, const Tree& t, const char* what) {
  auto fs = map_fixture(fx, t);
  if (!fs) {
    throw Error(ErrorCode::InternalClassificationError,
                std::string("tree without reduction pair is not the ") + what + " exception");
  }
  return *fs;
}

// Removes vertex x (by label) from every path of `from` and re-expresses the
// path in `to`. An interior x is simply skipped (its neighbours become
// adjacent through the contracted edge); an endpoint x is replaced by
// `other_label`, the end of the subdivided edge the path does not reach.
Path drop_subdivision(const Tree& from, const Path& p, int x_label, int other_label, const Tree& to) {
  std::vector<int> labels;
  for (Vertex v : p.vertices) labels.push_back(from.label(v));
  const auto it = std::find(labels.begin(), labels.end(), x_label);
  if (it != labels.end()) {
    if (labels.size() == 1 || it == labels.begin() || it + 1 == labels.end()) {
      *it = other_label;
    } else {
      labels.erase(it);
    }
  }
  Path out;
  for (int l : labels) out.vertices.push_back(to.index_of(l));
  return out;
}

// Strips a pendant vertex added to make h1 divisible by 3.
Path drop_pendant(const Tree& from, const Path& p, int x_label, const Tree& to) {
  std::vector<int> labels;
  for (Vertex v : p.vertices) {
    if (from.label(v) != x_label) labels.push_back(from.label(v));
  }
  Path out;
  for (int l : labels) out.vertices.push_back(to.index_of(l));
  return out;
}

void check_level(const Tree& t, const PathSystem& fs, const char* step, TargetKind kind = TargetKind::Edges) {
  const auto ts = TargetSet::of(t, kind);
  if (!separates_and_covers(t, fs, ts)) {
    throw Error(ErrorCode::InternalClassificationError,
                std::string(step) + " produced an invalid family on a tree of order " + std::to_string(t.order()) +
                    ": " + describe(t, separates(t, fs, ts)) + ", " + describe(t, covers(t, fs, ts)));
  }
}

PathSystem build(const Tree& t);

PathSystem leaves_on_degree_two(const Tree& t, const TreeProfile& pr) {
  const auto order = dfs_leaf_order(t, pr.leaves.front());
  std::vector<Vertex> stems;
  for (Vertex l : order) stems.push_back(t.neighbors(l)[0]);
  PathSystem fs;
  if (order.size() == 2 && stems[0] == order[1]) {
    fs.paths.push_back(Path({order[0], order[1]}));
    return fs;
  }
  if (order.size() == 2 && stems[0] == stems[1]) {
    fs.paths.push_back(Path({order[0], stems[0]}));
    fs.paths.push_back(Path({stems[1], order[1]}));
    return fs;
  }
  const std::size_t k = order.size();
  for (std::size_t i = 0; i < k; ++i) fs.paths.push_back(unique_path(t, order[i], stems[(i + 1) % k]));
  return fs;
}

PathSystem no_degree_two(const Tree& t, const TreeProfile& pr) {
  if (t.order() == 2) return PathSystem{{Path({0, 1})}};
  const int rem = pr.h1 % 3;
  if (rem == 0) return abc_construction(t);
  if (rem == 2) {
    Vertex w = 0;
    while (t.degree(w) == 1) ++w;
    auto [bigger, fresh] = add_leaf(t, w);
    const PathSystem sub = build(bigger);
    PathSystem fs;
    for (const Path& p : sub.paths) fs.paths.push_back(drop_pendant(bigger, p, fresh, t));
    return fs;
  }
  const Vertex u = pr.leaves.front();
  const Vertex w = t.neighbors(u)[0];
  if (t.degree(w) > 3) {
    const Vertex gone[] = {u};
    const Tree smaller = remove_and_join(t, gone, {});
    const PathSystem sub = build(smaller);
    PathSystem fs;
    for (const Path& p : sub.paths) fs.paths.push_back(translate(smaller, p, t));
    fs.paths.push_back(Path({u, w}));
    return fs;
  }
  std::vector<Vertex> others;
  for (Vertex y : t.neighbors(w)) {
    if (y != u) others.push_back(y);
  }
  const Vertex gone[] = {u, w};
  const Tree smaller = remove_and_join(t, gone, {{others[0], others[1]}});
  const std::vector<Expansion> ex{{t.label(others[0]), t.label(others[1]), t.label(w)}};
  const PathSystem sub = build(smaller);
  PathSystem fs;
  for (const Path& p : sub.paths) fs.paths.push_back(expand_path(smaller, p, t, ex));
  fs.paths.push_back(Path({u, w, others[0]}));
  return fs;
}

std::optional<std::pair<Vertex, Vertex>> least_non_adjacent_pair(const Tree& t, const std::vector<Vertex>& deg2) {
  for (std::size_t i = 0; i < deg2.size(); ++i) {
    for (std::size_t j = i + 1; j < deg2.size(); ++j) {
      if (!t.adjacent(deg2[i], deg2[j])) return std::make_pair(deg2[i], deg2[j]);
    }
  }
  return std::nullopt;
}

// h1 + h2 even and h1 <= h2: peel non-adjacent degree-2 pairs until h2 = h1.
PathSystem even_surplus(const Tree& t) {
  const TreeProfile pr = profile(t);
  if (pr.h2 <= pr.h1) return build(t);
  const auto pair = least_non_adjacent_pair(t, pr.deg2);
  if (!pair) {
    throw Error(ErrorCode::InternalClassificationError, "no two non-adjacent degree-2 vertices");
  }
  const auto [u, v] = *pair;
  const auto nu = t.neighbors(u);
  const auto nv = t.neighbors(v);
  const Vertex gone[] = {u, v};
  const Tree smaller = remove_and_join(t, gone, {{nu[0], nu[1]}, {nv[0], nv[1]}});
  const std::vector<Expansion> ex{{t.label(nu[0]), t.label(nu[1]), t.label(u)},
                                  {t.label(nv[0]), t.label(nv[1]), t.label(v)}};
  const PathSystem sub = even_surplus(smaller);
  PathSystem fs;
  for (const Path& p : sub.paths) fs.paths.push_back(expand_path(smaller, p, t, ex));
  fs.paths.push_back(unique_path(t, u, v));
  check_level(t, fs, "degree-2 pair removal");
  return fs;
}

PathSystem surplus_degree_two(const Tree& t, const TreeProfile& pr) {
  if ((pr.h1 + pr.h2) % 2 == 0) return even_surplus(t);
  const Edge e = t.edges().front();
  auto [bigger, fresh] = subdivide(t, e);
  const PathSystem sub = even_surplus(bigger);
  const int a = t.label(e.u);
  const int b = t.label(e.v);
  PathSystem fs;
  for (const Path& p : sub.paths) {
    // An endpoint at the subdivision vertex moves to whichever end of the
    // original edge the path does not already reach.
    std::vector<int> labels;
    for (Vertex v : p.vertices) labels.push_back(bigger.label(v));
    int other = b;
    if (labels.size() >= 2) {
      const int next = labels.front() == fresh ? labels[1] : labels[labels.size() - 2];
      other = next == a ? b : a;
    }
    fs.paths.push_back(drop_subdivision(bigger, p, fresh, other, t));
  }
  check_level(t, fs, "parity subdivision");
  return fs;
}

PathSystem with_useful_leaf(const Tree& t, const TreeProfile& pr) {
  std::optional<ReductionPair> rp;
  if (pr.h2 >= 3) {
    rp = find_reduction_pair(t, true);
    if (!rp) throw Error(ErrorCode::InternalClassificationError, "no admissible reduction pair with h2 >= 3");
  } else if (pr.h2 == 1) {
    rp = find_reduction_pair(t, false);
    if (!rp) return fixture_or_throw(fixture_five(), t, "five-vertex");
  } else {
    rp = find_reduction_pair(t, true);
    if (!rp) {
      if (find_reduction_pair(t, false)) return fixture_or_throw(fixture_nine(), t, "nine-vertex");
      return fixture_or_throw(fixture_six(), t, "six-vertex");
    }
  }
  const Reduction red = apply_reduction(t, *rp);
  return red.lift(t, build(red.reduced));
}

PathSystem build(const Tree& t) {
  if (t.order() < 2) throw Error(ErrorCode::TreeTooSmall, "an edge system needs at least one edge");
  if (t.order() == 2) return PathSystem{{Path({0, 1})}};
  if (is_binary_depth_two(t)) return *map_fixture(binary_fixture(), t);
  const TreeProfile pr = profile(t);
  PathSystem fs;
  const char* step = "";
  if (pr.h1 < pr.h2) {
    fs = surplus_degree_two(t, pr);
    step = "degree-2 surplus";
  } else if (pr.useful_leaves.empty()) {
    fs = leaves_on_degree_two(t, pr);
    step = "leaf stems";
  } else if (pr.h2 == 0) {
    fs = no_degree_two(t, pr);
    step = "no degree-2 case";
  } else {
    fs = with_useful_leaf(t, pr);
    step = "reduction";
  }
  check_level(t, fs, step);
  return fs;
}

}  // namespace

int edge_formula(int h1, int h2) { return std::max(ceil_div(2 * h1 + h2, 3), ceil_div(h1 + h2, 2)); }

int edge_optimum(const Tree& t) {
  if (t.order() < 2) return 0;
  if (t.order() == 2) return 1;
  if (is_binary_depth_two(t)) return 4;
  const TreeProfile pr = profile(t);
  return edge_formula(pr.h1, pr.h2);
}

Path expand_path(const Graph& from, const Path& p, const Graph& to, const std::vector<Expansion>& expansions) {
  Path out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const int x = from.label(p.vertices[i]);
    out.vertices.push_back(to.index_of(x));
    if (i + 1 == p.size()) break;
    const int y = from.label(p.vertices[i + 1]);
    for (const Expansion& e : expansions) {
      if ((e.a == x && e.b == y) || (e.a == y && e.b == x)) {
        out.vertices.push_back(to.index_of(e.middle));
        break;
      }
    }
  }
  return out;
}

PathSystem abc_construction(const Tree& t) {
  const TreeProfile pr = profile(t);
  if (t.order() < 3 || pr.h2 != 0 || pr.h1 % 3 != 0) {
    throw Error(ErrorCode::PreconditionViolated, "needs h2 = 0 and a leaf count divisible by 3");
  }
  const auto order = dfs_leaf_order(t, pr.leaves.front());
  const std::size_t k = order.size() / 3;
  PathSystem fs;
  for (std::size_t i = 0; i < k; ++i) fs.paths.push_back(unique_path(t, order[i], order[k + i]));
  for (std::size_t i = 0; i < k; ++i) fs.paths.push_back(unique_path(t, order[i], order[2 * k + i]));
  check_level(t, fs, "ABC construction");
  return fs;
}

PathSystem planar_construction(const Tree& t) {
  const TreeProfile pr = profile(t);
  if (pr.h2 != 0 || pr.h1 < 3) throw Error(ErrorCode::PreconditionViolated, "needs h2 = 0 and at least 3 leaves");
  const auto order = dfs_leaf_order(t, pr.leaves.front());
  PathSystem fs;
  for (std::size_t i = 0; i < order.size(); ++i) {
    fs.paths.push_back(unique_path(t, order[i], order[(i + 1) % order.size()]));
  }
  check_level(t, fs, "planar construction");
  check_level(t, fs, "planar construction", TargetKind::VerticesAndInteriorEdges);
  return fs;
}

PathSystem bunch_construction(const Tree& t) {
  const TreeProfile pr = profile(t);
  if (t.order() == 4 && pr.h1 == 3) throw Error(ErrorCode::PreconditionViolated, "K_{1,3} has no bunch system");
  if (pr.bunches.empty()) throw Error(ErrorCode::PreconditionViolated, "tree has no bunch");
  for (const Bunch& b : pr.bunches) {
    if (b.size() < 2) throw Error(ErrorCode::PreconditionViolated, "every bunch needs at least two leaves");
  }
  // Bunches in the cyclic order met by a DFS from the lowest leaf, so that
  // each connector joins neighbouring bunches of the planar drawing.
  std::vector<int> visit(static_cast<std::size_t>(t.order()), -1);
  {
    int clock = 0;
    std::vector<Vertex> stack{pr.leaves.front()};
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      if (visit[x] >= 0) continue;
      visit[x] = clock++;
      const auto nb = t.neighbors(x);
      for (auto it = nb.rbegin(); it != nb.rend(); ++it) {
        if (visit[*it] < 0) stack.push_back(*it);
      }
    }
  }
  const auto centre_visit = [&](const Bunch& b) {
    int best = t.order();
    for (Vertex v : b.vertices) {
      if (t.degree(v) > 1) best = std::min(best, visit[v]);
    }
    return best;
  };
  std::vector<Bunch> bunches = pr.bunches;
  std::stable_sort(bunches.begin(), bunches.end(),
                   [&](const Bunch& a, const Bunch& b) { return centre_visit(a) < centre_visit(b); });
  const std::size_t r = bunches.size();
  PathSystem fs;
  std::vector<Vertex> pool;
  if (r == 1) {
    pool = bunches[0].leaves;
  } else {
    for (std::size_t i = 0; i < r; ++i) {
      const auto& l = bunches[i].leaves;
      const std::size_t m = l.size();
      fs.paths.push_back(unique_path(t, l[m - 2], l[m - 1]));
      fs.paths.push_back(unique_path(t, l[m - 1], bunches[(i + 1) % r].leaves.front()));
    }
    for (const Bunch& b : bunches) {
      for (std::size_t j = 1; j + 2 < b.leaves.size(); ++j) pool.push_back(b.leaves[j]);
    }
  }
  std::size_t i = 0;
  for (; i + 3 <= pool.size(); i += 3) {
    fs.paths.push_back(unique_path(t, pool[i], pool[i + 1]));
    fs.paths.push_back(unique_path(t, pool[i + 1], pool[i + 2]));
  }
  for (; i < pool.size(); ++i) fs.paths.push_back(Path({pool[i], t.neighbors(pool[i])[0]}));
  const bool guaranteed =
      std::all_of(bunches.begin(), bunches.end(), [](const Bunch& b) { return b.size() >= 3; });
  if (guaranteed) {
    check_level(t, fs, "bunch construction");
    check_level(t, fs, "bunch construction", TargetKind::VerticesAndInteriorEdges);
  }
  return fs;
}

PathSystem Reduction::lift(const Tree& original, const PathSystem& reduced_system) const {
  PathSystem fs;
  for (const Path& p : reduced_system.paths) fs.paths.push_back(expand_path(reduced, p, original, expansions));
  fs.paths.push_back(unique_path(original, original.index_of(leaf_label), original.index_of(deg2_label)));
  return fs;
}

std::optional<ReductionPair> find_reduction_pair(const Tree& t, bool forbid_binary) {
  const TreeProfile pr = profile(t);
  for (Vertex u : pr.useful_leaves) {
    const Vertex w = t.neighbors(u)[0];
    for (Vertex v : pr.deg2) {
      ReductionPair rp{u, v, ReductionCase::DegreeAtLeast4};
      if (t.degree(w) >= 4) {
        rp.kind = ReductionCase::DegreeAtLeast4;
      } else if (t.degree(w) == 3 && !t.adjacent(v, w)) {
        rp.kind = ReductionCase::Degree3NonNeighbor;
      } else {
        continue;
      }
      if (forbid_binary && is_binary_depth_two(apply_reduction(t, rp).reduced)) continue;
      return rp;
    }
  }
  return std::nullopt;
}

Reduction apply_reduction(const Tree& t, const ReductionPair& rp) {
  const auto bad = [&](const std::string& why) {
    return Error(ErrorCode::InvalidPair, "(" + std::to_string(t.has_vertex(rp.leaf) ? t.label(rp.leaf) : rp.leaf) +
                                             "," + std::to_string(t.has_vertex(rp.deg2) ? t.label(rp.deg2) : rp.deg2) +
                                             ") " + why);
  };
  if (!t.has_vertex(rp.leaf) || !t.has_vertex(rp.deg2)) throw bad("names an unknown vertex");
  if (t.degree(rp.leaf) != 1) throw bad("first vertex is not a leaf");
  if (t.degree(rp.deg2) != 2) throw bad("second vertex does not have degree 2");
  const Vertex w = t.neighbors(rp.leaf)[0];
  const auto nv = t.neighbors(rp.deg2);
  Reduction red;
  red.leaf_label = t.label(rp.leaf);
  red.deg2_label = t.label(rp.deg2);
  red.expansions.push_back({t.label(nv[0]), t.label(nv[1]), t.label(rp.deg2)});
  if (rp.kind == ReductionCase::DegreeAtLeast4) {
    if (t.degree(w) < 4) throw bad("leaf neighbour has degree below 4");
    const Vertex gone[] = {rp.leaf, rp.deg2};
    red.reduced = remove_and_join(t, gone, {{nv[0], nv[1]}});
    return red;
  }
  if (t.degree(w) != 3) throw bad("leaf neighbour does not have degree 3");
  if (t.adjacent(w, rp.deg2)) throw bad("degree-2 vertex is adjacent to the leaf neighbour");
  std::vector<Vertex> others;
  for (Vertex y : t.neighbors(w)) {
    if (y != rp.leaf) others.push_back(y);
  }
  red.expansions.push_back({t.label(others[0]), t.label(others[1]), t.label(w)});
  const Vertex gone[] = {rp.leaf, w, rp.deg2};
  red.reduced = remove_and_join(t, gone, {{nv[0], nv[1]}, {others[0], others[1]}});
  return red;
}

PathSystem edge_system(const Tree& t) {
  PathSystem fs = build(t);
  const int expected = edge_optimum(t);
  if (static_cast<int>(fs.size()) != expected) {
    throw Error(ErrorCode::InternalClassificationError, "constructed " + std::to_string(fs.size()) +
                                                            " paths where the optimum is " + std::to_string(expected));
  }
  return fs;
}

}  // namespace pathsep
