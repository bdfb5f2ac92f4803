#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "pathsep/edge_systems.hpp"
#include "pathsep/error.hpp"
#include "pathsep/fault.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/isomorphism.hpp"
#include "pathsep/oracle.hpp"
#include "pathsep/profile.hpp"
#include "pathsep/random_graphs.hpp"
#include "pathsep/vertex_systems.hpp"

using namespace pathsep;

namespace {

constexpr std::uint64_t kMasterSeed = 20231117;
constexpr double kMinSuccessRate = 0.9;

// Collects the first few failures of one criterion.
class Tally {
 public:
  void fail(const std::string& what) {
    if (failures_++ < 5) notes_ << (notes_.tellp() > 0 ? "; " : "") << what;
  }
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) fail(what);
  }
  bool ok() const { return failures_ == 0; }
  std::string summary() const {
    std::ostringstream s;
    s << checks_ << " checks, " << failures_ << " failed";
    if (failures_ > 0) s << " [" << notes_.str() << (failures_ > 5 ? "; ..." : "") << "]";
    return s.str();
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::ostringstream notes_;
};

std::string edge_list(const Tree& t) {
  std::ostringstream s;
  const auto edges = t.label_edges();
  for (std::size_t i = 0; i < edges.size(); ++i) s << (i ? " " : "") << edges[i].first << '-' << edges[i].second;
  return s.str();
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

// Bare two-term formula with the depth-two binary tree as the only exception.
int formula_value(const Tree& t) {
  if (is_binary_depth_two(t)) return 4;
  const TreeProfile p = profile(t);
  return edge_formula(p.h1, p.h2);
}

bool clean(const Graph& g, const PathSystem& fs, TargetKind k) {
  return separates_and_covers(g, fs, TargetSet::of(g, k));
}

std::vector<Tree> trees_between(int lo, int hi) {
  std::vector<Tree> out;
  for (int n = lo; n <= hi; ++n) {
    for (Tree& t : enumerate_trees(n)) out.push_back(std::move(t));
  }
  return out;
}

void criterion_1(Tally& t) {
  const auto trees = trees_between(2, 9);
  t.check(trees.size() == 94, "tree count " + std::to_string(trees.size()));
  for (const Tree& tree : trees) {
    const PathSystem fs = edge_system(tree);
    const int want = formula_value(tree);
    t.check(static_cast<int>(fs.size()) == want, "size " + std::to_string(fs.size()) + " vs formula " +
                                                     std::to_string(want) + " on " + edge_list(tree));
    t.check(clean(tree, fs, TargetKind::Edges), "not verifier-clean on " + edge_list(tree));
  }
}

void criterion_2(Tally& t) {
  for (const Tree& tree : trees_between(2, 8)) {
    const int best = min_separating(tree, TargetSet::of(tree, TargetKind::Edges)).size;
    const int want = formula_value(tree);
    t.check(best == want,
            "oracle " + std::to_string(best) + " vs formula " + std::to_string(want) + " on " + edge_list(tree));
  }
}

void criterion_3(Tally& t) {
  for (const Tree& tree : trees_between(2, 8)) {
    const TreeProfile p = profile(tree);
    const int best = min_separating(tree, TargetSet::of(tree, TargetKind::Vertices)).size;
    t.check(vertex_lower_bound(p) <= best, "lower bound above oracle on " + edge_list(tree));
    if (!vertex_system_supported(tree)) continue;
    const PathSystem fs = vertex_system(tree);
    const int size = static_cast<int>(fs.size());
    t.check(best <= size && size <= ceil_div(2 * p.h1, 3) + ceil_div(p.h2star + 1, 2),
            "sandwich broken on " + edge_list(tree));
    t.check(clean(tree, fs, TargetKind::Vertices), "vertex system not clean on " + edge_list(tree));
  }
}

void criterion_4(Tally& t) {
  for (int n = 2; n <= 9; ++n) {
    const Tree p = path_tree(n);
    std::vector<Vertex> run;
    for (Vertex v = 0; v < n; ++v) run.push_back(v);
    const PathSystem fs = sliding_window_cover(p, run);
    const int want = ceil_div(n + 1, 2);
    t.check(static_cast<int>(fs.size()) == want && clean(p, fs, TargetKind::Vertices),
            "sliding window on P" + std::to_string(n));
    t.check(min_separating(p, TargetSet::of(p, TargetKind::Vertices)).size == want, "oracle on P" + std::to_string(n));
  }
  int c13 = 0;
  for (const Tree& tree : c13_family(9)) {
    ++c13;
    const TreeProfile p = profile(tree);
    const int best = min_separating(tree, TargetSet::of(tree, TargetKind::VerticesAndInteriorEdges)).size;
    t.check(best == p.h1 && p.h1 == static_cast<int>(p.interior_edges.size()) + 3, "C13 oracle on " + edge_list(tree));
    const PathSystem fs = planar_construction(tree);
    t.check(static_cast<int>(fs.size()) == p.h1 && clean(tree, fs, TargetKind::VerticesAndInteriorEdges),
            "planar on C13 " + edge_list(tree));
  }
  t.check(c13 > 0, "empty C13 family");
  int starred = 0;
  for (const Tree& base : c13_family(7)) {
    ++starred;
    const Tree s = subdivide_interior_edges(base);
    const int best = min_separating(s, TargetSet::of(s, TargetKind::Vertices)).size;
    t.check(is_c13_star(s) && best == profile(s).h1, "C13* oracle on " + edge_list(s));
  }
  t.check(starred > 0, "empty C13* family");
}

void criterion_5(Tally& t) {
  int abc = 0;
  int planar = 0;
  int bunch = 0;
  for (const Tree& tree : random_tree_suite(200, 40, kMasterSeed)) {
    const TreeProfile p = profile(tree);
    const std::string where = " on " + edge_list(tree);
    if (tree.order() >= 3 && p.h2 == 0 && p.h1 % 3 == 0) {
      ++abc;
      const PathSystem fs = abc_construction(tree);
      t.check(static_cast<int>(fs.size()) == 2 * p.h1 / 3 && clean(tree, fs, TargetKind::Edges), "ABC" + where);
    }
    if (p.h2 == 0 && p.h1 >= 3) {
      ++planar;
      const PathSystem fs = planar_construction(tree);
      bool doubled = true;
      for (Edge e : tree.edges()) doubled = doubled && incidence(tree, fs, e).size() == 2;
      t.check(static_cast<int>(fs.size()) == p.h1 && doubled && clean(tree, fs, TargetKind::Edges) &&
                  clean(tree, fs, TargetKind::VerticesAndInteriorEdges),
              "planar" + where);
    }
    bool bunches_three = p.h2 == 0 && !p.bunches.empty() && !(tree.order() == 4 && p.h1 == 3);
    for (const Bunch& b : p.bunches) bunches_three = bunches_three && b.size() >= 3;
    if (bunches_three) {
      ++bunch;
      const PathSystem fs = bunch_construction(tree);
      t.check(static_cast<int>(fs.size()) == ceil_div(2 * p.h1, 3) && clean(tree, fs, TargetKind::Edges) &&
                  clean(tree, fs, TargetKind::VerticesAndInteriorEdges),
              "bunch" + where);
    }
  }
  t.check(abc > 0, "no tree met the ABC precondition");
  t.check(planar > 0, "no tree met the planar precondition");
  t.check(bunch > 0, "no tree met the bunch precondition");
  std::cout << "  filtered: abc " << abc << ", planar " << planar << ", bunch " << bunch << '\n';
}

void criterion_6(Tally& t) {
  for (int n : {64, 128, 256}) {
    const ExperimentStats sup = run_experiment({n, supercritical_p(n), 50, kMasterSeed});
    t.check(sup.success_rate >= kMinSuccessRate, "n=" + std::to_string(n) + " success rate " +
                                                     std::to_string(sup.success_rate));
    const int cap = ceil_log2(static_cast<std::uint64_t>(n)) + 1;
    for (const TrialRecord& r : sup.trials) {
      if (!r.success) continue;
      const Graph g = gen_gnp(n, supercritical_p(n), r.seed);
      t.check(clean(g, r.system, TargetKind::Vertices) && static_cast<int>(r.system.size()) <= cap,
              "n=" + std::to_string(n) + " trial seed " + std::to_string(r.seed));
    }
    const ExperimentStats sub = run_experiment({n, subcritical_p(n), 50, kMasterSeed});
    t.check(sub.mean_isolated >= std::log(static_cast<double>(n)),
            "n=" + std::to_string(n) + " mean isolated " + std::to_string(sub.mean_isolated));
    std::cout << "  n=" << n << ": success rate " << sup.success_rate << ", mean isolated " << sub.mean_isolated
              << " (ln n = " << std::log(static_cast<double>(n)) << ")\n";
  }
}

void round_trip(Tally& t, const Tree& tree, const PathSystem& fs, TargetKind kind) {
  const TargetSet ts = TargetSet::of(tree, kind);
  const SignatureTable table = signature_table(tree, fs, ts);
  t.check(decode(table, simulate_probes(tree, fs, std::nullopt)).kind == DiagnosisKind::NoFault,
          "all-pass report on " + edge_list(tree));
  for (const Element& e : ts.elements) {
    const Diagnosis d = decode(table, simulate_probes(tree, fs, e));
    t.check(d.kind == DiagnosisKind::Identified && d.element == e, "fault not recovered on " + edge_list(tree));
  }
}

void criterion_7(Tally& t) {
  for (const Tree& tree : trees_between(2, 9)) {
    round_trip(t, tree, edge_system(tree), TargetKind::Edges);
    if (vertex_system_supported(tree)) round_trip(t, tree, vertex_system(tree), TargetKind::Vertices);
  }
}

void criterion_8(Tally& t) {
  for (int n = 2; n <= 4096; ++n) {
    const SetSystem s = separating_set_system(n);
    const std::string where = "n=" + std::to_string(n);
    t.check(static_cast<int>(s.blocks.size()) <= ceil_log2(static_cast<std::uint64_t>(n)) + 1, where + " block count");
    std::vector<std::uint64_t> code(static_cast<std::size_t>(n), 0);
    for (std::size_t b = 0; b < s.blocks.size(); ++b) {
      for (int x : s.blocks[b]) code[static_cast<std::size_t>(x)] |= std::uint64_t{1} << b;
    }
    const std::set<std::uint64_t> distinct(code.begin(), code.end());
    t.check(static_cast<int>(distinct.size()) == n && !distinct.contains(0), where + " signatures");
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Tally&)>>> criteria{
      {"edge systems match the formula on all 94 trees with 2 <= n <= 9", criterion_1},
      {"oracle matches the formula on all trees with 2 <= n <= 8", criterion_2},
      {"vertex sandwich on all trees with 2 <= n <= 8", criterion_3},
      {"sharp families: paths, C13 with V and E*, C13* with V", criterion_4},
      {"ABC, planar and bunch constructions on 200 random trees", criterion_5},
      {"random-graph regimes for n in {64, 128, 256}, 50 trials each", criterion_6},
      {"single-fault round trip on all trees with n <= 9", criterion_7},
      {"separating set systems for 2 <= n <= 4096", criterion_8},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Tally tally;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[i].second(tally);
    } catch (const Error& e) {
      tally.fail(std::string(e.name()) + ": " + e.detail());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failed += tally.ok() ? 0 : 1;
    std::cout << (tally.ok() ? "PASS" : "FAIL") << " criterion " << i + 1 << ": " << criteria[i].first << " ("
              << tally.summary() << ", " << secs << " s)" << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
