#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "helpers.hpp"
#include "pathsep/error.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/isomorphism.hpp"
#include "pathsep/oracle.hpp"
#include "pathsep/profile.hpp"
#include "pathsep/tree.hpp"

using namespace pathsep;
using namespace testing_helpers;

namespace {

ErrorCode parse_error(const std::string& text) {
  try {
    parse_tree(text);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("parse succeeded");
  return ErrorCode::UsageError;
}

std::string parse_detail(const std::string& text) {
  try {
    parse_tree(text);
  } catch (const Error& e) {
    return e.detail();
  }
  return "";
}

}  // namespace

TEST_CASE("parse_tree accepts edge lists with comments") {
  const Tree e1 = parse_tree("0 1\n");
  CHECK(e1.order() == 2);
  CHECK(e1.size() == 1);

  const Tree ta = parse_tree("# binary tree\n1 2\n1 3\n2 4  # left\n2 5\n\n3 6\n3 7\n");
  CHECK(ta.order() == 7);
  CHECK(ta.degree(ta.index_of(1)) == 2);
  CHECK(ta.degree(ta.index_of(2)) == 3);
  CHECK(ta.degree(ta.index_of(3)) == 3);
  for (int leaf : {4, 5, 6, 7}) CHECK(ta.degree(ta.index_of(leaf)) == 1);
  CHECK(is_binary_depth_two(ta));
}

TEST_CASE("parse_tree rejects malformed documents") {
  CHECK(parse_error("0 1\n1 2\n2 3\n0 2\n") == ErrorCode::HasCycle);
  CHECK(parse_error("0 1\n1 x\n") == ErrorCode::BadToken);
  CHECK(parse_error("0 1 2\n") == ErrorCode::BadToken);
  CHECK(parse_error("0 1\n1 0\n") == ErrorCode::DuplicateEdge);
  CHECK(parse_error("0 1\n2 3\n") == ErrorCode::NotConnected);
  CHECK(parse_error("# nothing\n") == ErrorCode::BadToken);
  CHECK(parse_error("4 4\n") == ErrorCode::HasCycle);
  CHECK(parse_detail("0 1\n1 2\n2 3\n0 2\n").find("line 4") != std::string::npos);
  CHECK(parse_detail("0 1\n\n1 q\n").find("line 3") != std::string::npos);
}

TEST_CASE("write_tree round-trips and emit_dot lists sorted edges") {
  const Tree ta = named_tree("TA");
  const std::string text = write_tree(ta);
  CHECK(text == "1 2\n1 3\n2 4\n2 5\n3 6\n3 7\n");
  CHECK(parse_tree(text) == ta);
  CHECK(emit_dot(named_tree("P3")) == "graph T {\n  0 -- 1;\n  1 -- 2;\n}\n");
}

TEST_CASE("profile of the named fixtures") {
  SUBCASE("P4") {
    const Tree t = named_tree("P4");
    const TreeProfile p = profile(t);
    CHECK(p.h1 == 2);
    CHECK(p.h2 == 2);
    CHECK(p.set_i.empty());
    CHECK(p.h2star == 2);
    REQUIRE(p.bare_paths.size() == 1);
    CHECK(format_path(t, p.bare_paths[0]) == "0-1-2-3");
  }
  SUBCASE("TA") {
    const Tree t = named_tree("TA");
    const TreeProfile p = profile(t);
    CHECK(p.h1 == 4);
    CHECK(p.h2 == 1);
    REQUIRE(p.interior_edges.size() == 2);
    CHECK(format_element(t, p.interior_edges[0]) == "(1,2)");
    CHECK(format_element(t, p.interior_edges[1]) == "(1,3)");
    std::vector<std::string> bare;
    for (const Path& b : p.bare_paths) bare.push_back(format_path(t, b));
    CHECK(bare == std::vector<std::string>{"2-1-3", "2-4", "2-5", "3-6", "3-7"});
    REQUIRE(p.set_i.size() == 1);
    CHECK(format_path(t, p.bare_paths[p.set_i[0]]) == "2-1-3");
    CHECK(p.h2star == 0);
    REQUIRE(p.bunches.size() == 2);
    CHECK(labels_of(t, p.bunches[0].vertices) == std::vector<int>{2, 4, 5});
    CHECK(labels_of(t, p.bunches[1].vertices) == std::vector<int>{3, 6, 7});
    CHECK(p.bunches[0].size() == 2);
    CHECK(p.bunches[1].size() == 2);
  }
  SUBCASE("HUB") {
    const TreeProfile p = profile(named_tree("HUB"));
    CHECK(p.h1 == 4);
    CHECK(p.h2 == 2);
    CHECK(p.set_i.size() == 1);
    CHECK(p.h2star == 1);
  }
  SUBCASE("K13") {
    const TreeProfile p = profile(named_tree("K13"));
    CHECK(p.h1 == 3);
    CHECK(p.h2 == 0);
    CHECK(p.interior_edges.empty());
    REQUIRE(p.bunches.size() == 1);
    CHECK(p.bunches[0].size() == 3);
  }
  SUBCASE("single vertex") {
    const TreeProfile p = profile(Tree::single_vertex(0));
    CHECK(p.h1 == 0);
    CHECK(p.h2 == 0);
  }
}

TEST_CASE("unique_path examples and reversal symmetry") {
  const Tree p4 = named_tree("P4");
  CHECK(format_path(p4, unique_path(p4, 0, 3)) == "0-1-2-3");
  const Tree ta = named_tree("TA");
  CHECK(format_path(ta, unique_path(ta, ta.index_of(4), ta.index_of(6))) == "4-2-1-3-6");
  const Tree k13 = named_tree("K13");
  CHECK(format_path(k13, unique_path(k13, 2, 2)) == "2");
  CHECK_THROWS_AS(unique_path(k13, 0, 9), Error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    const Tree t = random_tree(2 + i, rng);
    for (Vertex u = 0; u < t.order(); u += 3) {
      for (Vertex v = 0; v < t.order(); v += 2) {
        const Path a = unique_path(t, u, v);
        CHECK(t.is_path(a));
        CHECK(a.reversed() == unique_path(t, v, u));
      }
    }
  }
}

TEST_CASE("dfs_leaf_order examples") {
  const Tree k13 = named_tree("K13");
  CHECK(dfs_leaf_order(k13, 1) == std::vector<Vertex>{1, 2, 3});
  const Tree ds6 = named_tree("DS6");
  CHECK(labels_of(ds6, dfs_leaf_order(ds6, ds6.index_of(2))) == std::vector<int>{2, 5, 6, 7, 3, 4});
  CHECK(dfs_leaf_order(named_tree("E1"), 0) == std::vector<Vertex>{0, 1});
  try {
    dfs_leaf_order(k13, 0);
    FAIL("expected NotALeaf");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotALeaf);
  }
}

TEST_CASE("every dfs leaf order is a planar cyclic order") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 40; ++i) {
    const Tree t = i % 2 ? random_contracted_tree(30, rng) : random_tree(3 + i, rng);
    const TreeProfile p = profile(t);
    for (Vertex start : p.leaves) {
      const auto order = dfs_leaf_order(t, start);
      REQUIRE(order.size() == static_cast<std::size_t>(p.h1));
      CHECK(order.front() == start);
      CHECK(std::set<Vertex>(order.begin(), order.end()).size() == order.size());
      // Leaves on one side of any edge occupy a cyclic interval of the order.
      for (Edge e : t.edges()) {
        std::vector<char> side(order.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
          side[k] = unique_path(t, order[k], e.u).contains(e.v) ? 1 : 0;
        }
        int changes = 0;
        for (std::size_t k = 0; k < side.size(); ++k) changes += side[k] != side[(k + 1) % side.size()] ? 1 : 0;
        CHECK(changes <= 2);
      }
    }
  }
}

TEST_CASE("contract_bare_paths examples") {
  const Tree hub = named_tree("HUB");
  const Contraction c = contract_bare_paths(hub);
  CHECK(c.tree.label_edges() == std::vector<std::pair<int, int>>{{0, 3}, {0, 4}, {0, 5}, {3, 6}, {3, 7}});
  const Edge e03 = Edge::make(c.tree.index_of(0), c.tree.index_of(3));
  CHECK(format_path(hub, c.expand(e03)) == "0-1-2-3");

  const Tree k13 = named_tree("K13");
  const Contraction ck = contract_bare_paths(k13);
  CHECK(ck.tree == k13);

  const Tree p4 = named_tree("P4");
  const Contraction cp = contract_bare_paths(p4);
  CHECK(cp.tree.labels() == std::vector<int>{0, 3});
  CHECK(format_path(p4, cp.expand(cp.tree.edges()[0])) == "0-1-2-3");
}

TEST_CASE("bare path and h2star invariants on every small tree and random trees") {
  std::vector<Tree> trees;
  for (int n = 2; n <= 9; ++n) {
    for (Tree& t : enumerate_trees(n)) trees.push_back(std::move(t));
  }
  for (Tree& t : random_tree_suite(90, 40, 3)) trees.push_back(std::move(t));
  for (const Tree& t : trees) {
    const TreeProfile p = profile(t);
    std::size_t total = 0;
    std::set<Edge> seen;
    for (const Path& b : p.bare_paths) {
      total += b.length();
      CHECK(b.front() < b.back());
      for (std::size_t i = 1; i + 1 < b.size(); ++i) CHECK(t.degree(b.vertices[i]) == 2);
      CHECK(t.degree(b.front()) != 2);
      CHECK(t.degree(b.back()) != 2);
      for (Edge e : b.edges()) CHECK(seen.insert(e).second);
    }
    CHECK(total == t.size());
    CHECK(p.h2star == p.h2 - static_cast<int>(p.set_i.size()));
    CHECK(p.h2star == h2star_by_sum(p.bare_paths, p.leaves));
    CHECK(p.h2star >= 0);
    CHECK(p.h2star <= p.h2);

    const Contraction c = contract_bare_paths(t);
    const TreeProfile cp = profile(c.tree);
    CHECK(cp.h2 == 0);
    CHECK(cp.h1 == p.h1);
    std::set<Edge> recovered;
    for (Edge e : c.tree.edges()) {
      for (Edge x : c.expand(e).edges()) recovered.insert(x);
    }
    CHECK(recovered == std::set<Edge>(t.edges().begin(), t.edges().end()));
  }
}

TEST_CASE("surgery helpers preserve labels") {
  const Tree p4 = named_tree("P4");
  auto [sub, fresh] = subdivide(p4, Edge{0, 1});
  CHECK(fresh == 4);
  CHECK(sub.order() == 5);
  CHECK(sub.has_edge(Edge::make(sub.index_of(0), sub.index_of(4))));
  auto [grown, leaf] = add_leaf(p4, 1);
  CHECK(leaf == 4);
  CHECK(grown.degree(grown.index_of(1)) == 3);
  const Vertex gone[] = {1};
  const Tree joined = remove_and_join(p4, gone, {{0, 2}});
  CHECK(joined.label_edges() == std::vector<std::pair<int, int>>{{0, 2}, {2, 3}});
}

TEST_CASE("isomorphism finds a mapping onto relabelled copies") {
  const Tree ta = named_tree("TA");
  const Tree shuffled = Tree::from_label_edges({{10, 3}, {10, 8}, {3, 0}, {3, 5}, {8, 2}, {8, 9}});
  CHECK(isomorphic(ta, shuffled));
  const auto iso = find_isomorphism(ta, shuffled);
  REQUIRE(iso.has_value());
  for (Edge e : ta.edges()) CHECK(shuffled.adjacent((*iso)[e.u], (*iso)[e.v]));
  CHECK_FALSE(isomorphic(ta, named_tree("HUB")));
}
