#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "pathsep/edge_systems.hpp"
#include "pathsep/fault.hpp"
#include "pathsep/generators.hpp"
#include "pathsep/oracle.hpp"
#include "pathsep/vertex_systems.hpp"

using namespace pathsep;
using namespace testing_helpers;

namespace {

void check_round_trip(const Tree& t, const PathSystem& fs, TargetKind kind) {
  const TargetSet ts = TargetSet::of(t, kind);
  const SignatureTable table = signature_table(t, fs, ts);
  CHECK(decode(table, simulate_probes(t, fs, std::nullopt)).kind == DiagnosisKind::NoFault);
  for (const Element& e : ts.elements) {
    const Diagnosis d = decode(table, simulate_probes(t, fs, e));
    CHECK(d.kind == DiagnosisKind::Identified);
    CHECK(d.element == e);
  }
}

}  // namespace

TEST_CASE("signature tables") {
  const Tree p3 = named_tree("P3");
  const PathSystem fs = ls(p3, {{0, 1}, {1, 2}});
  const SignatureTable table = signature_table(p3, fs, TargetSet::of(p3, TargetKind::Edges));
  CHECK(table.path_count == 2);
  REQUIRE(table.rows.size() == 2);
  CHECK(*table.find(edge_el(p3, 0, 1)) == Signature{0});
  CHECK(*table.find(edge_el(p3, 1, 2)) == Signature{1});
  CHECK(table.find(Element{Vertex{0}}) == nullptr);

  const Tree ta = named_tree("TA");
  const SignatureTable tat = signature_table(ta, edge_system(ta), TargetSet::of(ta, TargetKind::Edges));
  std::set<Signature> distinct;
  for (const auto& [e, s] : tat.rows) {
    CHECK_FALSE(s.empty());
    distinct.insert(s);
  }
  CHECK(distinct.size() == 6);

  const Tree p4 = named_tree("P4");
  CHECK(code_of([&] { signature_table(p4, ls(p4, {{0, 1, 2, 3}}), TargetSet::of(p4, TargetKind::Vertices)); }) ==
        ErrorCode::NotSeparating);
  CHECK(code_of([&] { signature_table(p3, ls(p3, {{0, 1}}), TargetSet::of(p3, TargetKind::Edges)); }) ==
        ErrorCode::NotCovering);
}

TEST_CASE("probe simulation") {
  const Tree p3 = named_tree("P3");
  const PathSystem fs = ls(p3, {{0, 1}, {1, 2}});
  CHECK(simulate_probes(p3, fs, edge_el(p3, 0, 1)).outcomes == std::vector<bool>{false, true});
  CHECK(simulate_probes(p3, fs, std::nullopt).outcomes == std::vector<bool>{true, true});
  CHECK(simulate_probes(p3, fs, Element{Vertex{1}}).outcomes == std::vector<bool>{false, false});

  const Tree ds6 = named_tree("DS6");
  const PathSystem vs = vertex_system(ds6);
  const Vertex zero = ds6.index_of(0);
  const ProbeReport r = simulate_probes(ds6, vs, Element{zero});
  const Signature inc = incidence(ds6, vs, zero);
  for (std::size_t i = 0; i < vs.size(); ++i) {
    const bool hit = std::find(inc.begin(), inc.end(), static_cast<int>(i)) != inc.end();
    CHECK(r.outcomes[i] == !hit);
  }
}

TEST_CASE("report text") {
  CHECK(parse_report("FP").outcomes == std::vector<bool>{false, true});
  CHECK(format_report(ProbeReport{{true, false, true}}) == "PFP");
  CHECK(parse_report(" P F\n").outcomes == std::vector<bool>{true, false});
  CHECK(code_of([] { parse_report("PX"); }) == ErrorCode::BadToken);
}

TEST_CASE("decoding") {
  const Tree p3 = named_tree("P3");
  const PathSystem fs = ls(p3, {{0, 1}, {1, 2}});
  const SignatureTable table = signature_table(p3, fs, TargetSet::of(p3, TargetKind::Edges));
  const Diagnosis one = decode(table, parse_report("FP"));
  CHECK(one.kind == DiagnosisKind::Identified);
  CHECK(one.element == edge_el(p3, 0, 1));
  CHECK(one.failed == std::vector<int>{0});
  CHECK(decode(table, parse_report("PP")).kind == DiagnosisKind::NoFault);
  const Diagnosis two = decode(table, parse_report("FF"));
  CHECK(two.kind == DiagnosisKind::Inconsistent);
  CHECK_FALSE(two.element.has_value());
  CHECK(two.failed == std::vector<int>{0, 1});
  CHECK(decode(table, parse_report("F")).kind == DiagnosisKind::Inconsistent);
}

TEST_CASE("decode only identifies literal signatures") {
  const Tree ta = named_tree("TA");
  const PathSystem fs = edge_system(ta);
  const SignatureTable table = signature_table(ta, fs, TargetSet::of(ta, TargetKind::Edges));
  std::set<Signature> sigs;
  for (const auto& [e, s] : table.rows) sigs.insert(s);
  for (unsigned mask = 1; mask < (1u << fs.size()); ++mask) {
    ProbeReport r;
    Signature failed;
    for (std::size_t i = 0; i < fs.size(); ++i) {
      r.outcomes.push_back(((mask >> i) & 1u) == 0);
      if ((mask >> i) & 1u) failed.push_back(static_cast<int>(i));
    }
    const Diagnosis d = decode(table, r);
    CHECK((d.kind == DiagnosisKind::Identified) == sigs.contains(failed));
  }
}

TEST_CASE("single faults round trip on every tree up to nine vertices") {
  for (int n = 2; n <= 9; ++n) {
    for (const Tree& t : enumerate_trees(n)) {
      check_round_trip(t, edge_system(t), TargetKind::Edges);
      if (vertex_system_supported(t)) check_round_trip(t, vertex_system(t), TargetKind::Vertices);
    }
  }
}
