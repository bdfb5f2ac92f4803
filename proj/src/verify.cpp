#include "pathsep/verify.hpp"

#include <algorithm>
#include <map>

#include "pathsep/error.hpp"
#include "pathsep/tree.hpp"

namespace pathsep {

std::string format_element(const Graph& host, const Element& e) {
  if (const auto* v = std::get_if<Vertex>(&e)) return std::to_string(host.label(*v));
  const Edge& ed = std::get<Edge>(e);
  return "(" + std::to_string(host.label(ed.u)) + "," + std::to_string(host.label(ed.v)) + ")";
}

std::string_view to_string(TargetKind k) {
  switch (k) {
    case TargetKind::Edges: return "edges";
    case TargetKind::Vertices: return "vertices";
    case TargetKind::VerticesAndInteriorEdges: return "v-and-interior";
    case TargetKind::Custom: return "custom";
  }
  return "custom";
}

TargetKind parse_target_kind(std::string_view s) {
  if (s == "edges") return TargetKind::Edges;
  if (s == "vertices") return TargetKind::Vertices;
  if (s == "v-and-interior") return TargetKind::VerticesAndInteriorEdges;
  throw Error(ErrorCode::UsageError, "unknown target '" + std::string(s) + "'");
}

TargetSet TargetSet::of(const Graph& host, TargetKind kind) {
  TargetSet ts;
  ts.kind = kind;
  if (kind == TargetKind::Vertices || kind == TargetKind::VerticesAndInteriorEdges) {
    for (Vertex v = 0; v < host.order(); ++v) ts.elements.emplace_back(v);
  }
  for (Edge e : host.edges()) {
    if (kind == TargetKind::Edges) ts.elements.emplace_back(e);
    if (kind == TargetKind::VerticesAndInteriorEdges && host.degree(e.u) > 1 && host.degree(e.v) > 1) {
      ts.elements.emplace_back(e);
    }
  }
  if (kind == TargetKind::Custom) throw Error(ErrorCode::UsageError, "custom targets need explicit elements");
  return ts;
}

TargetSet TargetSet::custom(const Graph& host, std::vector<Element> elements) {
  for (const auto& e : elements) {
    bool ok = std::holds_alternative<Vertex>(e) ? host.has_vertex(std::get<Vertex>(e)) : host.has_edge(std::get<Edge>(e));
    if (!ok) throw Error(ErrorCode::UnknownElement, "target element not in host");
  }
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  return TargetSet{TargetKind::Custom, std::move(elements)};
}

bool TargetSet::has_vertices() const {
  return std::any_of(elements.begin(), elements.end(), [](const Element& e) { return std::holds_alternative<Vertex>(e); });
}

bool contains(const Path& p, const Element& e) {
  return std::visit([&](const auto& x) { return p.contains(x); }, e);
}

Signature incidence(const Graph& host, const PathSystem& fs, const Element& s) {
  bool ok = std::holds_alternative<Vertex>(s) ? host.has_vertex(std::get<Vertex>(s)) : host.has_edge(std::get<Edge>(s));
  if (!ok) throw Error(ErrorCode::UnknownElement, "element not in host");
  Signature sig;
  for (int i = 0; i < static_cast<int>(fs.paths.size()); ++i) {
    if (contains(fs.paths[i], s)) sig.push_back(i);
  }
  return sig;
}

std::vector<Signature> signatures(const Graph& host, const PathSystem& fs, const TargetSet& ts) {
  std::vector<int> vertex_slot(static_cast<std::size_t>(host.order()), -1);
  std::vector<std::pair<Edge, int>> edge_slot;
  for (int k = 0; k < static_cast<int>(ts.elements.size()); ++k) {
    if (const auto* v = std::get_if<Vertex>(&ts.elements[k])) {
      vertex_slot[*v] = k;
    } else {
      edge_slot.emplace_back(std::get<Edge>(ts.elements[k]), k);
    }
  }
  // ts.elements is sorted, so edge_slot is sorted by edge.
  std::vector<Signature> sigs(ts.elements.size());
  for (int i = 0; i < static_cast<int>(fs.paths.size()); ++i) {
    const auto& vs = fs.paths[i].vertices;
    for (std::size_t j = 0; j < vs.size(); ++j) {
      if (vertex_slot[vs[j]] >= 0) sigs[vertex_slot[vs[j]]].push_back(i);
      if (j > 0 && !edge_slot.empty()) {
        Edge e = Edge::make(vs[j - 1], vs[j]);
        auto it = std::lower_bound(edge_slot.begin(), edge_slot.end(), e,
                                   [](const auto& a, const Edge& b) { return a.first < b; });
        if (it != edge_slot.end() && it->first == e) sigs[it->second].push_back(i);
      }
    }
  }
  return sigs;
}

SeparationVerdict separates(const Graph& host, const PathSystem& fs, const TargetSet& ts) {
  auto sigs = signatures(host, fs, ts);
  std::map<Signature, std::vector<int>> classes;
  for (int k = 0; k < static_cast<int>(sigs.size()); ++k) classes[sigs[k]].push_back(k);
  std::optional<std::pair<int, int>> best;
  for (const auto& [sig, members] : classes) {
    if (members.size() < 2) continue;
    std::pair<int, int> cand{members[0], members[1]};
    if (!best || cand < *best) best = cand;
  }
  SeparationVerdict v;
  if (best) v.witness = std::make_pair(ts.elements[best->first], ts.elements[best->second]);
  return v;
}

CoverVerdict covers(const Graph& host, const PathSystem& fs, const TargetSet& ts) {
  auto sigs = signatures(host, fs, ts);
  CoverVerdict v;
  for (std::size_t k = 0; k < sigs.size(); ++k) {
    if (sigs[k].empty()) {
      v.witness = ts.elements[k];
      break;
    }
  }
  return v;
}

bool separates_and_covers(const Graph& host, const PathSystem& fs, const TargetSet& ts) {
  return separates(host, fs, ts).ok() && covers(host, fs, ts).ok();
}

std::string describe(const Graph& host, const SeparationVerdict& v) {
  if (v.ok()) return "Separates";
  return "NotSeparated(" + format_element(host, v.witness->first) + "," + format_element(host, v.witness->second) + ")";
}

std::string describe(const Graph& host, const CoverVerdict& v) {
  if (v.ok()) return "Covers";
  return "NotCovered(" + format_element(host, *v.witness) + ")";
}

bool kisses(const Path& p, Edge e) { return p.contains(e.u) != p.contains(e.v); }

void check_paths(const Graph& host, const PathSystem& fs) {
  for (std::size_t i = 0; i < fs.paths.size(); ++i) {
    if (!host.is_path(fs.paths[i])) {
      throw Error(ErrorCode::PreconditionViolated, "path " + std::to_string(i) + " is not a path in the host");
    }
  }
}

std::vector<std::string> lint(const Graph& host, const PathSystem& fs) {
  std::vector<std::string> out;
  std::map<std::vector<Vertex>, std::size_t> first;
  for (std::size_t i = 0; i < fs.paths.size(); ++i) {
    auto key = fs.paths[i].vertices;
    if (!key.empty() && key.back() < key.front()) std::reverse(key.begin(), key.end());
    auto [it, inserted] = first.emplace(key, i);
    if (!inserted) {
      out.push_back("duplicate path " + std::to_string(i) + " (" + format_path(host, fs.paths[i]) + ") repeats path " +
                    std::to_string(it->second));
    }
  }
  return out;
}

}  // namespace pathsep
