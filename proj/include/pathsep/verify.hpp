#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "pathsep/graph.hpp"

namespace pathsep {

// A target element: a vertex or an edge of the host. Vertices order before
// edges; edges order by (min, max).
using Element = std::variant<Vertex, Edge>;

std::string format_element(const Graph& host, const Element& e);

enum class TargetKind { Edges, Vertices, VerticesAndInteriorEdges, Custom };

std::string_view to_string(TargetKind k);
// "edges" | "vertices" | "v-and-interior"; throws UsageError otherwise.
TargetKind parse_target_kind(std::string_view s);

struct TargetSet {
  TargetKind kind = TargetKind::Custom;
  std::vector<Element> elements;  // sorted, unique

  static TargetSet of(const Graph& host, TargetKind kind);
  // Throws UnknownElement if an element is not in the host.
  static TargetSet custom(const Graph& host, std::vector<Element> elements);

  bool has_vertices() const;
  std::size_t size() const { return elements.size(); }
};

// Ordered family of paths living in one host graph. Duplicates are legal.
struct PathSystem {
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  bool operator==(const PathSystem&) const = default;
};

// Sorted indices of the paths containing an element.
using Signature = std::vector<int>;

bool contains(const Path& p, const Element& e);

// Throws UnknownElement.
Signature incidence(const Graph& host, const PathSystem& fs, const Element& s);

// One signature per target element, aligned with ts.elements.
std::vector<Signature> signatures(const Graph& host, const PathSystem& fs, const TargetSet& ts);

struct SeparationVerdict {
  std::optional<std::pair<Element, Element>> witness;  // lexicographically least equal pair

  bool ok() const { return !witness.has_value(); }
};

struct CoverVerdict {
  std::optional<Element> witness;  // least element on no path

  bool ok() const { return !witness.has_value(); }
};

SeparationVerdict separates(const Graph& host, const PathSystem& fs, const TargetSet& ts);
CoverVerdict covers(const Graph& host, const PathSystem& fs, const TargetSet& ts);
bool separates_and_covers(const Graph& host, const PathSystem& fs, const TargetSet& ts);

// "Separates" / "NotSeparated(a,b)" and "Covers" / "NotCovered(x)".
std::string describe(const Graph& host, const SeparationVerdict& v);
std::string describe(const Graph& host, const CoverVerdict& v);

// Exactly one endpoint of e lies on p.
bool kisses(const Path& p, Edge e);

// Throws PreconditionViolated naming the first path that is not a path in host.
void check_paths(const Graph& host, const PathSystem& fs);

// Non-fatal findings, currently duplicate paths.
std::vector<std::string> lint(const Graph& host, const PathSystem& fs);

// Path-system document: one path per line as space separated vertex ids,
// '#' comments, blank lines ignored.
PathSystem parse_path_system(std::string_view text, const Graph& host);
std::string write_path_system(const Graph& host, const PathSystem& fs);

}  // namespace pathsep
