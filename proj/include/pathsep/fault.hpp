#pragma once

#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "pathsep/graph.hpp"
#include "pathsep/verify.hpp"

namespace pathsep {

struct SignatureTable {
  std::size_t path_count = 0;
  std::vector<std::pair<Element, Signature>> rows;  // in target order

  const Signature* find(const Element& e) const;
};

// Throws NotSeparating or NotCovering with the witness in the detail.
SignatureTable signature_table(const Graph& host, const PathSystem& fs, const TargetSet& ts);

// outcomes[i] is true when probe i passes.
struct ProbeReport {
  std::vector<bool> outcomes;
};

ProbeReport simulate_probes(const Graph& host, const PathSystem& fs, const std::optional<Element>& fault);

// 'P' and 'F' characters, one per path.
ProbeReport parse_report(std::string_view text);
std::string format_report(const ProbeReport& r);

enum class DiagnosisKind { NoFault, Identified, Inconsistent };

std::string_view to_string(DiagnosisKind k);

struct Diagnosis {
  DiagnosisKind kind = DiagnosisKind::NoFault;
  std::optional<Element> element;
  std::vector<int> failed;  // indices of failing probes

  bool operator==(const Diagnosis&) const = default;
};

Diagnosis decode(const SignatureTable& table, const ProbeReport& report);

}  // namespace pathsep
