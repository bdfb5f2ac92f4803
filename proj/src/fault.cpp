#include "pathsep/fault.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "pathsep/error.hpp"

namespace pathsep {

const Signature* SignatureTable::find(const Element& e) const {
  for (const auto& [el, sig] : rows) {
    if (el == e) return &sig;
  }
  return nullptr;
}

SignatureTable signature_table(const Graph& host, const PathSystem& fs, const TargetSet& ts) {
  const auto sep = separates(host, fs, ts);
  if (!sep.ok()) throw Error(ErrorCode::NotSeparating, describe(host, sep));
  const auto cov = covers(host, fs, ts);
  if (!cov.ok()) throw Error(ErrorCode::NotCovering, describe(host, cov));
  SignatureTable table;
  table.path_count = fs.size();
  const auto sigs = signatures(host, fs, ts);
  for (std::size_t i = 0; i < ts.size(); ++i) table.rows.emplace_back(ts.elements[i], sigs[i]);
  return table;
}

ProbeReport simulate_probes(const Graph& host, const PathSystem& fs, const std::optional<Element>& fault) {
  ProbeReport r;
  r.outcomes.assign(fs.size(), true);
  if (!fault) return r;
  for (int i : incidence(host, fs, *fault)) r.outcomes[static_cast<std::size_t>(i)] = false;
  return r;
}

ProbeReport parse_report(std::string_view text) {
  ProbeReport r;
  for (char c : text) {
    if (c == 'P') {
      r.outcomes.push_back(true);
    } else if (c == 'F') {
      r.outcomes.push_back(false);
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      throw Error(ErrorCode::BadToken, std::string("report character '") + c + "' is neither P nor F");
    }
  }
  return r;
}

std::string format_report(const ProbeReport& r) {
  std::string s;
  for (bool ok : r.outcomes) s += ok ? 'P' : 'F';
  return s;
}

std::string_view to_string(DiagnosisKind k) {
  switch (k) {
    case DiagnosisKind::NoFault:
      return "NoFault";
    case DiagnosisKind::Identified:
      return "Identified";
    case DiagnosisKind::Inconsistent:
      return "Inconsistent";
  }
  return "?";
}

Diagnosis decode(const SignatureTable& table, const ProbeReport& report) {
  Diagnosis d;
  for (std::size_t i = 0; i < report.outcomes.size(); ++i) {
    if (!report.outcomes[i]) d.failed.push_back(static_cast<int>(i));
  }
  if (report.outcomes.size() != table.path_count) {
    d.kind = DiagnosisKind::Inconsistent;
    return d;
  }
  if (d.failed.empty()) return d;
  for (const auto& [el, sig] : table.rows) {
    if (sig == d.failed) {
      d.kind = DiagnosisKind::Identified;
      d.element = el;
      return d;
    }
  }
  d.kind = DiagnosisKind::Inconsistent;
  return d;
}

}  // namespace pathsep
