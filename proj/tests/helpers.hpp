#pragma once

#include <doctest.h>

#include <string>
#include <vector>

#include "pathsep/error.hpp"
#include "pathsep/graph.hpp"
#include "pathsep/tree.hpp"
#include "pathsep/verify.hpp"

namespace testing_helpers {

// Path given by labels of `g`.
inline pathsep::Path lp(const pathsep::Graph& g, std::vector<int> labels) {
  pathsep::Path p;
  for (int l : labels) p.vertices.push_back(g.index_of(l));
  return p;
}

inline pathsep::PathSystem ls(const pathsep::Graph& g, const std::vector<std::vector<int>>& paths) {
  pathsep::PathSystem fs;
  for (const auto& p : paths) fs.paths.push_back(lp(g, p));
  return fs;
}

inline std::vector<std::string> rendered(const pathsep::Graph& g, const pathsep::PathSystem& fs) {
  std::vector<std::string> out;
  for (const auto& p : fs.paths) out.push_back(pathsep::format_path(g, p));
  return out;
}

inline std::vector<int> labels_of(const pathsep::Graph& g, const std::vector<pathsep::Vertex>& vs) {
  std::vector<int> out;
  for (auto v : vs) out.push_back(g.label(v));
  return out;
}

inline pathsep::Element edge_el(const pathsep::Graph& g, int a, int b) {
  return pathsep::Edge::make(g.index_of(a), g.index_of(b));
}

// Code of the pathsep::Error thrown by fn; fails the test if nothing is thrown.
inline pathsep::ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const pathsep::Error& e) {
    return e.code();
  }
  FAIL("no error raised");
  return pathsep::ErrorCode::UsageError;
}

}  // namespace testing_helpers
