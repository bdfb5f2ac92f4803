#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathsep/tree.hpp"

namespace pathsep {

// Center-rooted AHU encoding; equal strings iff the trees are isomorphic.
std::string canonical_form(const Tree& t);

// Maps every vertex of `pattern` to a vertex of `target` preserving
// adjacency, or nothing when the trees are not isomorphic.
std::optional<std::vector<Vertex>> find_isomorphism(const Tree& pattern, const Tree& target);

inline bool isomorphic(const Tree& a, const Tree& b) { return a.order() == b.order() && canonical_form(a) == canonical_form(b); }

// The binary tree of depth two on labels 1..7.
const Tree& binary_depth_two();
bool is_binary_depth_two(const Tree& t);

}  // namespace pathsep
