#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pathsep/profile.hpp"
#include "pathsep/tree.hpp"
#include "pathsep/verify.hpp"

namespace pathsep {

int vertex_lower_bound(int h1, int h2star);
int vertex_lower_bound(const TreeProfile& p);

// ceil(2 h1 / 3) + ceil((h2star + 1) / 2).
int vertex_upper_formula(int h1, int h2star);
int vertex_upper_formula(const TreeProfile& p);

// Windows of width w = k - t + 1 starting at positions 1..t, where
// t = ceil((k + 1) / 2). Every vertex of the run gets the index interval
// [max(1, i - w + 1), min(t, i)] as its signature.
// Throws NotConsecutive unless `run` is a path of `t`.
PathSystem sliding_window_cover(const Tree& t, const std::vector<Vertex>& run);

bool is_star(const Tree& t);

// True when the bare-path contraction is not K_{1,3} and all its bunches
// have at least three leaves (or when t is a star with >= 4 leaves).
bool vertex_system_supported(const Tree& t);

// Set when the bunch-size condition evaluated on t itself disagrees with the
// one evaluated on its contraction.
std::optional<std::string> vertex_precondition_warning(const Tree& t);

// Vertex-separating-covering system built from the bunch system of the
// contraction, lifted back, then completed with pairing paths between
// degree-2 vertices of distinct bare paths and a sliding-window cover for the
// last run. Verified before return; size <= vertex_upper_formula.
// Throws UnsupportedTree when vertex_system_supported(t) is false.
PathSystem vertex_system(const Tree& t);

// Planar system checked against vertices and interior edges.
// Throws PreconditionViolated unless h2 = 0 and h1 >= 3.
PathSystem vertex_interior_system(const Tree& t);

// Trees whose degrees are all 1 or 3, with at least 4 vertices.
bool is_c13(const Tree& t);
// A C13 tree with every interior edge subdivided once.
bool is_c13_star(const Tree& t);
Tree subdivide_interior_edges(const Tree& t);

// Every C13 tree with at most max_n vertices, up to isomorphism, grown from
// K_{1,3} by hanging two new leaves on an existing leaf.
std::vector<Tree> c13_family(int max_n);

// Exact optimum when t belongs to a family whose value is known.
std::optional<int> sharp_value(const Tree& t, TargetKind kind);

}  // namespace pathsep
