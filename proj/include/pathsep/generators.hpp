#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

#include "pathsep/tree.hpp"

namespace pathsep {

// E1, P3, P4, K13, TA, DS6, DS6s, DS6ss, HUB. Throws UsageError otherwise.
Tree named_tree(std::string_view name);

Tree path_tree(int n);
Tree star_tree(int leaves);  // centre 0, leaves 1..leaves

// Same shape with labels renumbered 0..n-1 in label order.
Tree relabel_compact(const Tree& t);

// Uniform labelled tree on n vertices from a random Pruefer sequence.
Tree random_tree(int n, std::mt19937_64& rng);

// Random tree without degree-2 vertices (bare paths contracted), relabelled.
Tree random_contracted_tree(int max_n, std::mt19937_64& rng);

// Random tree whose leaf-bearing vertices each carry at least three leaves
// and which has no degree-2 vertex, so every bunch has size >= 3.
Tree random_bushy_tree(int max_n, std::mt19937_64& rng);

// Deterministic mix of the three generators above, all with n <= max_n.
std::vector<Tree> random_tree_suite(int count, int max_n, std::uint64_t seed);

}  // namespace pathsep
