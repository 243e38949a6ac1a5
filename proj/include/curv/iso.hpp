#pragma once

#include <optional>
#include <vector>

#include "curv/graph.hpp"

namespace curv {

// Backtracking isomorphism test for small graphs (color refinement to prune,
// then class-respecting assignment). Intended for fixture checks on graphs of
// a few dozen vertices, not as a general-purpose solver.
bool is_isomorphic(const Graph& a, const Graph& b);

// The mapping itself when one exists: result[i] = image of a's vertex i in b.
std::optional<std::vector<int>> find_isomorphism(const Graph& a, const Graph& b);

}  // namespace curv
