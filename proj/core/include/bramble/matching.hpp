#pragma once

#include <utility>
#include <vector>

#include "bramble/ugraph.hpp"

namespace bramble {

/// Maximum-cardinality matching in a general graph (Edmonds blossom, O(V^3)).
/// Returned edges have u < v and are sorted lexicographically.
std::vector<std::pair<int, int>> maximumMatching(const Ugraph& g);

}  // namespace bramble
