#pragma once

#include <vector>

#include "a2m/graph.hpp"

namespace a2m {

/// Maximum-cardinality matching in a general graph (Edmonds' blossom
/// algorithm, O(n^3)). Returns mate[v], or -1 for exposed vertices.
std::vector<int> maximum_matching(const Graph& g);

int matching_size(const std::vector<int>& mate);

}  // namespace a2m
