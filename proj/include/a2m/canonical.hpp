#pragma once

#include <string>
#include <vector>

#include "a2m/graph.hpp"

namespace a2m {

/// Canonical labelling of a (vertex-coloured) graph.
///
/// `key` is equal for two inputs iff they are isomorphic by a
/// colour-preserving map. `order[p]` is the vertex placed at canonical
/// position p.
struct CanonicalLabeling {
    std::string key;
    std::vector<int> order;
};

/// Exhaustive search over orderings that respect a colour-refinement
/// partition, keeping the lexicographically largest upper-triangle
/// adjacency columns. Interchangeable twins are tried once per class.
/// Requires order() <= 64; intended for desk-scale graphs.
CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors = {});

inline std::string canonical_key(const Graph& g) { return canonical_labeling(g).key; }

bool isomorphic(const Graph& a, const Graph& b);

/// Relabel g so that vertex order[p] becomes p.
Graph relabel(const Graph& g, const std::vector<int>& order);

}  // namespace a2m
