#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "a2m/graph.hpp"

namespace a2m {

/// A documented precondition of an operation does not hold.
class PreconditionError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Partition (A, B, C, D) of V(G) around a clique C, with the capacity
/// |D| + |A u B| / 2 kept doubled so it stays integral.
struct CapacityReport {
    VertexSet clique;             // C
    VertexSet complete_part;      // A: adjacent to all of C
    VertexSet anticomplete_part;  // B: adjacent to none of C
    VertexSet mixed_part;         // D: adjacent to some but not all of C
    int doubled_capacity = 0;
};

/// Pairwise disjoint non-adjacent pairs, i.e. a matching of the complement.
struct AntiMatching {
    std::vector<Edge> pairs;
    int size() const noexcept { return static_cast<int>(pairs.size()); }
};

struct CliqueResult {
    int size = 0;
    VertexSet witness;
};

/// True iff G has no independent set of size 3.
bool alpha_at_most_two(const Graph& g);

/// chi(G) = n - nu(complement(G)) for graphs with independence number <= 2:
/// every colour class has at most two vertices, and two-vertex classes are
/// exactly complement edges. Throws PreconditionError when alpha(G) >= 3.
int chromatic_number_alpha2(const Graph& g);

/// Maximum clique by branch and bound with a greedy-colouring bound.
CliqueResult clique_number(const Graph& g);

CapacityReport capacity(const Graph& g, const VertexSet& clique);

AntiMatching max_anti_matching(const Graph& g);

/// C5 plus a hub adjacent to all five cycle vertices.
Graph five_wheel_graph();
bool is_five_wheel(const Graph& g);

/// chi(G - v) < chi(G) for every v. Requires alpha(G) <= 2.
bool is_vertex_critical(const Graph& g);

/// Connected components of the complement, ordered by smallest member.
std::vector<VertexSet> co_components(const Graph& g);

inline bool is_anti_connected(const Graph& g) { return co_components(g).size() <= 1; }

}  // namespace a2m
