#pragma once

#include <vector>

#include "a2m/graph.hpp"

namespace a2m {

/// Records which vertices of a source graph each vertex of a derived graph
/// stands for. Vertex deletion maps every kept vertex to a singleton;
/// contraction maps the merged vertex to the whole contracted set.
struct Provenance {
    int source_order = 0;
    std::vector<std::vector<int>> origin;  // indexed by derived vertex, sorted
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> old_index;  // new -> old
    int source_order = 0;
    Provenance provenance() const;
};

struct Contraction {
    Graph graph;
    Provenance provenance;
    int merged_vertex = -1;  // index of the vertex that replaced the set
};

Graph complement(const Graph& g);

/// Vertices of `keep` are relabelled 0..|keep|-1 in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep);

/// G - v, as an induced subgraph on all other vertices.
InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop);

/// Replace the connected set `s` with a single vertex adjacent to N(s).
///
/// The merged vertex takes the smallest index of `s`; the remaining vertices
/// keep their relative order and are compacted around it.
Contraction contract_set(const Graph& g, const VertexSet& s);

/// N[S] = S together with every vertex outside S that has a neighbour in S.
VertexSet closed_neighborhood(const Graph& g, const VertexSet& s);

bool is_connected_subset(const Graph& g, const VertexSet& s);
bool is_connected(const Graph& g);
bool is_clique(const Graph& g, const VertexSet& s);

/// Vertex connectivity: n-1 for complete graphs, 0 for disconnected ones,
/// otherwise the minimum over non-adjacent pairs of a unit-capacity max flow
/// in the vertex-split digraph.
int vertex_connectivity(const Graph& g);

/// Disjoint union of g and h with every cross pair joined; h's vertices are
/// shifted by g.order().
Graph join(const Graph& g, const Graph& h);

}  // namespace a2m
