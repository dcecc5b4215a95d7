#pragma once

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "a2m/graph.hpp"

namespace a2m {

inline constexpr int kDefaultExhaustiveCap = 10;

class GeneratorError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Calls `emit` with every graph on n vertices whose independence number is
/// at most two, as complements of triangle-free graphs.
///
/// Triangle-free graphs are grown one vertex at a time; the new vertex's
/// neighbourhood is any independent set of the parent. With dedup on, a
/// child is kept only when the new vertex is in the orbit of the canonically
/// last vertex, and isomorphic siblings are dropped, so each class appears
/// once. With dedup off every labelled graph appears. Order is deterministic.
void for_each_alpha2(int n, const std::function<void(const Graph&)>& emit, bool dedup = true,
                     int cap = kDefaultExhaustiveCap);

std::vector<Graph> enumerate_alpha2(int n, bool dedup = true, int cap = kDefaultExhaustiveCap);

/// Complement of a random maximal triangle-free graph: vertex pairs are
/// shuffled with a seeded mt19937_64 and inserted unless they close a
/// triangle. Same (n, seed), same labelled graph.
Graph random_alpha2(int n, std::uint64_t seed);

namespace named {

Graph cycle(int n);     // 0-1-...-(n-1)-0, n >= 3
Graph complete(int n);  // n >= 0
Graph path(int n);      // 0-1-...-(n-1), n >= 1
Graph five_wheel();     // cycle on 0..4, hub 5
/// Clique on 0..ell-1, independent set ell..ell+m-1, all cross pairs joined.
Graph clique_join_independent(int ell, int m);
/// Outer cycle 0..4, inner pentagram 5..9 (i+5 ~ (i+2)%5+5), spokes i ~ i+5.
Graph petersen();
Graph petersen_complement();

}  // namespace named

/// Build a graph from an expression such as "cycle(5)",
/// "clique_join_independent(2,3)", "join(cycle(5),cycle(5))" or "petersen".
/// "complement(...)" is also accepted. Throws GeneratorError on unknown
/// names or bad arguments.
Graph named_graph(std::string_view expression);

}  // namespace a2m
