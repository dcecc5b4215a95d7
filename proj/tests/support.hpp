#pragma once

#include <random>

#include "a2m/generators.hpp"
#include "a2m/graph.hpp"

namespace support {

inline a2m::Graph random_graph(int n, double p, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    a2m::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

inline a2m::Graph c5() { return a2m::named::cycle(5); }

}  // namespace support
