#pragma once

#include <chrono>
#include <optional>
#include <stdexcept>
#include <vector>

#include "a2m/graph.hpp"

namespace a2m {

/// Induced path a1 - a2 - a3 (a2 is the middle vertex).
struct P3 {
    int a1 = -1, a2 = -1, a3 = -1;
    friend bool operator==(const P3&, const P3&) = default;
};

struct P3Packing {
    std::vector<P3> triples;

    int size() const noexcept { return static_cast<int>(triples.size()); }
    VertexSet vertices() const;
};

/// Empty string when `packing` is a set of pairwise disjoint induced P3s in
/// g, otherwise a description of the first problem found.
std::string packing_problem(const Graph& g, const P3Packing& packing);

using Deadline = std::optional<std::chrono::steady_clock::time_point>;

class SearchTimeout : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exhaustive search for `ell` disjoint induced P3s using only vertices in
/// `allowed`. Failed states (remaining vertices, remaining count) are
/// memoised. Throws SearchTimeout once the deadline has passed.
std::optional<P3Packing> find_p3_packing(const Graph& g, int ell, const VertexSet& allowed,
                                         Deadline deadline = std::nullopt);
std::optional<P3Packing> find_p3_packing(const Graph& g, int ell, Deadline deadline = std::nullopt);

struct CliqueCapacity {
    VertexSet clique;
    int doubled_capacity = 0;
};

/// Exact minimum capacity over all nonempty cliques, by branch and bound.
/// Empty for the null graph.
std::optional<CliqueCapacity> min_clique_capacity(const Graph& g);

/// The four conditions characterising when ell disjoint induced P3s exist
/// in a graph with independence number at most two.
struct PackingConditionReport {
    int ell = 0;
    bool size_ok = false;          // n >= 3 ell
    bool connectivity_ok = false;  // kappa >= ell
    bool capacity_ok = false;      // every clique has capacity >= ell
    bool anti_matching_ok = false; // an anti-matching of size ell exists
    bool five_wheel_exception = false;
    int connectivity = 0;
    int anti_matching_size = 0;
    std::optional<CliqueCapacity> min_capacity_witness;

    bool all_hold() const noexcept { return size_ok && connectivity_ok && capacity_ok && anti_matching_ok; }
};

PackingConditionReport check_packing_conditions(const Graph& g, int ell);

/// True when packing existence agrees with the four conditions. The single
/// known exception (ell = 2 on the five-wheel) is rejected as a
/// precondition failure.
bool packing_characterization_holds(const Graph& g, int ell);

/// |N[{u,v}] - V(packing)|, the quantity the exchange step increases.
int free_neighborhood_measure(const Graph& g, Edge uv, const P3Packing& packing);

struct ExchangeResult {
    P3Packing packing;
    int iterations = 0;
};

/// Repeatedly swap a vertex b outside N[{u,v}] into a triple lying inside
/// N[{u,v}] until no swap applies. Every swap frees one vertex of
/// N[{u,v}], so the loop runs at most n times. Scans b, then triples, in
/// increasing order and applies the first swap that fits:
///   b ~ a1, a3         ->  a3 - b  - a1
///   b ~ a1 only        ->  a2 - a1 - b
///   b ~ a1, a2, !a3    ->  a3 - a2 - b
/// and the mirror images with a1 and a3 exchanged.
ExchangeResult exchange_improve(const Graph& g, Edge uv, P3Packing packing);

}  // namespace a2m
