#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "a2m/graph.hpp"
#include "a2m/minor.hpp"
#include "a2m/packing.hpp"

namespace a2m {

/// A step that must succeed on valid input has failed. Carries a dump
/// of the state it failed in; this is a finding, never patched over.
class InvariantViolation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// No edge uv has |V - N[{u,v}]| <= ell - 1.
class NoQualifyingEdge : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

enum class TraceKind {
    CliqueDirect,
    StarDirect,
    DeleteVertexEven,
    PackAndContract,
    SmallCaseEdge,
    FallbackConnectivity,
    FallbackClique,
    DelegateHalf,
    DeleteNoncriticalVertex,
    JoinDecompose,
    CliqueAbsorb,
    ParityGlue,
};

const char* to_string(TraceKind kind) noexcept;

/// One recursion step. Vertex lists in `data` use the input graph's labels.
struct TraceStep {
    TraceKind kind = TraceKind::CliqueDirect;
    int depth = 0;
    int order = 0;  // vertex count of the graph this step worked on
    int ell = 0;
    std::vector<std::pair<std::string, std::vector<int>>> data;
};

enum class MinorForm { Half, Chromatic };

struct Certificate {
    Graph input;
    MinorForm form = MinorForm::Chromatic;
    int ell = 0;
    int chi = 0;
    MinorTarget target;
    MinorModel model;
    std::vector<TraceStep> trace;
    bool validated = false;
};

struct ConstructOptions {
    OracleOptions oracle;
};

/// M_uv = V(G) - N[{u,v}].
VertexSet non_neighborhood_of_edge(const Graph& g, Edge uv);

/// Pick non-adjacent x < y with a common neighbour, c the smallest such
/// neighbour, and return (c, x). When no non-adjacent pair has a common
/// neighbour, falls back to the first edge with |M_uv| <= ell - 1.
/// Requires alpha <= 2, G not complete, omega(G) <= ell.
Edge select_edge_small_case(const Graph& g, int ell);

/// Outcome of the n = 4l - 1 case: after exchanges, the l - 1 paths plus
/// the edge are contracted and the leftover vertices B form the
/// independent side.
struct SmallCaseOutcome {
    Edge uv;
    P3Packing initial;
    P3Packing final_packing;
    int exchanges = 0;
    VertexSet leftover;      // B
    bool leftover_covered;   // B subset of N[{u,v}]
    MinorModel model;        // valid only when leftover_covered
};

/// Run the exchange step and build the model for a given edge and packing
/// of G - {u,v}. Requires alpha <= 2 and |V(G)| = 3 |packing| + 2 + |B|.
SmallCaseOutcome small_case_step(const Graph& g, Edge uv, P3Packing packing);

/// K^l_{l, ceil(n/2) - l} minor for alpha(G) <= 2 and 2l <= ceil(n/2).
Certificate construct_half_minor(const Graph& g, int ell, const ConstructOptions& options = {});

/// K^l_{l, chi(G) - l} minor for alpha(G) <= 2 and 2l <= chi(G).
Certificate construct_chi_minor(const Graph& g, int ell, const ConstructOptions& options = {});

}  // namespace a2m
