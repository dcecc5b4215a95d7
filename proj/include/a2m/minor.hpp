#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "a2m/graph.hpp"
#include "a2m/graph_ops.hpp"
#include "a2m/packing.hpp"

namespace a2m {

/// Either the complete graph K_k, or K^l_{l,m}: a clique on l vertices
/// joined to an independent set of m vertices.
struct MinorTarget {
    enum class Kind { CompleteGraph, CliqueJoinIndependent };

    Kind kind = Kind::CliqueJoinIndependent;
    int clique_count = 1;       // k, or l
    int independent_count = 0;  // 0, or m

    static MinorTarget complete(int k);
    static MinorTarget clique_join_independent(int ell, int m);

    int total() const noexcept { return clique_count + independent_count; }
    std::string describe() const;
    friend bool operator==(const MinorTarget&, const MinorTarget&) = default;
};

/// Branch sets, one per target vertex. For K_k every set lives in
/// clique_side.
struct MinorModel {
    std::vector<std::vector<int>> clique_side;
    std::vector<std::vector<int>> independent_side;

    /// Sort every set, then the sets of each side lexicographically.
    void canonicalize();
    friend bool operator==(const MinorModel&, const MinorModel&) = default;
};

/// Every broken requirement, one message per offending set or pair.
/// Empty means the model witnesses the target as a minor of g.
std::vector<std::string> validate_model(const Graph& g, const MinorTarget& target, const MinorModel& model);

inline bool is_valid_model(const Graph& g, const MinorTarget& target, const MinorModel& model) {
    return validate_model(g, target, model).empty();
}

/// The brute-force search refused the instance; not the same as "no minor".
class OracleInfeasible : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct OracleOptions {
    /// Largest order accepted for targets with five or more branch sets.
    int cap = 14;
    Deadline deadline = std::nullopt;
};

/// Exhaustive search for a model of `target`.
///
/// Branch sets are placed clique side first. Each set is a connected
/// vertex set enumerated from its smallest vertex (sets on the same side are
/// ordered by smallest vertex), and must already touch every earlier set it
/// is required to touch. The search is repeated with a growing bound on set
/// size so small models are found first. Throws OracleInfeasible above the
/// cap, or when the deadline passes.
std::optional<MinorModel> find_minor_bruteforce(const Graph& g, const MinorTarget& target,
                                                const OracleOptions& options = {});

class ProvenanceError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Pull a model back through a chain of derivations. chain[0] describes the
/// first derived graph in terms of the original, chain.back() the graph the
/// model lives in. Branch sets are replaced by the union of the original
/// vertices their members stand for.
MinorModel model_through_contraction(const std::vector<Provenance>& chain, const MinorModel& model);

/// Map every vertex of the model through old_index (derived -> source).
MinorModel relabel_model(const MinorModel& model, const std::vector<int>& old_index);

}  // namespace a2m
