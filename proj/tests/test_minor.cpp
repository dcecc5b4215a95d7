#include <doctest.h>

#include "a2m/generators.hpp"
#include "a2m/graph6.hpp"
#include "a2m/graph_ops.hpp"
#include "a2m/invariants.hpp"
#include "a2m/minor.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace a2m;

namespace {

bool mentions(const std::vector<std::string>& problems, const std::string& needle) {
    for (const auto& p : problems)
        if (p.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("model validation") {
    Graph wheel = five_wheel_graph();  // hub is 5
    auto star = MinorTarget::clique_join_independent(1, 2);
    CHECK(validate_model(wheel, star, MinorModel{{{5}}, {{0}, {2}}}).empty());

    Graph c5 = support::c5();
    CHECK(mentions(validate_model(c5, MinorTarget::complete(2), MinorModel{{{0, 1}, {1, 2}}, {}}), "sets not disjoint"));
    CHECK(mentions(validate_model(c5, MinorTarget::complete(1), MinorModel{{{0, 2}}, {}}), "not connected"));
    CHECK(mentions(validate_model(c5, MinorTarget::complete(2), MinorModel{{{0}, {2}}, {}}), "no edge between"));
    CHECK(mentions(validate_model(c5, MinorTarget::complete(2), MinorModel{{{0}}, {}}), "expected 2 clique-side"));
    CHECK(mentions(validate_model(c5, MinorTarget::complete(1), MinorModel{{{}}, {}}), "is empty"));
    CHECK(mentions(validate_model(c5, MinorTarget::complete(1), MinorModel{{{9}}, {}}), "out-of-range"));
    CHECK(mentions(validate_model(c5, MinorTarget::complete(1), MinorModel{{{1, 1}}, {}}), "repeats"));
    // Independent-side sets need not touch each other.
    CHECK(validate_model(c5, star, MinorModel{{{0}}, {{1}, {4}}}).empty());
}

TEST_CASE("validation agrees with the independent checker") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 400; ++round) {
        Graph g = support::random_graph(7, 0.5, static_cast<std::uint64_t>(round));
        const int ell = 1 + static_cast<int>(rng() % 2), m = static_cast<int>(rng() % 3);
        auto target = MinorTarget::clique_join_independent(ell, m);
        MinorModel model;
        model.clique_side.resize(static_cast<std::size_t>(ell));
        model.independent_side.resize(static_cast<std::size_t>(m));
        for (int v = 0; v < 7; ++v) {
            const auto slot = static_cast<int>(rng() % static_cast<std::uint64_t>(ell + m + 1));
            if (slot == ell + m) continue;
            (slot < ell ? model.clique_side[static_cast<std::size_t>(slot)]
                        : model.independent_side[static_cast<std::size_t>(slot - ell)]).push_back(v);
        }
        CHECK(is_valid_model(g, target, model) == oracle::model_ok(g, target, model));
    }
}

TEST_CASE("brute-force minor search") {
    Graph c5 = support::c5();
    auto k3 = find_minor_bruteforce(c5, MinorTarget::complete(3));
    REQUIRE(k3);
    CHECK(is_valid_model(c5, MinorTarget::complete(3), *k3));
    CHECK_FALSE(find_minor_bruteforce(c5, MinorTarget::complete(4)));

    auto t = MinorTarget::clique_join_independent(2, 3);
    auto found = find_minor_bruteforce(named::petersen_complement(), t);
    REQUIRE(found);
    CHECK(oracle::model_ok(named::petersen_complement(), t, *found));

    CHECK_THROWS_AS(find_minor_bruteforce(Graph(15), MinorTarget::complete(5)), OracleInfeasible);
    CHECK_NOTHROW(find_minor_bruteforce(Graph(15), MinorTarget::complete(4)));
}

TEST_CASE("brute-force search agrees with exhaustive assignment") {
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        Graph g = support::random_graph(6, 0.45, seed);
        for (auto target : {MinorTarget::complete(3), MinorTarget::complete(4), MinorTarget::clique_join_independent(1, 3),
                            MinorTarget::clique_join_independent(2, 2)}) {
            auto found = find_minor_bruteforce(g, target);
            INFO(emit_graph6(g), " ", target.describe());
            CHECK(found.has_value() == oracle::has_minor_by_assignment(g, target));
            if (found) CHECK(oracle::model_ok(g, target, *found));
        }
    }
}

TEST_CASE("pulling models back through derivations") {
    Graph c5 = support::c5();
    MinorModel m{{{0}, {1}}, {{2}}};
    CHECK(model_through_contraction({}, m) == m);

    auto c = contract_set(c5, VertexSet{1, 2, 3});  // K3: {0}, {1,2,3}, {4}
    auto back = model_through_contraction({c.provenance}, MinorModel{{{1}}, {{0}, {2}}});
    CHECK(back.clique_side == std::vector<std::vector<int>>{{1, 2, 3}});
    CHECK(back.independent_side == std::vector<std::vector<int>>{{0}, {4}});
    CHECK(is_valid_model(c5, MinorTarget::clique_join_independent(1, 2), back));

    // Edge first, then a path, as in the n = 4l - 1 construction.
    Graph g = named::cycle(7);
    auto first = contract_set(g, VertexSet{0, 1});          // 6 vertices, {0,1} -> 0
    auto second = contract_set(first.graph, VertexSet{2, 3, 4});  // old {3,4,5}
    auto pulled = model_through_contraction({first.provenance, second.provenance}, MinorModel{{{0}, {2}}, {}});
    CHECK(pulled.clique_side == std::vector<std::vector<int>>{{0, 1}, {3, 4, 5}});

    CHECK_THROWS_AS(model_through_contraction({second.provenance, first.provenance}, MinorModel{{{0}}, {}}),
                    ProvenanceError);
    CHECK_THROWS_AS(model_through_contraction({c.provenance}, MinorModel{{{7}}, {}}), ProvenanceError);
}

TEST_CASE("relabelling a model") {
    MinorModel m{{{1, 0}}, {{2}}};
    auto r = relabel_model(m, {5, 3, 9});
    CHECK(r.clique_side == std::vector<std::vector<int>>{{3, 5}});
    CHECK(r.independent_side == std::vector<std::vector<int>>{{9}});
    CHECK(MinorTarget::clique_join_independent(2, 3).describe() == "K^2_{2,3}");
    CHECK(MinorTarget::complete(4).describe() == "K_4");
}
