#include <doctest.h>

#include "a2m/constructor.hpp"
#include "a2m/generators.hpp"
#include "a2m/graph6.hpp"
#include "a2m/graph_ops.hpp"
#include "a2m/invariants.hpp"
#include "a2m/serialize.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace a2m;

namespace {

bool has_step(const Certificate& c, TraceKind kind) {
    for (const auto& s : c.trace)
        if (s.kind == kind) return true;
    return false;
}

void check_trace(const Certificate& c) {
    const int n = c.input.order();
    for (std::size_t i = 0; i < c.trace.size(); ++i) {
        const auto& s = c.trace[i];
        CHECK(s.depth <= n);
        CHECK(s.order <= n);
        for (const auto& [key, values] : s.data) {
            if (key == "exchanges" || key == "ell" || key == "kappa" || key == "omega" || key == "chi") continue;
            for (int v : values) CHECK((v >= 0 && v < n));
        }
    }
    // Steps are recorded parent first; every child works on fewer vertices,
    // except that delegating to the half-order form keeps the graph.
    CHECK(c.trace.front().depth == 0);
    std::vector<const TraceStep*> last_at_depth;
    for (const auto& s : c.trace) {
        REQUIRE(static_cast<std::size_t>(s.depth) <= last_at_depth.size());
        if (s.depth > 0) {
            const TraceStep& parent = *last_at_depth[static_cast<std::size_t>(s.depth - 1)];
            CHECK((s.order < parent.order || (parent.kind == TraceKind::DelegateHalf && s.order == parent.order)));
        }
        last_at_depth.resize(static_cast<std::size_t>(s.depth));
        last_at_depth.push_back(&s);
    }
}

}  // namespace

TEST_CASE("edge selection recipe") {
    CHECK(select_edge_small_case(support::c5(), 2) == Edge{1, 0});
    CHECK(non_neighborhood_of_edge(support::c5(), {1, 0}) == VertexSet{3});

    // K4 minus a perfect matching is C4; every edge dominates it.
    Graph c4 = named::cycle(4);
    auto e = select_edge_small_case(c4, 2);
    CHECK(e == Edge{1, 0});
    CHECK(non_neighborhood_of_edge(c4, e).empty());

    // An edge dominating everything has M = {}.
    Graph g = join(named::complete(2), named::cycle(5));
    CHECK(non_neighborhood_of_edge(g, {0, 1}).empty());

    CHECK_THROWS_AS(select_edge_small_case(named::complete(4), 4), PreconditionError);
    CHECK_THROWS_AS(select_edge_small_case(support::c5(), 1), PreconditionError);  // omega > ell
}

TEST_CASE("half-order form on named graphs") {
    auto c5 = construct_half_minor(support::c5(), 1);
    CHECK(c5.validated);
    CHECK(c5.target == MinorTarget::clique_join_independent(1, 2));
    CHECK(oracle::model_ok(c5.input, c5.target, c5.model));

    auto pc = construct_half_minor(named::petersen_complement(), 2);
    CHECK(pc.target == MinorTarget::clique_join_independent(2, 3));
    CHECK(oracle::model_ok(pc.input, pc.target, pc.model));

    auto k7 = construct_half_minor(named::complete(7), 2);
    CHECK(k7.target == MinorTarget::clique_join_independent(2, 2));
    CHECK(has_step(k7, TraceKind::CliqueDirect));

    CHECK_THROWS_AS(construct_half_minor(named::cycle(6), 1), PreconditionError);
    CHECK_THROWS_AS(construct_half_minor(support::c5(), 2), PreconditionError);
}

TEST_CASE("chromatic form on named graphs") {
    auto k6 = construct_chi_minor(named::complete(6), 3);
    CHECK(k6.target == MinorTarget::clique_join_independent(3, 3));
    CHECK(has_step(k6, TraceKind::CliqueDirect));

    auto c5 = construct_chi_minor(support::c5(), 1);
    CHECK(c5.chi == 3);
    CHECK(c5.target == MinorTarget::clique_join_independent(1, 2));
    CHECK(has_step(c5, TraceKind::StarDirect));

    auto jj = construct_chi_minor(join(support::c5(), support::c5()), 3);
    CHECK(jj.chi == 6);
    CHECK(jj.target == MinorTarget::clique_join_independent(3, 3));
    CHECK(has_step(jj, TraceKind::ParityGlue));
    CHECK(oracle::model_ok(jj.input, jj.target, jj.model));

    CHECK_THROWS_AS(construct_chi_minor(support::c5(), 2), PreconditionError);
}

TEST_CASE("both forms succeed on every alpha <= 2 graph up to seven vertices") {
    for (int n = 1; n <= 7; ++n)
        for (const Graph& g : enumerate_alpha2(n)) {
            const int chi = chromatic_number_alpha2(g);
            INFO(emit_graph6(g));
            for (int ell = 1; 2 * ell <= (n + 1) / 2; ++ell) {
                auto c = construct_half_minor(g, ell);
                CHECK(oracle::model_ok(g, c.target, c.model));
                check_trace(c);
            }
            for (int ell = 1; 2 * ell <= chi; ++ell) {
                auto c = construct_chi_minor(g, ell);
                CHECK(oracle::model_ok(g, c.target, c.model));
                CHECK(c.target.independent_count == chi - ell);
                check_trace(c);
            }
        }
}

TEST_CASE("random graphs above the oracle cap take the packing branch") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        Graph g = random_alpha2(21, seed);
        auto c = construct_half_minor(g, 2);
        CHECK(c.validated);
        CHECK(oracle::model_ok(g, c.target, c.model));
    }
}

TEST_CASE("small case step builds the model from the exchanged packing") {
    int seen = 0;
    for (std::uint64_t seed = 0; seed < 3000 && seen < 50; ++seed) {
        Graph g = random_alpha2(7, seed);
        for (auto uv : g.edges()) {
            if (non_neighborhood_of_edge(g, uv).size() > 1) continue;
            auto p = find_p3_packing(g, 1, VertexSet::range(7) - VertexSet{uv.first, uv.second});
            if (!p) continue;
            auto out = small_case_step(g, uv, *p);
            CHECK(out.leftover.size() == 2);
            CHECK(out.leftover_covered);
            CHECK(oracle::model_ok(g, MinorTarget::clique_join_independent(2, 2), out.model));
            ++seen;
            break;
        }
    }
    CHECK(seen == 50);
}

TEST_CASE("certificate JSON") {
    auto c = construct_chi_minor(support::c5(), 1);
    auto j = certificate_to_json(c);
    CHECK(j["input_graph6"] == "Dhc");
    CHECK(j["n"] == 5);
    CHECK(j["alpha_leq_2"] == true);
    CHECK(j["chi"] == 3);
    CHECK(j["ell"] == 1);
    CHECK(j["target"] == nlohmann::json{{"ell", 1}, {"m", 2}});
    CHECK(j["model"]["target"] == j["target"]);
    CHECK(j["validated"] == true);
    CHECK(j["trace"][0]["kind"] == "StarDirect");
    CHECK(model_from_json(j["model"]) == c.model);
    CHECK(target_from_json(target_to_json(MinorTarget::complete(4))) == MinorTarget::complete(4));
}

TEST_CASE("two equal disjoint cliques have no qualifying edge") {
    // Disconnected, so no non-adjacent pair shares a neighbour, and every
    // edge leaves the whole other clique outside N[{u,v}].
    for (int a = 1; a <= 4; ++a) {
        Graph h = complement(join(Graph(a), Graph(a)));
        CHECK_THROWS_AS(select_edge_small_case(h, a), NoQualifyingEdge);
    }
    // Unequal cliques: the edge inside the larger one qualifies.
    Graph uneven = complement(join(Graph(3), Graph(2)));
    auto e = select_edge_small_case(uneven, 3);
    CHECK(non_neighborhood_of_edge(uneven, e).size() == 2);
}
