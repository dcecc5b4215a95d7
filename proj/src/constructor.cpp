#include "a2m/constructor.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include "a2m/graph6.hpp"
#include "a2m/graph_ops.hpp"
#include "a2m/invariants.hpp"

namespace a2m {

const char* to_string(TraceKind kind) noexcept {
    switch (kind) {
        case TraceKind::CliqueDirect: return "CliqueDirect";
        case TraceKind::StarDirect: return "StarDirect";
        case TraceKind::DeleteVertexEven: return "DeleteVertexEven";
        case TraceKind::PackAndContract: return "PackAndContract";
        case TraceKind::SmallCaseEdge: return "SmallCaseEdge";
        case TraceKind::FallbackConnectivity: return "FallbackConnectivity";
        case TraceKind::FallbackClique: return "FallbackClique";
        case TraceKind::DelegateHalf: return "DelegateHalf";
        case TraceKind::DeleteNoncriticalVertex: return "DeleteNoncriticalVertex";
        case TraceKind::JoinDecompose: return "JoinDecompose";
        case TraceKind::CliqueAbsorb: return "CliqueAbsorb";
        case TraceKind::ParityGlue: return "ParityGlue";
    }
    return "?";
}

VertexSet non_neighborhood_of_edge(const Graph& g, Edge uv) {
    return VertexSet::range(g.order()) - closed_neighborhood(g, VertexSet{uv.first, uv.second});
}

namespace {

int ceil_half(int n) { return (n + 1) / 2; }

std::vector<int> flatten(const P3Packing& p) {
    std::vector<int> out;
    for (const auto& t : p.triples) out.insert(out.end(), {t.a1, t.a2, t.a3});
    return out;
}

std::vector<std::vector<int>> singletons(const std::vector<int>& vs) {
    std::vector<std::vector<int>> out;
    for (int v : vs) out.push_back({v});
    return out;
}

/// Contract each group in turn (all groups are connected and pairwise
/// disjoint), take the merged vertices as clique-side singletons and the
/// `independent` vertices as independent-side singletons, check the model
/// in the contracted graph, and pull it back.
MinorModel contract_and_lift(const Graph& g, const std::vector<VertexSet>& groups, const std::vector<int>& independent) {
    std::vector<Provenance> chain;
    std::vector<int> where(static_cast<std::size_t>(g.order()));
    std::iota(where.begin(), where.end(), 0);
    Graph h = g;
    for (const auto& group : groups) {
        VertexSet current;
        group.for_each([&](int v) { current.insert(where[static_cast<std::size_t>(v)]); });
        Contraction c = contract_set(h, current);
        std::vector<int> inverse(static_cast<std::size_t>(h.order()), -1);
        for (std::size_t x = 0; x < c.provenance.origin.size(); ++x)
            for (int o : c.provenance.origin[x]) inverse[static_cast<std::size_t>(o)] = static_cast<int>(x);
        for (auto& w : where) w = inverse[static_cast<std::size_t>(w)];
        chain.push_back(std::move(c.provenance));
        h = std::move(c.graph);
    }
    MinorModel contracted;
    for (const auto& group : groups) contracted.clique_side.push_back({where[static_cast<std::size_t>(group.first())]});
    for (int b : independent) contracted.independent_side.push_back({where[static_cast<std::size_t>(b)]});
    const auto target = MinorTarget::clique_join_independent(static_cast<int>(groups.size()),
                                                              static_cast<int>(independent.size()));
    if (auto problems = validate_model(h, target, contracted); !problems.empty())
        throw InvariantViolation("contracted graph does not contain " + target.describe() + " on the merged vertices: " +
                                 problems.front() + "; graph6=" + emit_graph6(g));
    return model_through_contraction(chain, contracted);
}

/// Edges with |M_uv| <= ell - 1: the common-neighbour recipe first, then
/// every qualifying edge in lexicographic order.
std::vector<Edge> qualifying_edges(const Graph& g, int ell) {
    std::vector<Edge> out;
    auto qualifies = [&](Edge e) { return non_neighborhood_of_edge(g, e).size() <= ell - 1; };
    const int n = g.order();
    for (int x = 0; x < n && out.empty(); ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            VertexSet common = g.neighbors(x) & g.neighbors(y);
            if (common.empty()) continue;
            Edge e{common.first(), x};
            if (qualifies(e)) out.push_back(e);
            break;
        }
    for (auto e : g.edges())
        if (qualifies(e) && std::find_if(out.begin(), out.end(), [&](Edge f) {
                                return std::minmax(f.first, f.second) == std::minmax(e.first, e.second);
                            }) == out.end())
            out.push_back(e);
    return out;
}

struct Frame {
    Graph graph;
    std::vector<int> origin;  // local vertex -> input label
};

struct Child {
    Frame frame;
    std::vector<int> old_index;  // child vertex -> parent vertex
};

Child sub_frame(const Frame& f, const VertexSet& keep) {
    auto sub = induced_subgraph(f.graph, keep);
    Child c{{std::move(sub.graph), {}}, std::move(sub.old_index)};
    for (int v : c.old_index) c.frame.origin.push_back(f.origin[static_cast<std::size_t>(v)]);
    return c;
}

MinorModel merge(MinorModel a, const MinorModel& b) {
    a.clique_side.insert(a.clique_side.end(), b.clique_side.begin(), b.clique_side.end());
    a.independent_side.insert(a.independent_side.end(), b.independent_side.begin(), b.independent_side.end());
    return a;
}

class Builder {
public:
    Builder(const Graph& input, const ConstructOptions& options) : input_(input), options_(options) {}

    std::vector<TraceStep> trace;

    int chromatic(const Frame& f) {
        std::uint64_t key = 0;
        for (int o : f.origin) key |= std::uint64_t{1} << o;
        if (auto it = chi_memo_.find(key); it != chi_memo_.end()) return it->second;
        int chi = chromatic_number_alpha2(f.graph);
        chi_memo_.emplace(key, chi);
        return chi;
    }

    MinorModel half(const Frame& f, int ell, int depth) {
        const Graph& g = f.graph;
        const int n = g.order();
        const int m = ceil_half(n) - ell;
        const auto target = MinorTarget::clique_join_independent(ell, m);
        guard_depth(f, ell, depth);
        const VertexSet all = VertexSet::range(n);

        if (g.is_complete()) {
            record(TraceKind::CliqueDirect, depth, f, ell, {});
            return checked(f, target, direct_clique(n, ell, m), "CliqueDirect");
        }

        if (n % 2 == 0) {
            int victim = 0;
            for (int v = 1; v < n; ++v)
                if (g.degree(v) < g.degree(victim)) victim = v;
            record(TraceKind::DeleteVertexEven, depth, f, ell, {{"deleted", labels(f, {victim})}});
            Child c = sub_frame(f, all - VertexSet{victim});
            return checked(f, target, relabel_model(half(c.frame, ell, depth + 1), c.old_index), "DeleteVertexEven");
        }

        if (n >= 4 * ell + 1) {
            if (auto packing = find_p3_packing(g, ell)) {
                std::vector<int> independent = (all - packing->vertices()).members();
                independent.resize(static_cast<std::size_t>(m));
                std::vector<VertexSet> groups;
                for (const auto& t : packing->triples) groups.push_back(VertexSet{t.a1, t.a2, t.a3});
                record(TraceKind::PackAndContract, depth, f, ell,
                       {{"paths", labels(f, flatten(*packing))}, {"independent", labels(f, independent)}});
                return checked(f, target, contract_and_lift(g, groups, independent), "PackAndContract");
            }
        }

        if (n == 4 * ell - 1) {
            for (Edge uv : qualifying_edges(g, ell)) {
                auto packing = find_p3_packing(g, ell - 1, all - VertexSet{uv.first, uv.second});
                if (!packing) continue;
                SmallCaseOutcome out = small_case_step(g, uv, *packing);
                if (!out.leftover_covered)
                    violation(f, ell, "SmallCaseEdge", "exchange fixpoint leaves a vertex of B outside N[{u,v}]");
                record(TraceKind::SmallCaseEdge, depth, f, ell,
                       {{"edge", labels(f, {uv.first, uv.second}, false)},
                        {"M_uv", labels(f, non_neighborhood_of_edge(g, uv).members())},
                        {"paths_initial", labels(f, flatten(out.initial), false)},
                        {"paths", labels(f, flatten(out.final_packing), false)},
                        {"B", labels(f, out.leftover.members())},
                        {"exchanges", {out.exchanges}}});
                return checked(f, target, out.model, "SmallCaseEdge");
            }
        }

        const int kappa = vertex_connectivity(g);
        if (kappa < ceil_half(n)) return fallback(f, ell, depth, TraceKind::FallbackConnectivity, {{"kappa", {kappa}}});
        const int omega = clique_number(g).size;
        if (4 * omega >= n + 3) return fallback(f, ell, depth, TraceKind::FallbackClique, {{"omega", {omega}}});
        violation(f, ell, "half-minor",
                  "no branch applies although kappa >= ceil(n/2), omega < (n+3)/4 and n is odd");
    }

    MinorModel chi(const Frame& f, int ell, int depth) {
        const Graph& g = f.graph;
        const int n = g.order();
        const int chi_g = chromatic(f);
        const auto target = MinorTarget::clique_join_independent(ell, chi_g - ell);
        guard_depth(f, ell, depth);
        const VertexSet all = VertexSet::range(n);

        if (g.is_complete()) {
            record(TraceKind::CliqueDirect, depth, f, ell, {});
            return checked(f, target, direct_clique(n, ell, chi_g - ell), "CliqueDirect");
        }

        if (ell == 1) {
            int hub = 0;
            for (int v = 1; v < n; ++v)
                if (g.degree(v) > g.degree(hub)) hub = v;
            if (g.degree(hub) < chi_g - 1) violation(f, ell, "StarDirect", "maximum degree below chi - 1");
            auto leaves = g.neighbors(hub).members();
            leaves.resize(static_cast<std::size_t>(chi_g - 1));
            record(TraceKind::StarDirect, depth, f, ell, {{"hub", labels(f, {hub})}, {"leaves", labels(f, leaves)}});
            return checked(f, target, MinorModel{{{hub}}, singletons(leaves)}, "StarDirect");
        }

        if (n >= 2 * chi_g - 1) {
            if (chi_g != ceil_half(n)) violation(f, ell, "DelegateHalf", "n >= 2 chi - 1 but chi != ceil(n/2)");
            record(TraceKind::DelegateHalf, depth, f, ell, {{"chi", {chi_g}}});
            return checked(f, target, half(f, ell, depth + 1), "DelegateHalf");
        }

        for (int x = 0; x < n; ++x) {
            Child c = sub_frame(f, all - VertexSet{x});
            if (chromatic(c.frame) != chi_g) continue;
            record(TraceKind::DeleteNoncriticalVertex, depth, f, ell, {{"deleted", labels(f, {x})}});
            return checked(f, target, relabel_model(chi(c.frame, ell, depth + 1), c.old_index), "DeleteNoncriticalVertex");
        }

        // Vertex-critical with n <= 2 chi - 2: the complement must be disconnected.
        const auto comps = co_components(g);
        if (comps.size() < 2) violation(f, ell, "JoinDecompose", "vertex-critical graph with n <= 2 chi - 2 is anti-connected");
        const VertexSet v1 = comps.front();
        const VertexSet v2 = all - v1;
        Child c1 = sub_frame(f, v1), c2 = sub_frame(f, v2);
        const int chi1 = chromatic(c1.frame), chi2 = chromatic(c2.frame);
        if (chi1 + chi2 != chi_g) violation(f, ell, "JoinDecompose", "chi is not additive over the join");

        for (int ell1 = 1; ell1 < ell; ++ell1) {
            const int ell2 = ell - ell1;
            if (2 * ell1 > chi1 || 2 * ell2 > chi2) continue;
            record(TraceKind::JoinDecompose, depth, f, ell,
                   {{"V1", labels(f, v1.members())}, {"V2", labels(f, v2.members())}, {"ell", {ell1, ell2}}});
            MinorModel m1 = relabel_model(chi(c1.frame, ell1, depth + 1), c1.old_index);
            MinorModel m2 = relabel_model(chi(c2.frame, ell2, depth + 1), c2.old_index);
            return checked(f, target, merge(std::move(m1), m2), "JoinDecompose");
        }

        if (c1.frame.graph.is_complete() || c2.frame.graph.is_complete()) {
            const bool second_is_clique = c2.frame.graph.is_complete();
            const Child& clique = second_is_clique ? c2 : c1;
            const Child& other = second_is_clique ? c1 : c2;
            const int chi_other = second_is_clique ? chi1 : chi2;
            const int t = clique.frame.graph.order();
            const int take = std::min(t, ell);
            const int ell_other = ell - take;

            record(TraceKind::CliqueAbsorb, depth, f, ell,
                   {{"clique", labels(f, clique.old_index)}, {"ell", {take, ell_other}}});
            std::vector<int> clique_vertices = clique.old_index;
            MinorModel m{singletons({clique_vertices.begin(), clique_vertices.begin() + take}),
                         singletons({clique_vertices.begin() + take, clique_vertices.end()})};
            if (ell_other >= 1) {
                m = merge(std::move(m), relabel_model(chi(other.frame, ell_other, depth + 1), other.old_index));
            } else {
                auto spare = singletons({other.old_index.begin(), other.old_index.begin() + chi_other});
                m.independent_side.insert(m.independent_side.end(), spare.begin(), spare.end());
            }
            return checked(f, target, m, "CliqueAbsorb");
        }

        if (!(chi_g == 2 * ell && chi1 % 2 == 1 && chi2 % 2 == 1))
            violation(f, ell, "ParityGlue", "no split of ell and neither side a clique, yet not the odd-odd case");

        // Find both pairs first so the step is recorded before its children.
        std::vector<Edge> pairs;
        for (const Child* side : {&c1, &c2}) {
            const Frame& sf = side->frame;
            const int chi_side = chromatic(sf);
            const int k = sf.graph.order();
            const VertexSet side_all = VertexSet::range(k);
            std::optional<Edge> pair;
            for (int u = 0; u < k && !pair; ++u)
                for (int v = u + 1; v < k && !pair; ++v) {
                    if (sf.graph.adjacent(u, v)) continue;
                    if (chromatic(sub_frame(sf, side_all - VertexSet{u, v}).frame) != chi_side - 1) continue;
                    if (chromatic(sub_frame(sf, side_all - VertexSet{u}).frame) != chi_side - 1) continue;
                    if (chromatic(sub_frame(sf, side_all - VertexSet{v}).frame) != chi_side - 1) continue;
                    pair = Edge{u, v};
                }
            if (!pair) violation(f, ell, "ParityGlue", "no non-adjacent pair u, v with chi dropping by one on each deletion");
            pairs.push_back(*pair);
        }
        std::vector<int> us, vs;
        for (std::size_t i = 0; i < 2; ++i) {
            const Child& side = i == 0 ? c1 : c2;
            us.push_back(side.old_index[static_cast<std::size_t>(pairs[i].first)]);
            vs.push_back(side.old_index[static_cast<std::size_t>(pairs[i].second)]);
        }
        record(TraceKind::ParityGlue, depth, f, ell,
               {{"V1", labels(f, v1.members())}, {"V2", labels(f, v2.members())}, {"u", labels(f, us)}, {"v", labels(f, vs)}});

        MinorModel glued;
        for (std::size_t i = 0; i < 2; ++i) {
            const Child& side = i == 0 ? c1 : c2;
            const Frame& sf = side.frame;
            const int ell_side = (chromatic(sf) - 1) / 2;
            Child rest = sub_frame(sf, VertexSet::range(sf.graph.order()) - VertexSet{pairs[i].first, pairs[i].second});
            glued = merge(std::move(glued), relabel_model(relabel_model(chi(rest.frame, ell_side, depth + 1), rest.old_index),
                                                          side.old_index));
        }
        std::sort(us.begin(), us.end());
        std::sort(vs.begin(), vs.end());
        glued.clique_side.push_back(us);
        glued.independent_side.push_back(vs);
        return checked(f, target, glued, "ParityGlue");
    }

private:
    static MinorModel direct_clique(int n, int ell, int m) {
        MinorModel model;
        for (int v = 0; v < ell + m && v < n; ++v) (v < ell ? model.clique_side : model.independent_side).push_back({v});
        return model;
    }

    MinorModel fallback(const Frame& f, int ell, int depth, TraceKind kind,
                        std::vector<std::pair<std::string, std::vector<int>>> data) {
        const int k = ceil_half(f.graph.order());
        auto found = find_minor_bruteforce(f.graph, MinorTarget::complete(k), options_.oracle);
        if (!found) violation(f, ell, to_string(kind), "no K_" + std::to_string(k) + " minor found by exhaustive search");
        MinorModel model;
        for (std::size_t i = 0; i < found->clique_side.size(); ++i)
            (static_cast<int>(i) < ell ? model.clique_side : model.independent_side).push_back(found->clique_side[i]);
        record(kind, depth, f, ell, std::move(data));
        return checked(f, MinorTarget::clique_join_independent(ell, k - ell), model, to_string(kind));
    }

    std::vector<int> labels(const Frame& f, const std::vector<int>& local, bool sorted = true) const {
        std::vector<int> out;
        for (int v : local) out.push_back(f.origin[static_cast<std::size_t>(v)]);
        if (sorted) std::sort(out.begin(), out.end());
        return out;
    }

    void record(TraceKind kind, int depth, const Frame& f, int ell,
                std::vector<std::pair<std::string, std::vector<int>>> data) {
        trace.push_back({kind, depth, f.graph.order(), ell, std::move(data)});
    }

    void guard_depth(const Frame& f, int ell, int depth) const {
        if (depth > input_.order()) violation(f, ell, "recursion", "depth exceeds the input order");
    }

    MinorModel checked(const Frame& f, const MinorTarget& target, MinorModel model, const std::string& step) const {
        if (auto problems = validate_model(f.graph, target, model); !problems.empty())
            violation(f, target.clique_count, step, "model fails validation: " + problems.front());
        return model;
    }

    [[noreturn]] void violation(const Frame& f, int ell, const std::string& step, const std::string& what) const {
        std::string vertices;
        for (int o : f.origin) vertices += (vertices.empty() ? "" : ",") + std::to_string(o);
        throw InvariantViolation("invariant violation in " + step + ": " + what + " [graph6=" + emit_graph6(f.graph) +
                                 " ell=" + std::to_string(ell) + " input_vertices={" + vertices +
                                 "} input_graph6=" + emit_graph6(input_) + "]");
    }

    const Graph& input_;
    const ConstructOptions& options_;
    std::unordered_map<std::uint64_t, int> chi_memo_;
};

void require_alpha2(const Graph& g, const char* who) {
    require_word_order(g, who);
    if (!alpha_at_most_two(g)) throw PreconditionError(std::string(who) + ": independence number exceeds two");
}

Certificate finish(const Graph& g, MinorForm form, int ell, int chi, const MinorTarget& target, MinorModel model,
                   std::vector<TraceStep> trace) {
    model.canonicalize();
    if (auto problems = validate_model(g, target, model); !problems.empty())
        throw InvariantViolation("final model fails validation: " + problems.front() + " [graph6=" + emit_graph6(g) + "]");
    return Certificate{g, form, ell, chi, target, std::move(model), std::move(trace), true};
}

Frame root_frame(const Graph& g) {
    Frame f{g, std::vector<int>(static_cast<std::size_t>(g.order()))};
    std::iota(f.origin.begin(), f.origin.end(), 0);
    return f;
}

}  // namespace

Edge select_edge_small_case(const Graph& g, int ell) {
    if (!alpha_at_most_two(g)) throw PreconditionError("select_edge_small_case: independence number exceeds two");
    if (g.is_complete()) throw PreconditionError("select_edge_small_case: graph is complete");
    if (clique_number(g).size > ell) throw PreconditionError("select_edge_small_case: omega exceeds ell");
    const int n = g.order();
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            if (g.adjacent(x, y)) continue;
            const VertexSet common = g.neighbors(x) & g.neighbors(y);
            if (common.empty()) continue;
            const Edge e{common.first(), x};
            if (non_neighborhood_of_edge(g, e).size() > ell - 1)
                throw InvariantViolation("select_edge_small_case: recipe edge has |M_uv| > ell - 1 [graph6=" +
                                         emit_graph6(g) + " ell=" + std::to_string(ell) + "]");
            return e;
        }
    for (auto e : g.edges())
        if (non_neighborhood_of_edge(g, e).size() <= ell - 1) return e;
    throw NoQualifyingEdge("select_edge_small_case: no non-adjacent pair has a common neighbour and no edge has |M_uv| <= " +
                           std::to_string(ell - 1) + " [graph6=" + emit_graph6(g) + "]");
}

SmallCaseOutcome small_case_step(const Graph& g, Edge uv, P3Packing packing) {
    SmallCaseOutcome out;
    out.uv = uv;
    out.initial = packing;
    ExchangeResult ex = exchange_improve(g, uv, std::move(packing));
    out.final_packing = std::move(ex.packing);
    out.exchanges = ex.iterations;
    const VertexSet pair{uv.first, uv.second};
    out.leftover = VertexSet::range(g.order()) - out.final_packing.vertices() - pair;
    out.leftover_covered = out.leftover.is_subset_of(closed_neighborhood(g, pair));
    if (out.leftover_covered) {
        std::vector<VertexSet> groups{pair};
        for (const auto& t : out.final_packing.triples) groups.push_back(VertexSet{t.a1, t.a2, t.a3});
        out.model = contract_and_lift(g, groups, out.leftover.members());
    }
    return out;
}

Certificate construct_half_minor(const Graph& g, int ell, const ConstructOptions& options) {
    require_alpha2(g, "construct_half_minor");
    if (ell < 1 || 2 * ell > ceil_half(g.order()))
        throw PreconditionError("construct_half_minor: need 1 <= ell and 2 ell <= ceil(n/2)");
    Builder b(g, options);
    MinorModel model = b.half(root_frame(g), ell, 0);
    const auto target = MinorTarget::clique_join_independent(ell, ceil_half(g.order()) - ell);
    return finish(g, MinorForm::Half, ell, chromatic_number_alpha2(g), target, std::move(model), std::move(b.trace));
}

Certificate construct_chi_minor(const Graph& g, int ell, const ConstructOptions& options) {
    require_alpha2(g, "construct_chi_minor");
    Builder b(g, options);
    const Frame root = root_frame(g);
    const int chi = b.chromatic(root);
    if (ell < 1 || 2 * ell > chi) throw PreconditionError("construct_chi_minor: need 1 <= ell and 2 ell <= chi");
    MinorModel model = b.chi(root, ell, 0);
    const auto target = MinorTarget::clique_join_independent(ell, chi - ell);
    return finish(g, MinorForm::Chromatic, ell, chi, target, std::move(model), std::move(b.trace));
}

}  // namespace a2m
