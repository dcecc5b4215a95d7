#include "a2m/invariants.hpp"

#include <algorithm>
#include <bit>

#include "a2m/canonical.hpp"
#include "a2m/graph_ops.hpp"
#include "a2m/matching.hpp"

namespace a2m {

bool alpha_at_most_two(const Graph& g) {
    const int n = g.order();
    const VertexSet all = VertexSet::range(n);
    for (int u = 0; u < n; ++u) {
        VertexSet non_u = all - g.neighbors(u);
        non_u.erase(u);
        bool independent_triple = false;
        non_u.for_each([&](int v) {
            if (independent_triple || v < u) return;
            VertexSet common = non_u - g.neighbors(v);
            common.erase(v);
            if (!common.empty()) independent_triple = true;
        });
        if (independent_triple) return false;
    }
    return true;
}

int chromatic_number_alpha2(const Graph& g) {
    if (!alpha_at_most_two(g))
        throw PreconditionError("chromatic_number_alpha2: graph has an independent set of size 3");
    return g.order() - matching_size(maximum_matching(complement(g)));
}

namespace {

// Tomita-style maximum clique: colour the candidates greedily, expand in
// reverse colour order, and cut when |current| + colour <= |best|.
class MaxClique {
public:
    explicit MaxClique(std::vector<std::uint64_t> rows) : rows_(std::move(rows)) {}

    CliqueResult run() {
        const int n = static_cast<int>(rows_.size());
        std::uint64_t all = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        expand(0, all);
        return {std::popcount(best_), VertexSet::from_mask(best_)};
    }

private:
    void expand(std::uint64_t current, std::uint64_t candidates) {
        if (candidates == 0) {
            if (std::popcount(current) > std::popcount(best_)) best_ = current;
            return;
        }
        std::vector<int> order;
        std::vector<int> bound;
        std::uint64_t uncolored = candidates;
        int color = 0;
        while (uncolored != 0) {
            ++color;
            std::uint64_t avail = uncolored;
            while (avail != 0) {
                int v = std::countr_zero(avail);
                avail &= ~rows_[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
                uncolored &= ~(std::uint64_t{1} << v);
                order.push_back(v);
                bound.push_back(color);
            }
        }
        const int have = std::popcount(current);
        for (int i = static_cast<int>(order.size()) - 1; i >= 0; --i) {
            if (have + bound[static_cast<std::size_t>(i)] <= std::popcount(best_)) return;
            int v = order[static_cast<std::size_t>(i)];
            expand(current | (std::uint64_t{1} << v), candidates & rows_[static_cast<std::size_t>(v)]);
            candidates &= ~(std::uint64_t{1} << v);
        }
    }

    std::vector<std::uint64_t> rows_;
    std::uint64_t best_ = 0;
};

}  // namespace

CliqueResult clique_number(const Graph& g) {
    require_word_order(g, "clique_number");
    if (g.order() == 0) return {};
    return MaxClique(g.rows()).run();
}

CapacityReport capacity(const Graph& g, const VertexSet& clique) {
    if (clique.empty()) throw PreconditionError("capacity: clique is empty");
    if (clique.last() >= g.order()) throw std::out_of_range("capacity: vertex out of range");
    if (!is_clique(g, clique)) throw PreconditionError("capacity: vertex set is not a clique");
    CapacityReport r;
    r.clique = clique;
    const int k = clique.size();
    for (int v = 0; v < g.order(); ++v) {
        if (clique.contains(v)) continue;
        int hits = (g.neighbors(v) & clique).size();
        if (hits == k)
            r.complete_part.insert(v);
        else if (hits == 0)
            r.anticomplete_part.insert(v);
        else
            r.mixed_part.insert(v);
    }
    r.doubled_capacity = 2 * r.mixed_part.size() + r.complete_part.size() + r.anticomplete_part.size();
    return r;
}

AntiMatching max_anti_matching(const Graph& g) {
    auto mate = maximum_matching(complement(g));
    AntiMatching out;
    for (int v = 0; v < g.order(); ++v)
        if (mate[static_cast<std::size_t>(v)] > v) out.pairs.emplace_back(v, mate[static_cast<std::size_t>(v)]);
    return out;
}

Graph five_wheel_graph() {
    Graph g(6);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i, 5);
    }
    return g;
}

bool is_five_wheel(const Graph& g) {
    if (g.order() != 6 || g.edge_count() != 10) return false;
    static const std::string key = canonical_key(five_wheel_graph());
    return canonical_key(g) == key;
}

bool is_vertex_critical(const Graph& g) {
    const int chi = chromatic_number_alpha2(g);
    for (int v = 0; v < g.order(); ++v)
        if (chromatic_number_alpha2(delete_vertices(g, VertexSet{v}).graph) >= chi) return false;
    return true;
}

std::vector<VertexSet> co_components(const Graph& g) {
    const int n = g.order();
    const VertexSet all = VertexSet::range(n);
    VertexSet unseen = all;
    std::vector<VertexSet> out;
    while (!unseen.empty()) {
        VertexSet comp{unseen.first()};
        VertexSet frontier = comp;
        while (!frontier.empty()) {
            VertexSet next;
            frontier.for_each([&](int v) { next |= (unseen - g.neighbors(v)); });
            next -= comp;
            comp |= next;
            frontier = std::move(next);
        }
        unseen -= comp;
        out.push_back(std::move(comp));
    }
    return out;
}

}  // namespace a2m
