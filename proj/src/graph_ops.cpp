#include "a2m/graph_ops.hpp"

#include <algorithm>
#include <limits>
#include <queue>
#include <string>
#include <tuple>

namespace a2m {

Provenance InducedSubgraph::provenance() const {
    Provenance p;
    p.source_order = source_order;
    p.origin.reserve(old_index.size());
    for (int v : old_index) p.origin.push_back({v});
    return p;
}

Graph complement(const Graph& g) {
    const int n = g.order();
    Graph out(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) out.add_edge(u, v);
    return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& keep) {
    if (!keep.empty() && keep.last() >= g.order())
        throw std::out_of_range("induced_subgraph: vertex " + std::to_string(keep.last()) +
                                " out of range for order " + std::to_string(g.order()));
    InducedSubgraph out;
    out.source_order = g.order();
    out.old_index = keep.members();
    std::vector<int> new_index(static_cast<std::size_t>(g.order()), -1);
    for (std::size_t i = 0; i < out.old_index.size(); ++i)
        new_index[static_cast<std::size_t>(out.old_index[i])] = static_cast<int>(i);
    out.graph = Graph(static_cast<int>(out.old_index.size()));
    for (std::size_t i = 0; i < out.old_index.size(); ++i) {
        (g.neighbors(out.old_index[i]) & keep).for_each([&](int w) {
            int j = new_index[static_cast<std::size_t>(w)];
            if (static_cast<int>(i) < j) out.graph.add_edge(static_cast<int>(i), j);
        });
    }
    return out;
}

InducedSubgraph delete_vertices(const Graph& g, const VertexSet& drop) {
    return induced_subgraph(g, VertexSet::range(g.order()) - drop);
}

Contraction contract_set(const Graph& g, const VertexSet& s) {
    const int n = g.order();
    if (s.empty()) throw std::invalid_argument("contract_set: empty set");
    if (s.last() >= n) throw std::out_of_range("contract_set: vertex out of range");
    if (!is_connected_subset(g, s))
        throw std::invalid_argument("contract_set: set does not induce a connected subgraph");

    const int merged_old = s.first();
    std::vector<int> new_index(static_cast<std::size_t>(n), -1);
    Contraction out;
    out.provenance.source_order = n;
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (v == merged_old) {
            out.merged_vertex = next;
            new_index[static_cast<std::size_t>(v)] = next++;
            out.provenance.origin.push_back(s.members());
        } else if (!s.contains(v)) {
            new_index[static_cast<std::size_t>(v)] = next++;
            out.provenance.origin.push_back({v});
        }
    }
    for (int v : s.members()) new_index[static_cast<std::size_t>(v)] = out.merged_vertex;

    out.graph = Graph(next);
    for (auto [u, v] : g.edges()) {
        int a = new_index[static_cast<std::size_t>(u)];
        int b = new_index[static_cast<std::size_t>(v)];
        if (a != b && !out.graph.adjacent(a, b)) out.graph.add_edge(a, b);
    }
    return out;
}

VertexSet closed_neighborhood(const Graph& g, const VertexSet& s) {
    VertexSet out = s;
    s.for_each([&](int v) { out |= g.neighbors(v); });
    return out;
}

bool is_connected_subset(const Graph& g, const VertexSet& s) {
    if (s.empty()) return false;
    VertexSet seen{s.first()};
    VertexSet frontier = seen;
    while (!frontier.empty()) {
        VertexSet next;
        frontier.for_each([&](int v) { next |= g.neighbors(v); });
        next &= s;
        next -= seen;
        seen |= next;
        frontier = std::move(next);
    }
    return seen == s;
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || is_connected_subset(g, VertexSet::range(g.order()));
}

bool is_clique(const Graph& g, const VertexSet& s) {
    bool ok = true;
    s.for_each([&](int v) {
        if (ok && !(s - VertexSet{v}).is_subset_of(g.neighbors(v))) ok = false;
    });
    return ok;
}

namespace {

// Unit-capacity max flow on the vertex-split digraph: vertex v becomes
// in(v) = 2v and out(v) = 2v+1 joined by an arc of capacity 1; graph edges
// become arcs of unbounded capacity.
class SplitFlow {
public:
    explicit SplitFlow(const Graph& g) : n_(g.order()) {
        const int nodes = 2 * n_;
        head_.assign(static_cast<std::size_t>(nodes), -1);
        for (int v = 0; v < n_; ++v) add_arc(2 * v, 2 * v + 1, 1);
        for (auto [u, v] : g.edges()) {
            add_arc(2 * u + 1, 2 * v, kInf);
            add_arc(2 * v + 1, 2 * u, kInf);
        }
        base_cap_ = cap_;
    }

    int max_flow(int s, int t, int limit) {
        cap_ = base_cap_;
        const int source = 2 * s + 1;
        const int sink = 2 * t;
        int flow = 0;
        std::vector<int> parent_arc(head_.size());
        while (flow < limit) {
            std::fill(parent_arc.begin(), parent_arc.end(), -1);
            std::queue<int> q;
            q.push(source);
            parent_arc[static_cast<std::size_t>(source)] = -2;
            while (!q.empty() && parent_arc[static_cast<std::size_t>(sink)] == -1) {
                int x = q.front();
                q.pop();
                for (int a = head_[static_cast<std::size_t>(x)]; a != -1; a = next_[static_cast<std::size_t>(a)]) {
                    int y = to_[static_cast<std::size_t>(a)];
                    if (cap_[static_cast<std::size_t>(a)] > 0 && parent_arc[static_cast<std::size_t>(y)] == -1) {
                        parent_arc[static_cast<std::size_t>(y)] = a;
                        q.push(y);
                    }
                }
            }
            if (parent_arc[static_cast<std::size_t>(sink)] == -1) break;
            for (int y = sink; y != source;) {
                int a = parent_arc[static_cast<std::size_t>(y)];
                cap_[static_cast<std::size_t>(a)] -= 1;
                cap_[static_cast<std::size_t>(a ^ 1)] += 1;
                y = to_[static_cast<std::size_t>(a ^ 1)];
            }
            ++flow;
        }
        return flow;
    }

private:
    static constexpr int kInf = std::numeric_limits<int>::max() / 4;

    void add_arc(int from, int to, int cap) {
        for (auto [a, b, c] : {std::tuple{from, to, cap}, std::tuple{to, from, 0}}) {
            to_.push_back(b);
            cap_.push_back(c);
            next_.push_back(head_[static_cast<std::size_t>(a)]);
            head_[static_cast<std::size_t>(a)] = static_cast<int>(to_.size()) - 1;
        }
    }

    int n_;
    std::vector<int> head_, next_, to_, cap_, base_cap_;
};

}  // namespace

int vertex_connectivity(const Graph& g) {
    const int n = g.order();
    if (g.is_complete()) return std::max(0, n - 1);
    if (!is_connected(g)) return 0;
    SplitFlow flow(g);
    int best = n - 1;
    // Even's bound: some vertex among the first best+1 avoids a minimum separator.
    for (int i = 0; i < n && i <= best; ++i)
        for (int j = i + 1; j < n; ++j)
            if (!g.adjacent(i, j)) best = std::min(best, flow.max_flow(i, j, best));
    return best;
}

Graph join(const Graph& g, const Graph& h) {
    const int a = g.order();
    Graph out(a + h.order());
    for (auto [u, v] : g.edges()) out.add_edge(u, v);
    for (auto [u, v] : h.edges()) out.add_edge(a + u, a + v);
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < h.order(); ++v) out.add_edge(u, a + v);
    return out;
}

}  // namespace a2m
