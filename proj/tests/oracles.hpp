// Slow, independent reference implementations used only by tests. None of
// them call the library's algorithms; they read graphs through adjacent()
// and order() only.
#pragma once

#include <algorithm>
#include <array>
#include <functional>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "a2m/graph.hpp"
#include "a2m/minor.hpp"

namespace oracle {

using a2m::Graph;
using Matrix = std::vector<std::vector<char>>;

inline Matrix matrix(const Graph& g) {
    const int n = g.order();
    Matrix m(n, std::vector<char>(n, 0));
    for (int u = 0; u < n; ++u)
        for (int v = 0; v < n; ++v) m[u][v] = u != v && g.adjacent(u, v);
    return m;
}

inline int independence_number(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    int best = 0;
    std::vector<int> chosen;
    std::function<void(int)> go = [&](int v) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (int w = v; w < n; ++w) {
            if (std::any_of(chosen.begin(), chosen.end(), [&](int c) { return a[c][w]; })) continue;
            chosen.push_back(w);
            go(w + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return best;
}

inline int clique_number(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    int best = 0;
    std::vector<int> chosen;
    std::function<void(int)> go = [&](int v) {
        best = std::max(best, static_cast<int>(chosen.size()));
        for (int w = v; w < n; ++w) {
            if (!std::all_of(chosen.begin(), chosen.end(), [&](int c) { return a[c][w]; })) continue;
            chosen.push_back(w);
            go(w + 1);
            chosen.pop_back();
        }
    };
    go(0);
    return best;
}

/// Exact colouring: DSATUR order with branch and bound.
inline int chromatic_number(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    if (n == 0) return 0;
    std::vector<int> colour(n, -1);
    int best = n;
    std::function<void(int, int)> go = [&](int coloured, int used) {
        if (used >= best) return;
        if (coloured == n) {
            best = used;
            return;
        }
        int pick = -1, pick_sat = -1, pick_deg = -1;
        for (int v = 0; v < n; ++v) {
            if (colour[v] >= 0) continue;
            std::set<int> seen;
            int deg = 0;
            for (int w = 0; w < n; ++w)
                if (a[v][w]) {
                    if (colour[w] >= 0) seen.insert(colour[w]);
                    else ++deg;
                }
            const int sat = static_cast<int>(seen.size());
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) pick = v, pick_sat = sat, pick_deg = deg;
        }
        for (int c = 0; c <= used && c < best; ++c) {
            bool ok = true;
            for (int w = 0; w < n && ok; ++w) ok = !(a[pick][w] && colour[w] == c);
            if (!ok) continue;
            colour[pick] = c;
            go(coloured + 1, std::max(used, c + 1));
            colour[pick] = -1;
        }
    };
    go(0, 0);
    return best;
}

inline int matching_number(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    std::vector<char> used(n, 0);
    std::function<int(int)> go = [&](int v) -> int {
        while (v < n && used[v]) ++v;
        if (v >= n) return 0;
        used[v] = 1;
        int best = go(v + 1);
        for (int w = v + 1; w < n; ++w)
            if (a[v][w] && !used[w]) {
                used[w] = 1;
                best = std::max(best, 1 + go(v + 1));
                used[w] = 0;
            }
        used[v] = 0;
        return best;
    };
    return go(0);
}

inline bool connected_without(const Matrix& a, const std::vector<char>& removed) {
    const int n = static_cast<int>(a.size());
    int start = -1, alive = 0;
    for (int v = 0; v < n; ++v)
        if (!removed[v]) {
            ++alive;
            if (start < 0) start = v;
        }
    if (alive <= 1) return true;
    std::vector<char> seen(n, 0);
    std::vector<int> stack{start};
    seen[start] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < n; ++w)
            if (a[v][w] && !removed[w] && !seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == alive;
}

/// Smallest separator by trying every vertex subset; n - 1 for complete graphs.
inline int vertex_connectivity(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    int best = std::max(n - 1, 0);
    for (unsigned s = 0; s < (1U << n); ++s) {
        const int size = __builtin_popcount(s);
        if (size >= best || n - size < 2) continue;
        std::vector<char> removed(n, 0);
        for (int v = 0; v < n; ++v) removed[v] = (s >> v) & 1U;
        if (!connected_without(a, removed)) best = size;
    }
    return best;
}

/// Induced P3s as sorted vertex triples.
inline std::vector<std::array<int, 3>> induced_p3s(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    std::vector<std::array<int, 3>> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            for (int z = y + 1; z < n; ++z)
                if (a[x][y] + a[y][z] + a[x][z] == 2) out.push_back({x, y, z});
    return out;
}

inline bool has_p3_packing(const Graph& g, int ell) {
    const auto triples = induced_p3s(g);
    std::vector<char> used(g.order(), 0);
    std::function<bool(std::size_t, int)> go = [&](std::size_t from, int left) -> bool {
        if (left == 0) return true;
        for (std::size_t i = from; i < triples.size(); ++i) {
            const auto& t = triples[i];
            if (used[t[0]] || used[t[1]] || used[t[2]]) continue;
            for (int v : t) used[v] = 1;
            const bool ok = go(i + 1, left - 1);
            for (int v : t) used[v] = 0;
            if (ok) return true;
        }
        return false;
    };
    return go(0, ell);
}

/// 2 * min cap(C) over all nonempty cliques C, straight from the definition.
inline int min_doubled_capacity(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    int best = 1 << 30;
    for (unsigned s = 1; s < (1U << n); ++s) {
        bool clique = true;
        for (int u = 0; u < n && clique; ++u)
            for (int v = u + 1; v < n && clique; ++v)
                if (((s >> u) & 1U) && ((s >> v) & 1U) && !a[u][v]) clique = false;
        if (!clique) continue;
        int full = 0, none = 0, mixed = 0;
        for (int x = 0; x < n; ++x) {
            if ((s >> x) & 1U) continue;
            int hits = 0, size = 0;
            for (int c = 0; c < n; ++c)
                if ((s >> c) & 1U) ++size, hits += a[x][c];
            if (hits == size) ++full;
            else if (hits == 0) ++none;
            else ++mixed;
        }
        best = std::min(best, 2 * mixed + full + none);
    }
    return best;
}

inline std::string adjacency_word(const Matrix& a, const std::vector<int>& perm) {
    const int n = static_cast<int>(perm.size());
    std::string s;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += a[perm[i]][perm[j]] ? '1' : '0';
    return s;
}

/// Minimum adjacency word over every vertex ordering. Keep n <= 8.
inline std::string brute_canonical(const Graph& g) {
    const auto a = matrix(g);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    bool first = true;
    do {
        auto w = adjacency_word(a, perm);
        if (first || w < best) best = w, first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(g.order()) + ":" + best;
}

/// Canonical word restricted to orderings that sort vertices by
/// (degree, sorted neighbour degrees); fast enough for n <= 9.
inline std::string refined_canonical(const Graph& g) {
    const auto a = matrix(g);
    const int n = g.order();
    std::vector<int> deg(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w = 0; w < n; ++w) deg[v] += a[v][w];
    std::vector<std::vector<int>> label(n);
    for (int v = 0; v < n; ++v) {
        label[v].push_back(deg[v]);
        std::vector<int> nd;
        for (int w = 0; w < n; ++w)
            if (a[v][w]) nd.push_back(deg[w]);
        std::sort(nd.begin(), nd.end());
        label[v].insert(label[v].end(), nd.begin(), nd.end());
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return label[x] < label[y]; });
    // Cells of equal labels, permuted independently.
    std::vector<std::pair<int, int>> cells;
    for (int i = 0; i < n;) {
        int j = i;
        while (j < n && label[order[j]] == label[order[i]]) ++j;
        cells.emplace_back(i, j);
        i = j;
    }
    std::string best;
    bool first = true;
    std::function<void(std::size_t)> go = [&](std::size_t c) {
        if (c == cells.size()) {
            auto w = adjacency_word(a, order);
            if (first || w < best) best = w, first = false;
            return;
        }
        auto [lo, hi] = cells[c];
        std::sort(order.begin() + lo, order.begin() + hi);
        do go(c + 1);
        while (std::next_permutation(order.begin() + lo, order.begin() + hi));
    };
    go(0);
    std::string sig;
    for (int v : order) {
        for (int x : label[v]) sig += std::to_string(x) + ".";
        sig += "|";
    }
    return sig + best;
}

/// Level-by-level growth of triangle-free graphs with global
/// deduplication by refined_canonical, then complements. Generation order
/// differs from the library's enumerator.
inline std::vector<Graph> alpha2_by_levels(int n) {
    std::vector<Graph> level{Graph(0)};
    for (int k = 0; k < n; ++k) {
        std::set<std::string> seen;
        std::vector<Graph> next;
        for (const auto& h : level) {
            const auto a = matrix(h);
            for (unsigned s = 0; s < (1U << k); ++s) {
                bool independent = true;
                for (int x = 0; x < k && independent; ++x)
                    for (int y = x + 1; y < k && independent; ++y)
                        if (((s >> x) & 1U) && ((s >> y) & 1U) && a[x][y]) independent = false;
                if (!independent) continue;
                Graph g(k + 1);
                for (int x = 0; x < k; ++x)
                    for (int y = x + 1; y < k; ++y)
                        if (a[x][y]) g.add_edge(x, y);
                for (int x = 0; x < k; ++x)
                    if ((s >> x) & 1U) g.add_edge(x, k);
                if (seen.insert(refined_canonical(g)).second) next.push_back(std::move(g));
            }
        }
        level = std::move(next);
    }
    std::vector<Graph> out;
    for (const auto& h : level) {
        Graph c(h.order());
        for (int u = 0; u < h.order(); ++u)
            for (int v = u + 1; v < h.order(); ++v)
                if (!h.adjacent(u, v)) c.add_edge(u, v);
        out.push_back(std::move(c));
    }
    return out;
}

/// Independent model check: membership by table, connectivity by BFS,
/// adjacency by scanning all vertex pairs.
inline bool model_ok(const Graph& g, const a2m::MinorTarget& target, const a2m::MinorModel& model) {
    const auto a = matrix(g);
    const int n = g.order();
    const bool complete = target.kind == a2m::MinorTarget::Kind::CompleteGraph;
    if (static_cast<int>(model.clique_side.size()) != target.clique_count) return false;
    if (static_cast<int>(model.independent_side.size()) != (complete ? 0 : target.independent_count)) return false;
    std::vector<std::vector<int>> sets = model.clique_side;
    sets.insert(sets.end(), model.independent_side.begin(), model.independent_side.end());
    std::vector<int> owner(n, -1);
    for (std::size_t i = 0; i < sets.size(); ++i) {
        if (sets[i].empty()) return false;
        for (int v : sets[i]) {
            if (v < 0 || v >= n || owner[v] != -1) return false;
            owner[v] = static_cast<int>(i);
        }
        std::vector<char> removed(n, 1);
        for (int v : sets[i]) removed[v] = 0;
        if (!connected_without(a, removed)) return false;
    }
    const std::size_t cliques = model.clique_side.size();
    for (std::size_t i = 0; i < sets.size(); ++i)
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (i >= cliques && j >= cliques) continue;
            bool touch = false;
            for (int x : sets[i])
                for (int y : sets[j]) touch = touch || a[x][y];
            if (!touch) return false;
        }
    return true;
}

/// Minor existence by assigning every vertex to a branch set or to nothing.
/// (k + 1)^n assignments; keep it tiny.
inline bool has_minor_by_assignment(const Graph& g, const a2m::MinorTarget& target) {
    const int n = g.order();
    const int k = target.total();
    std::vector<int> assign(n, 0);
    while (true) {
        a2m::MinorModel m;
        m.clique_side.resize(target.clique_count);
        m.independent_side.resize(target.kind == a2m::MinorTarget::Kind::CompleteGraph ? 0 : target.independent_count);
        for (int v = 0; v < n; ++v) {
            if (assign[v] == 0) continue;
            const int s = assign[v] - 1;
            (s < target.clique_count ? m.clique_side[s] : m.independent_side[s - target.clique_count]).push_back(v);
        }
        if (model_ok(g, target, m)) return true;
        int i = 0;
        while (i < n && ++assign[i] > k) assign[i++] = 0;
        if (i == n) return false;
    }
}

}  // namespace oracle
