#include "a2m/canonical.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace a2m {

namespace {

// Colour refinement (1-dimensional Weisfeiler-Leman). New colours are ranks
// of (old colour, sorted neighbour colours), so the result does not depend
// on the input labelling.
std::vector<int> refine(const std::vector<std::uint64_t>& rows, std::vector<int> color) {
    const int n = static_cast<int>(rows.size());
    int classes = -1;
    while (true) {
        std::vector<std::pair<int, std::vector<int>>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& [c, nb] = sig[static_cast<std::size_t>(v)];
            c = color[static_cast<std::size_t>(v)];
            for (std::uint64_t bits = rows[static_cast<std::size_t>(v)]; bits != 0; bits &= bits - 1)
                nb.push_back(color[static_cast<std::size_t>(std::countr_zero(bits))]);
            std::sort(nb.begin(), nb.end());
        }
        auto distinct = sig;
        std::sort(distinct.begin(), distinct.end());
        distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
        for (int v = 0; v < n; ++v)
            color[static_cast<std::size_t>(v)] = static_cast<int>(
                std::lower_bound(distinct.begin(), distinct.end(), sig[static_cast<std::size_t>(v)]) -
                distinct.begin());
        if (static_cast<int>(distinct.size()) == classes) return color;
        classes = static_cast<int>(distinct.size());
    }
}

class Search {
public:
    Search(const std::vector<std::uint64_t>& rows, const std::vector<int>& color)
        : rows_(rows), n_(static_cast<int>(rows.size())), color_(color) {
        std::vector<int> by_color(static_cast<std::size_t>(n_));
        std::iota(by_color.begin(), by_color.end(), 0);
        std::stable_sort(by_color.begin(), by_color.end(),
                         [&](int a, int b) { return color_[static_cast<std::size_t>(a)] < color_[static_cast<std::size_t>(b)]; });
        position_color_.resize(static_cast<std::size_t>(n_));
        for (int p = 0; p < n_; ++p) position_color_[static_cast<std::size_t>(p)] = color_[static_cast<std::size_t>(by_color[static_cast<std::size_t>(p)])];

        // Twins (equal open or closed neighbourhoods, same colour) are
        // interchangeable by an automorphism; keep one representative choice.
        twin_below_.assign(static_cast<std::size_t>(n_), 0);
        for (int v = 0; v < n_; ++v)
            for (int u = 0; u < v; ++u) {
                if (color_[static_cast<std::size_t>(u)] != color_[static_cast<std::size_t>(v)]) continue;
                std::uint64_t bu = std::uint64_t{1} << u, bv = std::uint64_t{1} << v;
                std::uint64_t nu = rows_[static_cast<std::size_t>(u)] & ~bv, nv = rows_[static_cast<std::size_t>(v)] & ~bu;
                if (nu == nv) twin_below_[static_cast<std::size_t>(v)] |= bu;
            }
        cur_.assign(static_cast<std::size_t>(n_), 0);
        perm_.assign(static_cast<std::size_t>(n_), -1);
    }

    CanonicalLabeling run() {
        descend(0, false);
        CanonicalLabeling out;
        out.order = best_perm_;
        out.key.reserve(static_cast<std::size_t>(n_) * 9 + 2);
        out.key.push_back(static_cast<char>(n_));
        for (int p = 0; p < n_; ++p) {
            out.key.push_back(static_cast<char>(position_color_[static_cast<std::size_t>(p)] & 0xff));
            for (int s = 0; s < 64; s += 8) out.key.push_back(static_cast<char>((best_[static_cast<std::size_t>(p)] >> s) & 0xff));
        }
        return out;
    }

private:
    // Returns true when the best labelling was replaced somewhere below.
    bool descend(int depth, bool greater) {
        if (depth == n_) {
            if (greater || !has_best_) {
                best_ = cur_;
                best_perm_ = perm_;
                has_best_ = true;
                return true;
            }
            return false;
        }
        bool updated = false;
        const int want = position_color_[static_cast<std::size_t>(depth)];
        for (int v = 0; v < n_; ++v) {
            std::uint64_t bit = std::uint64_t{1} << v;
            if ((used_ & bit) != 0 || color_[static_cast<std::size_t>(v)] != want) continue;
            if ((twin_below_[static_cast<std::size_t>(v)] & ~used_) != 0) continue;
            std::uint64_t column = 0;
            for (int p = 0; p < depth; ++p)
                if ((rows_[static_cast<std::size_t>(v)] >> perm_[static_cast<std::size_t>(p)]) & 1U)
                    column |= std::uint64_t{1} << (depth - 1 - p);
            bool g = greater;
            if (!g && has_best_) {
                if (column < best_[static_cast<std::size_t>(depth)]) continue;
                if (column > best_[static_cast<std::size_t>(depth)]) g = true;
            }
            cur_[static_cast<std::size_t>(depth)] = column;
            perm_[static_cast<std::size_t>(depth)] = v;
            used_ |= bit;
            if (descend(depth + 1, g)) {
                updated = true;
                greater = false;
            }
            used_ &= ~bit;
        }
        return updated;
    }

    const std::vector<std::uint64_t>& rows_;
    int n_;
    std::vector<int> color_;
    std::vector<int> position_color_;
    std::vector<std::uint64_t> twin_below_;
    std::vector<std::uint64_t> cur_, best_;
    std::vector<int> perm_, best_perm_;
    std::uint64_t used_ = 0;
    bool has_best_ = false;
};

}  // namespace

CanonicalLabeling canonical_labeling(const Graph& g, const std::vector<int>& colors) {
    require_word_order(g, "canonical_labeling");
    const auto rows = g.rows();
    std::vector<int> initial = colors;
    if (initial.empty()) initial.assign(static_cast<std::size_t>(g.order()), 0);
    if (static_cast<int>(initial.size()) != g.order())
        throw std::invalid_argument("canonical_labeling: colour vector size mismatch");
    // Rank user colours first so the key depends only on their order.
    {
        auto sorted = initial;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (auto& c : initial) c = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), c) - sorted.begin());
    }
    return Search(rows, refine(rows, initial)).run();
}

bool isomorphic(const Graph& a, const Graph& b) {
    if (a.order() != b.order() || a.edge_count() != b.edge_count()) return false;
    return canonical_key(a) == canonical_key(b);
}

Graph relabel(const Graph& g, const std::vector<int>& order) {
    std::vector<int> pos(order.size());
    for (std::size_t p = 0; p < order.size(); ++p) pos[static_cast<std::size_t>(order[p])] = static_cast<int>(p);
    Graph out(g.order());
    for (auto [u, v] : g.edges()) out.add_edge(pos[static_cast<std::size_t>(u)], pos[static_cast<std::size_t>(v)]);
    return out;
}

}  // namespace a2m
