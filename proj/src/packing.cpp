#include "a2m/packing.hpp"

#include <bit>
#include <string>
#include <unordered_set>

#include "a2m/graph_ops.hpp"
#include "a2m/invariants.hpp"

namespace a2m {

VertexSet P3Packing::vertices() const {
    VertexSet out;
    for (const auto& t : triples) {
        out.insert(t.a1);
        out.insert(t.a2);
        out.insert(t.a3);
    }
    return out;
}

std::string packing_problem(const Graph& g, const P3Packing& packing) {
    VertexSet used;
    for (std::size_t i = 0; i < packing.triples.size(); ++i) {
        const auto& t = packing.triples[i];
        const std::string name = "triple " + std::to_string(i);
        for (int v : {t.a1, t.a2, t.a3}) {
            if (v < 0 || v >= g.order()) return name + " has out-of-range vertex " + std::to_string(v);
            if (used.contains(v)) return name + " reuses vertex " + std::to_string(v);
            used.insert(v);
        }
        if (!g.adjacent(t.a1, t.a2) || !g.adjacent(t.a2, t.a3)) return name + " is missing a path edge";
        if (g.adjacent(t.a1, t.a3)) return name + " is not induced (ends adjacent)";
    }
    return {};
}

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }

class Packer {
public:
    Packer(const Graph& g, Deadline deadline) : rows_(g.rows()), deadline_(deadline) {}

    std::optional<P3Packing> run(std::uint64_t allowed, int ell) {
        if (ell <= 0) return P3Packing{};
        if (!dfs(allowed, ell)) return std::nullopt;
        return P3Packing{chosen_};
    }

private:
    struct Key {
        std::uint64_t avail;
        int left;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        std::size_t operator()(const Key& k) const noexcept {
            return std::hash<std::uint64_t>{}(k.avail * 0x9E3779B97F4A7C15ULL ^ static_cast<std::uint64_t>(k.left));
        }
    };

    std::uint64_t row(int v) const { return rows_[static_cast<std::size_t>(v)]; }

    bool attempt(std::uint64_t rest, int left, P3 t) {
        chosen_.push_back(t);
        if (dfs(rest & ~bit(t.a1) & ~bit(t.a2) & ~bit(t.a3), left - 1)) return true;
        chosen_.pop_back();
        return false;
    }

    bool dfs(std::uint64_t avail, int left) {
        if (left == 0) return true;
        if (std::popcount(avail) < 3 * left) return false;
        if (deadline_ && (++nodes_ & 1023U) == 0 && std::chrono::steady_clock::now() > *deadline_)
            throw SearchTimeout("find_p3_packing: deadline exceeded");
        if (failed_.contains(Key{avail, left})) return false;

        // The lowest available vertex is either unused or lies on a triple
        // whose other vertices are all higher.
        const int v = std::countr_zero(avail);
        const std::uint64_t rest = avail & ~bit(v);
        const std::uint64_t nbrs = row(v) & rest;
        const std::uint64_t non_nbrs = rest & ~row(v);

        for (std::uint64_t as = nbrs; as != 0; as &= as - 1) {
            int a = std::countr_zero(as);
            for (std::uint64_t bs = row(a) & non_nbrs; bs != 0; bs &= bs - 1)
                if (attempt(rest, left, {v, a, std::countr_zero(bs)})) return true;
        }
        for (std::uint64_t as = nbrs; as != 0; as &= as - 1) {
            int a = std::countr_zero(as);
            std::uint64_t higher = ~((bit(a) << 1) - 1);
            for (std::uint64_t bs = nbrs & ~row(a) & higher; bs != 0; bs &= bs - 1)
                if (attempt(rest, left, {a, v, std::countr_zero(bs)})) return true;
        }
        if (dfs(rest, left)) return true;

        failed_.insert(Key{avail, left});
        return false;
    }

    std::vector<std::uint64_t> rows_;
    Deadline deadline_;
    std::vector<P3> chosen_;
    std::unordered_set<Key, KeyHash> failed_;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<P3Packing> find_p3_packing(const Graph& g, int ell, const VertexSet& allowed, Deadline deadline) {
    require_word_order(g, "find_p3_packing");
    if (ell < 0) throw PreconditionError("find_p3_packing: negative ell");
    return Packer(g, deadline).run((allowed & VertexSet::range(g.order())).mask(), ell);
}

std::optional<P3Packing> find_p3_packing(const Graph& g, int ell, Deadline deadline) {
    return find_p3_packing(g, ell, VertexSet::range(g.order()), deadline);
}

namespace {

// Branch and bound over cliques grown in increasing index order. Writing
// doubled(C) = (n - |C|) + |D(C)|: D only grows as C grows, and C can grow
// by at most a clique inside the remaining candidates, bounded by a greedy
// colouring of them.
class CapacityMinimizer {
public:
    explicit CapacityMinimizer(const Graph& g) : rows_(g.rows()), n_(g.order()) {
        all_ = n_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n_) - 1;
    }

    std::optional<CliqueCapacity> run() {
        if (n_ == 0) return std::nullopt;
        for (int v = 0; v < n_; ++v) {
            std::uint64_t complete = rows_[static_cast<std::size_t>(v)];
            std::uint64_t anti = all_ & ~complete & ~bit(v);
            expand(bit(v), complete, anti, complete & ~((bit(v) << 1) - 1));
        }
        return CliqueCapacity{VertexSet::from_mask(best_clique_), best_};
    }

private:
    int color_bound(std::uint64_t cand) const {
        int colors = 0;
        while (cand != 0) {
            ++colors;
            std::uint64_t avail = cand;
            while (avail != 0) {
                int v = std::countr_zero(avail);
                avail &= ~rows_[static_cast<std::size_t>(v)] & ~bit(v);
                cand &= ~bit(v);
            }
        }
        return colors;
    }

    void expand(std::uint64_t clique, std::uint64_t complete, std::uint64_t anti, std::uint64_t cand) {
        const int size = std::popcount(clique);
        const int mixed = n_ - size - std::popcount(complete) - std::popcount(anti);
        const int doubled = (n_ - size) + mixed;
        if (doubled < best_) {
            best_ = doubled;
            best_clique_ = clique;
        }
        if (cand == 0) return;
        if ((n_ - size - color_bound(cand)) + mixed >= best_) return;
        for (std::uint64_t cs = cand; cs != 0; cs &= cs - 1) {
            int w = std::countr_zero(cs);
            std::uint64_t row = rows_[static_cast<std::size_t>(w)];
            std::uint64_t higher = ~((bit(w) << 1) - 1);
            expand(clique | bit(w), complete & row, anti & ~row, cand & row & higher);
        }
    }

    std::vector<std::uint64_t> rows_;
    int n_;
    std::uint64_t all_ = 0;
    int best_ = 1 << 30;
    std::uint64_t best_clique_ = 0;
};

}  // namespace

std::optional<CliqueCapacity> min_clique_capacity(const Graph& g) {
    require_word_order(g, "min_clique_capacity");
    return CapacityMinimizer(g).run();
}

PackingConditionReport check_packing_conditions(const Graph& g, int ell) {
    if (ell < 0) throw PreconditionError("check_packing_conditions: negative ell");
    if (!alpha_at_most_two(g)) throw PreconditionError("check_packing_conditions: independence number exceeds two");
    PackingConditionReport r;
    r.ell = ell;
    r.size_ok = g.order() >= 3 * ell;
    r.connectivity = vertex_connectivity(g);
    r.connectivity_ok = r.connectivity >= ell;
    r.min_capacity_witness = min_clique_capacity(g);
    r.capacity_ok = !r.min_capacity_witness || r.min_capacity_witness->doubled_capacity >= 2 * ell;
    r.anti_matching_size = max_anti_matching(g).size();
    r.anti_matching_ok = r.anti_matching_size >= ell;
    r.five_wheel_exception = ell == 2 && is_five_wheel(g);
    return r;
}

bool packing_characterization_holds(const Graph& g, int ell) {
    if (!alpha_at_most_two(g)) throw PreconditionError("packing_characterization_holds: independence number exceeds two");
    if (ell == 2 && is_five_wheel(g)) throw PreconditionError("packing_characterization_holds: ell = 2 on the five-wheel");
    const bool conditions = check_packing_conditions(g, ell).all_hold();
    const bool packs = find_p3_packing(g, ell).has_value();
    return conditions == packs;
}

int free_neighborhood_measure(const Graph& g, Edge uv, const P3Packing& packing) {
    return (closed_neighborhood(g, VertexSet{uv.first, uv.second}) - packing.vertices()).size();
}

ExchangeResult exchange_improve(const Graph& g, Edge uv, P3Packing packing) {
    const auto [u, v] = uv;
    if (u < 0 || v < 0 || u >= g.order() || v >= g.order() || u == v || !g.adjacent(u, v))
        throw PreconditionError("exchange_improve: uv is not an edge");
    if (auto problem = packing_problem(g, packing); !problem.empty())
        throw PreconditionError("exchange_improve: invalid packing: " + problem);
    if (packing.vertices().contains(u) || packing.vertices().contains(v))
        throw PreconditionError("exchange_improve: packing meets {u, v}");
    if (!alpha_at_most_two(g)) throw PreconditionError("exchange_improve: independence number exceeds two");

    const VertexSet hood = closed_neighborhood(g, VertexSet{u, v});
    ExchangeResult result{std::move(packing), 0};
    auto& triples = result.packing.triples;

    auto swap_once = [&]() -> bool {
        const VertexSet covered = result.packing.vertices();
        const VertexSet outside = VertexSet::range(g.order()) - hood - covered;
        for (int b : outside.members()) {
            for (auto& t : triples) {
                if (!VertexSet{t.a1, t.a2, t.a3}.is_subset_of(hood)) continue;
                const bool b1 = g.adjacent(b, t.a1), b2 = g.adjacent(b, t.a2), b3 = g.adjacent(b, t.a3);
                if (b1 && b3)
                    t = {t.a3, b, t.a1};
                else if (b1 && !b2)
                    t = {t.a2, t.a1, b};
                else if (b1)
                    t = {t.a3, t.a2, b};
                else if (b3 && !b2)
                    t = {t.a2, t.a3, b};
                else if (b3)
                    t = {t.a1, t.a2, b};
                else
                    throw PreconditionError("exchange_improve: independent triple found");
                return true;
            }
        }
        return false;
    };
    while (swap_once()) ++result.iterations;
    return result;
}

}  // namespace a2m
