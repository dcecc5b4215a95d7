#include "a2m/minor.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace a2m {

MinorTarget MinorTarget::complete(int k) {
    if (k < 1) throw std::invalid_argument("MinorTarget: K_k needs k >= 1");
    return {Kind::CompleteGraph, k, 0};
}

MinorTarget MinorTarget::clique_join_independent(int ell, int m) {
    if (ell < 1 || m < 0) throw std::invalid_argument("MinorTarget: K^l_{l,m} needs l >= 1 and m >= 0");
    return {Kind::CliqueJoinIndependent, ell, m};
}

std::string MinorTarget::describe() const {
    if (kind == Kind::CompleteGraph) return "K_" + std::to_string(clique_count);
    return "K^" + std::to_string(clique_count) + "_{" + std::to_string(clique_count) + "," +
           std::to_string(independent_count) + "}";
}

void MinorModel::canonicalize() {
    for (auto* side : {&clique_side, &independent_side}) {
        for (auto& set : *side) std::sort(set.begin(), set.end());
        std::sort(side->begin(), side->end());
    }
}

std::vector<std::string> validate_model(const Graph& g, const MinorTarget& target, const MinorModel& model) {
    std::vector<std::string> problems;
    const int want_independent = target.kind == MinorTarget::Kind::CompleteGraph ? 0 : target.independent_count;
    if (static_cast<int>(model.clique_side.size()) != target.clique_count)
        problems.push_back("expected " + std::to_string(target.clique_count) + " clique-side sets, found " +
                           std::to_string(model.clique_side.size()));
    if (static_cast<int>(model.independent_side.size()) != want_independent)
        problems.push_back("expected " + std::to_string(want_independent) + " independent-side sets, found " +
                           std::to_string(model.independent_side.size()));

    struct Named {
        std::string name;
        VertexSet members;
        bool clique_side;
    };
    std::vector<Named> sets;
    auto collect = [&](const std::vector<std::vector<int>>& side, const char* label, bool clique) {
        for (std::size_t i = 0; i < side.size(); ++i) {
            Named s{std::string(label) + "[" + std::to_string(i) + "]", {}, clique};
            bool in_range = true;
            for (int v : side[i]) {
                if (v < 0 || v >= g.order()) {
                    problems.push_back(s.name + " has out-of-range vertex " + std::to_string(v));
                    in_range = false;
                } else if (s.members.contains(v)) {
                    problems.push_back(s.name + " repeats vertex " + std::to_string(v));
                } else {
                    s.members.insert(v);
                }
            }
            if (side[i].empty())
                problems.push_back(s.name + " is empty");
            else if (in_range && !is_connected_subset(g, s.members))
                problems.push_back("branch set " + s.name + " not connected");
            sets.push_back(std::move(s));
        }
    };
    collect(model.clique_side, "clique_side", true);
    collect(model.independent_side, "independent_side", false);

    for (std::size_t i = 0; i < sets.size(); ++i) {
        const VertexSet reach = closed_neighborhood(g, sets[i].members);
        for (std::size_t j = i + 1; j < sets.size(); ++j) {
            if (sets[i].members.intersects(sets[j].members))
                problems.push_back("sets not disjoint: " + sets[i].name + " and " + sets[j].name + " share vertex " +
                                   std::to_string((sets[i].members & sets[j].members).first()));
            const bool required = sets[i].clique_side || sets[j].clique_side;
            if (required && !reach.intersects(sets[j].members))
                problems.push_back("no edge between " + sets[i].name + " and " + sets[j].name);
        }
    }
    return problems;
}

namespace {

std::uint64_t bit(int v) { return std::uint64_t{1} << v; }
std::uint64_t above(int v) { return v >= 63 ? 0 : ~((bit(v) << 1) - 1); }

class MinorSearch {
public:
    MinorSearch(const Graph& g, const MinorTarget& target, Deadline deadline)
        : rows_(g.rows()), n_(g.order()), cliques_(target.clique_count), total_(target.total()), deadline_(deadline),
          sets_(static_cast<std::size_t>(total_), 0) {}

    std::optional<MinorModel> run() {
        if (total_ > n_) return std::nullopt;
        const std::uint64_t all = n_ == 64 ? ~std::uint64_t{0} : bit(n_) - 1;
        for (limit_ = 1; limit_ <= n_ - total_ + 1; ++limit_)
            if (place(0, all)) return model();
        return std::nullopt;
    }

private:
    MinorModel model() const {
        MinorModel m;
        for (int i = 0; i < total_; ++i) {
            auto members = VertexSet::from_mask(sets_[static_cast<std::size_t>(i)]).members();
            (i < cliques_ ? m.clique_side : m.independent_side).push_back(std::move(members));
        }
        m.canonicalize();
        return m;
    }

    bool touches_required(int i, std::uint64_t reach) const {
        const int upto = i < cliques_ ? i : cliques_;
        for (int j = 0; j < upto; ++j)
            if ((reach & sets_[static_cast<std::size_t>(j)]) == 0) return false;
        return true;
    }

    bool place(int i, std::uint64_t free) {
        if (i == total_) return true;
        if (std::popcount(free) < total_ - i) return false;
        const bool first_of_side = i == 0 || i == cliques_;
        const int prev_root = first_of_side ? -1 : std::countr_zero(sets_[static_cast<std::size_t>(i - 1)]);
        for (std::uint64_t roots = free & (prev_root < 0 ? ~std::uint64_t{0} : above(prev_root)); roots != 0;
             roots &= roots - 1) {
            const int r = std::countr_zero(roots);
            const std::uint64_t allowed = free & above(r);
            if (grow(i, free, bit(r), rows_[static_cast<std::size_t>(r)] & allowed, rows_[static_cast<std::size_t>(r)] | bit(r),
                     allowed))
                return true;
        }
        return false;
    }

    // ESU-style enumeration: every connected set with the given root as its
    // smallest vertex is produced once. `reach` is N[sub].
    bool grow(int i, std::uint64_t free, std::uint64_t sub, std::uint64_t ext, std::uint64_t reach,
              std::uint64_t allowed) {
        if (deadline_ && (++nodes_ & 4095U) == 0 && std::chrono::steady_clock::now() > *deadline_)
            throw OracleInfeasible("find_minor_bruteforce: deadline exceeded");
        if (touches_required(i, reach)) {
            sets_[static_cast<std::size_t>(i)] = sub;
            if (place(i + 1, free & ~sub)) return true;
        }
        if (std::popcount(sub) >= limit_) return false;
        while (ext != 0) {
            const int w = std::countr_zero(ext);
            ext &= ext - 1;
            const std::uint64_t row = rows_[static_cast<std::size_t>(w)];
            if (grow(i, free, sub | bit(w), ext | (row & allowed & ~reach), reach | row, allowed)) return true;
        }
        return false;
    }

    std::vector<std::uint64_t> rows_;
    int n_, cliques_, total_;
    Deadline deadline_;
    std::vector<std::uint64_t> sets_;
    int limit_ = 1;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::optional<MinorModel> find_minor_bruteforce(const Graph& g, const MinorTarget& target, const OracleOptions& options) {
    require_word_order(g, "find_minor_bruteforce");
    if (target.total() >= 5 && g.order() > options.cap)
        throw OracleInfeasible("find_minor_bruteforce: order " + std::to_string(g.order()) + " exceeds oracle cap " +
                               std::to_string(options.cap) + " for " + target.describe());
    return MinorSearch(g, target, options.deadline).run();
}

MinorModel model_through_contraction(const std::vector<Provenance>& chain, const MinorModel& model) {
    for (std::size_t s = 0; s + 1 < chain.size(); ++s)
        if (static_cast<int>(chain[s].origin.size()) != chain[s + 1].source_order)
            throw ProvenanceError("provenance inconsistency: step " + std::to_string(s + 1) + " expects a source of order " +
                                  std::to_string(chain[s + 1].source_order) + " but step " + std::to_string(s) +
                                  " produced order " + std::to_string(chain[s].origin.size()));

    auto pull = [&](const std::vector<int>& set) {
        std::vector<int> cur = set;
        for (auto step = chain.rbegin(); step != chain.rend(); ++step) {
            std::vector<int> next;
            for (int v : cur) {
                if (v < 0 || v >= static_cast<int>(step->origin.size()))
                    throw ProvenanceError("provenance inconsistency: vertex " + std::to_string(v) + " has no origin");
                for (int o : step->origin[static_cast<std::size_t>(v)]) {
                    if (o < 0 || o >= step->source_order)
                        throw ProvenanceError("provenance inconsistency: origin " + std::to_string(o) + " out of range");
                    next.push_back(o);
                }
            }
            cur = std::move(next);
        }
        std::sort(cur.begin(), cur.end());
        return cur;
    };

    MinorModel out;
    for (const auto& set : model.clique_side) out.clique_side.push_back(pull(set));
    for (const auto& set : model.independent_side) out.independent_side.push_back(pull(set));
    return out;
}

MinorModel relabel_model(const MinorModel& model, const std::vector<int>& old_index) {
    auto map = [&](const std::vector<std::vector<int>>& side) {
        std::vector<std::vector<int>> out;
        for (const auto& set : side) {
            std::vector<int> mapped;
            for (int v : set) mapped.push_back(old_index.at(static_cast<std::size_t>(v)));
            std::sort(mapped.begin(), mapped.end());
            out.push_back(std::move(mapped));
        }
        return out;
    };
    return {map(model.clique_side), map(model.independent_side)};
}

}  // namespace a2m
