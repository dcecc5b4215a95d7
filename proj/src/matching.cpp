#include "a2m/matching.hpp"

#include <algorithm>
#include <queue>

namespace a2m {

namespace {

class Blossom {
public:
    explicit Blossom(const Graph& g)
        : g_(g), n_(g.order()), mate_(static_cast<std::size_t>(n_), -1), parent_(static_cast<std::size_t>(n_)),
          base_(static_cast<std::size_t>(n_)), in_queue_(static_cast<std::size_t>(n_)),
          in_blossom_(static_cast<std::size_t>(n_)) {}

    std::vector<int> run() {
        // Greedy start; augmenting paths finish the job.
        for (auto [u, v] : g_.edges())
            if (mate_[idx(u)] == -1 && mate_[idx(v)] == -1) {
                mate_[idx(u)] = v;
                mate_[idx(v)] = u;
            }
        for (int root = 0; root < n_; ++root) {
            if (mate_[idx(root)] != -1) continue;
            int end = find_path(root);
            while (end != -1) {
                int pv = parent_[idx(end)];
                int ppv = mate_[idx(pv)];
                mate_[idx(end)] = pv;
                mate_[idx(pv)] = end;
                end = ppv;
            }
        }
        return mate_;
    }

private:
    static std::size_t idx(int v) { return static_cast<std::size_t>(v); }

    int lca(int a, int b) {
        std::vector<char> seen(idx(n_), 0);
        while (true) {
            a = base_[idx(a)];
            seen[idx(a)] = 1;
            if (mate_[idx(a)] == -1) break;
            a = parent_[idx(mate_[idx(a)])];
        }
        while (true) {
            b = base_[idx(b)];
            if (seen[idx(b)]) return b;
            b = parent_[idx(mate_[idx(b)])];
        }
    }

    void mark_path(int v, int b, int child) {
        while (base_[idx(v)] != b) {
            in_blossom_[idx(base_[idx(v)])] = 1;
            in_blossom_[idx(base_[idx(mate_[idx(v)])])] = 1;
            parent_[idx(v)] = child;
            child = mate_[idx(v)];
            v = parent_[idx(mate_[idx(v)])];
        }
    }

    int find_path(int root) {
        std::fill(parent_.begin(), parent_.end(), -1);
        std::fill(in_queue_.begin(), in_queue_.end(), 0);
        for (int i = 0; i < n_; ++i) base_[idx(i)] = i;
        std::queue<int> q;
        q.push(root);
        in_queue_[idx(root)] = 1;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int to : g_.neighbors(v).members()) {
                if (base_[idx(v)] == base_[idx(to)] || mate_[idx(v)] == to) continue;
                if (to == root || (mate_[idx(to)] != -1 && parent_[idx(mate_[idx(to)])] != -1)) {
                    int cur = lca(v, to);
                    std::fill(in_blossom_.begin(), in_blossom_.end(), 0);
                    mark_path(v, cur, to);
                    mark_path(to, cur, v);
                    for (int i = 0; i < n_; ++i) {
                        if (!in_blossom_[idx(base_[idx(i)])]) continue;
                        base_[idx(i)] = cur;
                        if (!in_queue_[idx(i)]) {
                            in_queue_[idx(i)] = 1;
                            q.push(i);
                        }
                    }
                } else if (parent_[idx(to)] == -1) {
                    parent_[idx(to)] = v;
                    if (mate_[idx(to)] == -1) return to;
                    in_queue_[idx(mate_[idx(to)])] = 1;
                    q.push(mate_[idx(to)]);
                }
            }
        }
        return -1;
    }

    const Graph& g_;
    int n_;
    std::vector<int> mate_, parent_, base_;
    std::vector<char> in_queue_, in_blossom_;
};

}  // namespace

std::vector<int> maximum_matching(const Graph& g) { return Blossom(g).run(); }

int matching_size(const std::vector<int>& mate) {
    return static_cast<int>(std::count_if(mate.begin(), mate.end(), [](int m) { return m != -1; })) / 2;
}

}  // namespace a2m
