#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <utility>
#include <vector>

namespace a2m {

/// A set of vertex indices stored as a growable bitset.
///
/// Trailing zero words are trimmed after every mutation so that equality
/// compares members, not capacity.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(std::initializer_list<int> members);

    static VertexSet from_mask(std::uint64_t mask);
    static VertexSet range(int n);  // {0, ..., n-1}
    static VertexSet of(const std::vector<int>& members);

    bool contains(int v) const noexcept;
    void insert(int v);
    void erase(int v) noexcept;

    int size() const noexcept;
    bool empty() const noexcept { return words_.empty(); }
    /// Smallest member, or -1 when empty.
    int first() const noexcept;
    /// Largest member, or -1 when empty.
    int last() const noexcept;

    std::vector<int> members() const;

    /// Low 64 members as a mask. Throws if any member is >= 64.
    std::uint64_t mask() const;

    template <typename F>
    void for_each(F&& f) const {
        for (std::size_t w = 0; w < words_.size(); ++w) {
            std::uint64_t bits = words_[w];
            while (bits != 0) {
                f(static_cast<int>(w * 64 + std::countr_zero(bits)));
                bits &= bits - 1;
            }
        }
    }

    VertexSet& operator|=(const VertexSet& o);
    VertexSet& operator&=(const VertexSet& o);
    VertexSet& operator-=(const VertexSet& o);
    friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
    friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
    friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
    friend bool operator==(const VertexSet&, const VertexSet&) = default;

    bool intersects(const VertexSet& o) const noexcept;
    bool is_subset_of(const VertexSet& o) const noexcept;

private:
    void trim() noexcept;
    std::vector<std::uint64_t> words_;
};

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1.
///
/// The interface keeps adjacency symmetric and loop-free; there is no way to
/// build a graph that violates either property.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int order() const noexcept { return static_cast<int>(adj_.size()); }

    void add_edge(int u, int v);
    void remove_edge(int u, int v);
    bool adjacent(int u, int v) const;

    const VertexSet& neighbors(int v) const { return adj_.at(static_cast<std::size_t>(v)); }
    int degree(int v) const { return neighbors(v).size(); }
    int edge_count() const noexcept;
    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;
    bool is_complete() const noexcept;

    /// Neighbourhood of v as a 64-bit mask. Requires order() <= 64.
    std::uint64_t row(int v) const { return adj_.at(static_cast<std::size_t>(v)).mask(); }
    /// All rows as masks; the search kernels work on this form.
    std::vector<std::uint64_t> rows() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(int v) const;
    std::vector<VertexSet> adj_;
};

/// Thrown by the word-sized search kernels on graphs with more than 64 vertices.
class OrderTooLarge : public std::length_error {
public:
    using std::length_error::length_error;
};

inline constexpr int kMaxSearchOrder = 64;
void require_word_order(const Graph& g, const char* who);

}  // namespace a2m
