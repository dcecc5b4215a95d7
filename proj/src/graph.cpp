#include "a2m/graph.hpp"

#include <algorithm>
#include <string>

namespace a2m {

VertexSet::VertexSet(std::initializer_list<int> members) {
    for (int v : members) insert(v);
}

VertexSet VertexSet::from_mask(std::uint64_t mask) {
    VertexSet s;
    if (mask != 0) s.words_.push_back(mask);
    return s;
}

VertexSet VertexSet::range(int n) {
    VertexSet s;
    if (n <= 0) return s;
    s.words_.assign(static_cast<std::size_t>((n + 63) / 64), ~std::uint64_t{0});
    if (int rem = n % 64; rem != 0) s.words_.back() = (std::uint64_t{1} << rem) - 1;
    return s;
}

VertexSet VertexSet::of(const std::vector<int>& members) {
    VertexSet s;
    for (int v : members) s.insert(v);
    return s;
}

bool VertexSet::contains(int v) const noexcept {
    if (v < 0) return false;
    auto w = static_cast<std::size_t>(v) / 64;
    return w < words_.size() && ((words_[w] >> (v % 64)) & 1U) != 0;
}

void VertexSet::insert(int v) {
    if (v < 0) throw std::out_of_range("negative vertex index " + std::to_string(v));
    auto w = static_cast<std::size_t>(v) / 64;
    if (w >= words_.size()) words_.resize(w + 1, 0);
    words_[w] |= std::uint64_t{1} << (v % 64);
}

void VertexSet::erase(int v) noexcept {
    if (v < 0) return;
    auto w = static_cast<std::size_t>(v) / 64;
    if (w >= words_.size()) return;
    words_[w] &= ~(std::uint64_t{1} << (v % 64));
    trim();
}

int VertexSet::size() const noexcept {
    int total = 0;
    for (auto w : words_) total += std::popcount(w);
    return total;
}

int VertexSet::first() const noexcept {
    for (std::size_t w = 0; w < words_.size(); ++w)
        if (words_[w] != 0) return static_cast<int>(w * 64 + std::countr_zero(words_[w]));
    return -1;
}

int VertexSet::last() const noexcept {
    if (words_.empty()) return -1;
    return static_cast<int>((words_.size() - 1) * 64 + 63 - std::countl_zero(words_.back()));
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(size()));
    for_each([&](int v) { out.push_back(v); });
    return out;
}

std::uint64_t VertexSet::mask() const {
    if (words_.size() > 1) throw OrderTooLarge("vertex set has members beyond index 63");
    return words_.empty() ? 0 : words_[0];
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
    if (o.words_.size() > words_.size()) words_.resize(o.words_.size(), 0);
    for (std::size_t i = 0; i < o.words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
    if (words_.size() > o.words_.size()) words_.resize(o.words_.size());
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    trim();
    return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
    auto common = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < common; ++i) words_[i] &= ~o.words_[i];
    trim();
    return *this;
}

bool VertexSet::intersects(const VertexSet& o) const noexcept {
    auto common = std::min(words_.size(), o.words_.size());
    for (std::size_t i = 0; i < common; ++i)
        if ((words_[i] & o.words_[i]) != 0) return true;
    return false;
}

bool VertexSet::is_subset_of(const VertexSet& o) const noexcept {
    for (std::size_t i = 0; i < words_.size(); ++i) {
        std::uint64_t other = i < o.words_.size() ? o.words_[i] : 0;
        if ((words_[i] & ~other) != 0) return false;
    }
    return true;
}

void VertexSet::trim() noexcept {
    while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Graph::Graph(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    adj_.resize(static_cast<std::size_t>(n));
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g(n);
    for (auto [u, v] : edges) g.add_edge(u, v);
    return g;
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= order())
        throw std::out_of_range("vertex " + std::to_string(v) + " out of range for order " +
                                std::to_string(order()));
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    adj_[static_cast<std::size_t>(u)].insert(v);
    adj_[static_cast<std::size_t>(v)].insert(u);
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    adj_[static_cast<std::size_t>(u)].erase(v);
    adj_[static_cast<std::size_t>(v)].erase(u);
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[static_cast<std::size_t>(u)].contains(v);
}

int Graph::edge_count() const noexcept {
    int twice = 0;
    for (const auto& s : adj_) twice += s.size();
    return twice / 2;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    for (int u = 0; u < order(); ++u)
        neighbors(u).for_each([&](int v) {
            if (u < v) out.emplace_back(u, v);
        });
    return out;
}

bool Graph::is_complete() const noexcept {
    const int n = order();
    for (const auto& s : adj_)
        if (s.size() != n - 1) return false;
    return true;
}

std::vector<std::uint64_t> Graph::rows() const {
    require_word_order(*this, "Graph::rows");
    std::vector<std::uint64_t> out(adj_.size());
    for (std::size_t v = 0; v < adj_.size(); ++v) out[v] = adj_[v].mask();
    return out;
}

void require_word_order(const Graph& g, const char* who) {
    if (g.order() > kMaxSearchOrder)
        throw OrderTooLarge(std::string(who) + ": graph order " + std::to_string(g.order()) +
                            " exceeds " + std::to_string(kMaxSearchOrder));
}

}  // namespace a2m
