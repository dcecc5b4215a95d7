#include "a2m/generators.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <random>
#include <set>
#include <variant>

#include "a2m/canonical.hpp"
#include "a2m/graph_ops.hpp"
#include "a2m/invariants.hpp"

namespace a2m {

namespace {

class Augmenter {
public:
    Augmenter(int n, bool dedup, const std::function<void(const Graph&)>& emit) : n_(n), dedup_(dedup), emit_(emit) {}

    void run() {
        if (n_ == 0) {
            emit_(Graph(0));
            return;
        }
        extend(Graph(1));
    }

private:
    bool new_vertex_is_canonical(const Graph& g) const {
        const int v = g.order() - 1;
        const int w = canonical_labeling(g).order.back();
        if (w == v) return true;
        std::vector<int> mark_v(static_cast<std::size_t>(g.order()), 0), mark_w = mark_v;
        mark_v[static_cast<std::size_t>(v)] = 1;
        mark_w[static_cast<std::size_t>(w)] = 1;
        return canonical_labeling(g, mark_v).key == canonical_labeling(g, mark_w).key;
    }

    void extend(const Graph& h) {
        const int k = h.order();
        if (k == n_) {
            emit_(complement(h));
            return;
        }
        const auto rows = h.rows();
        std::set<std::string> seen;
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << k); ++s) {
            bool independent = true;
            for (std::uint64_t r = s; r != 0 && independent; r &= r - 1)
                independent = (rows[static_cast<std::size_t>(std::countr_zero(r))] & s) == 0;
            if (!independent) continue;

            Graph g(k + 1);
            for (auto [a, b] : h.edges()) g.add_edge(a, b);
            for (std::uint64_t r = s; r != 0; r &= r - 1) g.add_edge(std::countr_zero(r), k);

            if (dedup_) {
                if (!new_vertex_is_canonical(g)) continue;
                if (!seen.insert(canonical_key(g)).second) continue;
            }
            extend(g);
        }
    }

    int n_;
    bool dedup_;
    const std::function<void(const Graph&)>& emit_;
};

}  // namespace

void for_each_alpha2(int n, const std::function<void(const Graph&)>& emit, bool dedup, int cap) {
    if (n < 0) throw GeneratorError("for_each_alpha2: negative order");
    if (n > cap)
        throw GeneratorError("for_each_alpha2: order " + std::to_string(n) + " exceeds exhaustive cap " +
                             std::to_string(cap));
    if (n > kMaxSearchOrder) throw GeneratorError("for_each_alpha2: order exceeds 64");
    Augmenter(n, dedup, emit).run();
}

std::vector<Graph> enumerate_alpha2(int n, bool dedup, int cap) {
    std::vector<Graph> out;
    for_each_alpha2(n, [&](const Graph& g) { out.push_back(g); }, dedup, cap);
    return out;
}

Graph random_alpha2(int n, std::uint64_t seed) {
    if (n < 1) throw GeneratorError("random_alpha2: need n >= 1");
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    // Hand-rolled shuffle: std::shuffle's draw sequence is library-specific.
    std::mt19937_64 rng(seed);
    for (std::size_t i = pairs.size(); i > 1; --i) std::swap(pairs[i - 1], pairs[rng() % i]);

    Graph h(n);
    for (auto [u, v] : pairs)
        if (!h.neighbors(u).intersects(h.neighbors(v))) h.add_edge(u, v);
    return complement(h);
}

namespace named {

Graph cycle(int n) {
    if (n < 3) throw GeneratorError("cycle: need n >= 3");
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph complete(int n) {
    if (n < 0) throw GeneratorError("complete: need n >= 0");
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph path(int n) {
    if (n < 1) throw GeneratorError("path: need n >= 1");
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph five_wheel() { return five_wheel_graph(); }

Graph clique_join_independent(int ell, int m) {
    if (ell < 0 || m < 0) throw GeneratorError("clique_join_independent: negative size");
    return join(complete(ell), Graph(m));
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);
        g.add_edge(i + 5, (i + 2) % 5 + 5);
        g.add_edge(i, i + 5);
    }
    return g;
}

Graph petersen_complement() { return complement(petersen()); }

}  // namespace named

namespace {

// name := ident [ '(' arg (',' arg)* ')' ],  arg := integer | name
class ExpressionParser {
public:
    explicit ExpressionParser(std::string_view text) : text_(text) {}

    Graph parse() {
        Graph g = graph();
        skip_space();
        if (pos_ != text_.size()) fail("unexpected trailing text");
        return g;
    }

private:
    using Arg = std::variant<long, Graph>;

    [[noreturn]] void fail(const std::string& what) const {
        throw GeneratorError("named_graph: " + what + " at offset " + std::to_string(pos_) + " in '" +
                             std::string(text_) + "'");
    }

    void skip_space() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_space();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    Arg arg() {
        skip_space();
        if (pos_ < text_.size() && (std::isdigit(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '-')) {
            std::size_t start = pos_++;
            while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
            try {
                return std::stol(std::string(text_.substr(start, pos_ - start)));
            } catch (const std::exception&) {
                fail("bad integer");
            }
        }
        return graph();
    }

    Graph graph() {
        skip_space();
        std::size_t start = pos_;
        while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        const std::string name(text_.substr(start, pos_ - start));
        if (name.empty()) fail("expected a graph name");
        std::vector<Arg> args;
        if (eat('(')) {
            if (!eat(')')) {
                do args.push_back(arg());
                while (eat(','));
                if (!eat(')')) fail("expected ')'");
            }
        }
        return build(name, args);
    }

    Graph build(const std::string& name, const std::vector<Arg>& args) {
        auto want = [&](std::size_t count) {
            if (args.size() != count)
                fail(name + " takes " + std::to_string(count) + " argument(s), got " + std::to_string(args.size()));
        };
        auto number = [&](std::size_t i) {
            if (!std::holds_alternative<long>(args[i])) fail(name + ": argument " + std::to_string(i + 1) + " must be an integer");
            long v = std::get<long>(args[i]);
            if (v < 0 || v > 4096) fail(name + ": argument out of range");
            return static_cast<int>(v);
        };
        auto sub = [&](std::size_t i) {
            if (!std::holds_alternative<Graph>(args[i])) fail(name + ": argument " + std::to_string(i + 1) + " must be a graph");
            return std::get<Graph>(args[i]);
        };

        if (name == "cycle") return want(1), named::cycle(number(0));
        if (name == "complete") return want(1), named::complete(number(0));
        if (name == "path") return want(1), named::path(number(0));
        if (name == "empty") return want(1), Graph(number(0));
        if (name == "five_wheel") return want(0), named::five_wheel();
        if (name == "clique_join_independent") return want(2), named::clique_join_independent(number(0), number(1));
        if (name == "petersen") return want(0), named::petersen();
        if (name == "petersen_complement") return want(0), named::petersen_complement();
        if (name == "join") return want(2), join(sub(0), sub(1));
        if (name == "complement") return want(1), complement(sub(0));
        fail("unknown graph name '" + name + "'");
    }

    std::string_view text_;
    std::size_t pos_ = 0;
};

}  // namespace

Graph named_graph(std::string_view expression) { return ExpressionParser(expression).parse(); }

}  // namespace a2m
