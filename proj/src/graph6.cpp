#include "a2m/graph6.hpp"

namespace a2m {

namespace {

constexpr int kBias = 63;
constexpr char kLongOrder = 126;
constexpr std::string_view kHeader = ">>graph6<<";
constexpr long long kMaxOrder = 68719476735LL;  // 2^36 - 1

int sextet(std::string_view text, std::size_t pos) {
    if (pos >= text.size()) throw Graph6Error("graph6: truncated input");
    auto c = static_cast<unsigned char>(text[pos]);
    if (c < kBias || c > 126)
        throw Graph6Error("graph6: byte " + std::to_string(pos) + " outside printable range 63..126");
    return c - kBias;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);
    if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
    if (text.empty()) throw Graph6Error("graph6: empty line");

    std::size_t pos = 0;
    long long n = 0;
    if (text[0] != kLongOrder) {
        n = sextet(text, 0);
        pos = 1;
    } else if (text.size() > 1 && text[1] != kLongOrder) {
        for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | sextet(text, i);
        pos = 4;
    } else {
        for (std::size_t i = 2; i <= 7; ++i) n = (n << 6) | sextet(text, i);
        pos = 8;
    }
    if (n > 1'000'000) throw Graph6Error("graph6: order " + std::to_string(n) + " too large to build");

    const auto order = static_cast<int>(n);
    Graph g(order);
    const long long bits = n * (n - 1) / 2;
    const long long bytes = (bits + 5) / 6;
    if (static_cast<long long>(text.size() - pos) < bytes) throw Graph6Error("graph6: truncated bit field");
    if (static_cast<long long>(text.size() - pos) > bytes) throw Graph6Error("graph6: trailing bytes after bit field");

    long long k = 0;
    for (int j = 1; j < order; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            int chunk = sextet(text, pos + static_cast<std::size_t>(k / 6));
            if ((chunk >> (5 - k % 6)) & 1) g.add_edge(i, j);
        }
    }
    if (k % 6 != 0) {
        int chunk = sextet(text, pos + static_cast<std::size_t>(k / 6));
        if ((chunk & ((1 << (6 - k % 6)) - 1)) != 0) throw Graph6Error("graph6: nonzero padding bits");
    }
    for (long long b = 0; b < bytes; ++b) sextet(text, pos + static_cast<std::size_t>(b));
    return g;
}

std::string emit_graph6(const Graph& g) {
    const long long n = g.order();
    if (n > kMaxOrder) throw Graph6Error("graph6: order exceeds format limit");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + kBias));
    } else if (n <= 258047) {
        out.push_back(kLongOrder);
        for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    } else {
        out.append(2, kLongOrder);
        for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
    }

    int chunk = 0;
    int filled = 0;
    for (int j = 1; j < g.order(); ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + kBias));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) out.push_back(static_cast<char>((chunk << (6 - filled)) + kBias));
    return out;
}

}  // namespace a2m
