#ifndef GSPEC_GRAPH6_HPP
#define GSPEC_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gspec/graph.hpp"

namespace gspec {

/// Thrown for malformed graph6 input.
class Graph6Error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline constexpr int kGraph6Bias = 63;

inline std::size_t graph6_data_bytes(int n) {
    const std::size_t bits = static_cast<std::size_t>(n) * (n - (n > 0 ? 1 : 0)) / 2;
    return (bits + 5) / 6;
}

}  // namespace detail

/// Decodes one graph6 line (short form only, n <= 62). Trailing pad bits must be zero
/// and the byte count must match n exactly.
inline Graph parse_graph6(std::string_view line) {
    using detail::kGraph6Bias;
    while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
    if (line.starts_with(">>graph6<<")) line.remove_prefix(10);
    if (line.empty()) throw Graph6Error("graph6: empty line");
    for (char c : line) {
        const int b = static_cast<unsigned char>(c);
        if (b < kGraph6Bias || b > 126) throw Graph6Error("graph6: byte " + std::to_string(b) + " outside 63..126");
    }
    const int n = static_cast<unsigned char>(line[0]) - kGraph6Bias;
    if (n > kMaxOrder) throw Graph6Error("graph6: order above " + std::to_string(kMaxOrder) + " not supported");

    const std::size_t need = detail::graph6_data_bytes(n);
    if (line.size() - 1 < need) throw Graph6Error("graph6: truncated bit stream");
    if (line.size() - 1 > need) throw Graph6Error("graph6: trailing bytes after bit stream");

    std::vector<Edge> edges;
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++k) {
            const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kGraph6Bias;
            if ((byte >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    for (; k < need * 6; ++k) {
        const int byte = static_cast<unsigned char>(line[1 + k / 6]) - kGraph6Bias;
        if ((byte >> (5 - k % 6)) & 1) throw Graph6Error("graph6: nonzero padding bits");
    }
    return Graph::from_edges(n, edges);
}

/// Encodes a graph as a graph6 line (without newline).
inline std::string write_graph6(const Graph& g) {
    using detail::kGraph6Bias;
    const int n = g.order();
    if (n > kMaxOrder) throw Graph6Error("graph6: order above " + std::to_string(kMaxOrder) + " not supported");
    std::string out(1 + detail::graph6_data_bytes(n), static_cast<char>(kGraph6Bias));
    out[0] = static_cast<char>(n + kGraph6Bias);
    std::size_t k = 0;
    for (int j = 1; j < n; ++j) {
        const VertexSet row = g.neighbors(j);
        for (int i = 0; i < j; ++i, ++k)
            if (row.contains(i)) out[1 + k / 6] = static_cast<char>(out[1 + k / 6] + (1 << (5 - k % 6)));
    }
    return out;
}

}  // namespace gspec

#endif  // GSPEC_GRAPH6_HPP
