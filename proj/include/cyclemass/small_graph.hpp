#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace cyclemass {

inline constexpr int max_vertices = 32;

/// Unordered vertex pair, stored with first < second.
using Edge = std::pair<int, int>;

inline Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

/// Simple undirected graph on at most 32 vertices. One adjacency bitset per
/// vertex plus the sorted edge list; immutable after construction.
struct SmallGraph {
    int n = 0;
    std::array<std::uint32_t, max_vertices> adj{};
    std::vector<Edge> edges;

    SmallGraph() = default;

    /// Validates range, rejects loops and duplicate edges; edge orientation
    /// in the input is irrelevant.
    SmallGraph(int n, const std::vector<Edge>& edge_list);

    bool has_edge(int u, int v) const { return (adj[u] >> v) & 1u; }
    int degree(int v) const { return std::popcount(adj[v]); }
    int edge_count() const { return static_cast<int>(edges.size()); }

    bool operator==(const SmallGraph& other) const {
        return n == other.n && adj == other.adj;
    }
};

SmallGraph cycle_graph(int m);
SmallGraph complete_graph(int n);
SmallGraph complete_bipartite(int a, int b);

/// Vertex (g, h) -> index g*|H|+h; adjacent iff equal in one coordinate and
/// adjacent in the other.
SmallGraph cartesian_product(const SmallGraph& g, const SmallGraph& h);

/// Relabels: vertex v of g becomes perm[v].
SmallGraph permuted(const SmallGraph& g, const std::vector<int>& perm);

bool is_connected(const SmallGraph& g);

/// Standard graph6 encoding (column-major upper triangle, 6-bit chunks,
/// offset 63). Strict: rejects trailing bytes, out-of-range characters and
/// nonzero padding bits, with the byte offset of the fault.
SmallGraph parse_graph6(std::string_view text);
std::string to_graph6(const SmallGraph& g);

} // namespace cyclemass
