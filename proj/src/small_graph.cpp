#include "cyclemass/small_graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "cyclemass/errors.hpp"

namespace cyclemass {

SmallGraph::SmallGraph(int n_, const std::vector<Edge>& edge_list) : n(n_) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("SmallGraph: vertex count must be in [0, 32]");
    edges.reserve(edge_list.size());
    for (Edge e : edge_list) {
        e = make_edge(e.first, e.second);
        if (e.first < 0 || e.second >= n)
            throw std::invalid_argument("SmallGraph: edge endpoint out of range");
        if (e.first == e.second)
            throw std::invalid_argument("SmallGraph: loop edge");
        edges.push_back(e);
    }
    std::sort(edges.begin(), edges.end());
    for (std::size_t i = 1; i < edges.size(); ++i)
        if (edges[i] == edges[i - 1])
            throw std::invalid_argument("SmallGraph: duplicate edge");
    for (const Edge& e : edges) {
        adj[e.first] |= 1u << e.second;
        adj[e.second] |= 1u << e.first;
    }
}

SmallGraph cycle_graph(int m) {
    if (m < 3) throw std::invalid_argument("cycle_graph: need m >= 3");
    if (m > max_vertices) throw std::invalid_argument("cycle_graph: exceeds vertex cap");
    std::vector<Edge> edges;
    for (int i = 0; i < m; ++i) edges.push_back(make_edge(i, (i + 1) % m));
    return SmallGraph(m, edges);
}

SmallGraph complete_graph(int n) {
    if (n < 0 || n > max_vertices)
        throw std::invalid_argument("complete_graph: size out of range");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return SmallGraph(n, edges);
}

SmallGraph complete_bipartite(int a, int b) {
    if (a < 0 || b < 0 || a + b > max_vertices)
        throw std::invalid_argument("complete_bipartite: size out of range");
    std::vector<Edge> edges;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) edges.push_back({u, a + v});
    return SmallGraph(a + b, edges);
}

SmallGraph cartesian_product(const SmallGraph& g, const SmallGraph& h) {
    if (g.n * h.n > max_vertices)
        throw std::invalid_argument("cartesian_product: exceeds vertex cap");
    auto idx = [&](int a, int b) { return a * h.n + b; };
    std::vector<Edge> edges;
    for (int a = 0; a < g.n; ++a)
        for (const Edge& e : h.edges) edges.push_back({idx(a, e.first), idx(a, e.second)});
    for (const Edge& e : g.edges)
        for (int b = 0; b < h.n; ++b) edges.push_back({idx(e.first, b), idx(e.second, b)});
    return SmallGraph(g.n * h.n, edges);
}

SmallGraph permuted(const SmallGraph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.n)
        throw std::invalid_argument("permuted: permutation size mismatch");
    std::vector<Edge> edges;
    edges.reserve(g.edges.size());
    for (const Edge& e : g.edges)
        edges.push_back(make_edge(perm[e.first], perm[e.second]));
    return SmallGraph(g.n, edges);
}

bool is_connected(const SmallGraph& g) {
    if (g.n <= 1) return true;
    std::uint32_t seen = 1u, frontier = 1u;
    while (frontier) {
        std::uint32_t next = 0;
        for (std::uint32_t f = frontier; f;) {
            int v = std::countr_zero(f);
            f &= f - 1;
            next |= g.adj[v];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (g.n == 32 ? ~0u : (1u << g.n) - 1u);
}

std::string to_graph6(const SmallGraph& g) {
    std::string out;
    out.push_back(static_cast<char>(g.n + 63));
    int bits = g.n * (g.n - 1) / 2;
    int chunk = 0, filled = 0;
    for (int j = 1; j < g.n; ++j) {
        for (int i = 0; i < j; ++i) {
            chunk = (chunk << 1) | (g.has_edge(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(chunk + 63));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (bits % 6 != 0) {
        chunk <<= 6 - bits % 6;
        out.push_back(static_cast<char>(chunk + 63));
    }
    return out;
}

SmallGraph parse_graph6(std::string_view text) {
    if (text.empty()) throw parse_error("empty graph6 string", 0);
    unsigned char first = static_cast<unsigned char>(text[0]);
    if (first == 126)
        throw parse_error("extended graph6 sizes exceed the 32-vertex cap", 0);
    if (first < 63 || first > 126)
        throw parse_error("invalid graph6 size character", 0);
    int n = first - 63;
    if (n > max_vertices)
        throw parse_error("graph6 vertex count exceeds the 32-vertex cap", 0);
    int bits = n * (n - 1) / 2;
    std::size_t body = static_cast<std::size_t>((bits + 5) / 6);
    if (text.size() < 1 + body)
        throw parse_error("graph6 string truncated", text.size());
    if (text.size() > 1 + body)
        throw parse_error("trailing characters after graph6 body", 1 + body);
    std::vector<Edge> edges;
    int bit_index = 0;
    int i = 0, j = 1;
    for (std::size_t k = 0; k < body; ++k) {
        unsigned char c = static_cast<unsigned char>(text[1 + k]);
        if (c < 63 || c > 126)
            throw parse_error("invalid graph6 body character", 1 + k);
        int chunk = c - 63;
        for (int b = 5; b >= 0; --b, ++bit_index) {
            int bit = (chunk >> b) & 1;
            if (bit_index < bits) {
                if (bit) edges.push_back({i, j});
                if (++i == j) {
                    i = 0;
                    ++j;
                }
            } else if (bit) {
                throw parse_error("nonzero padding bit in graph6 body", 1 + k);
            }
        }
    }
    return SmallGraph(n, edges);
}

} // namespace cyclemass
