#include "cyclemass/cycles.hpp"

#include <algorithm>
#include <stdexcept>

namespace cyclemass {

std::vector<Edge> CycleCopy::edge_list() const {
    std::vector<Edge> out;
    int m = length();
    out.reserve(m);
    for (int i = 0; i < m; ++i)
        out.push_back(make_edge(verts[i], verts[(i + 1) % m]));
    std::sort(out.begin(), out.end());
    return out;
}

bool CycleCopy::contains_vertex(int v) const {
    return std::find(verts.begin(), verts.end(), v) != verts.end();
}

bool CycleCopy::contains_edge(Edge e) const {
    e = make_edge(e.first, e.second);
    int m = length();
    for (int i = 0; i < m; ++i)
        if (make_edge(verts[i], verts[(i + 1) % m]) == e) return true;
    return false;
}

namespace {

// Rooted DFS: the root is the minimal vertex of the copy, every other vertex
// exceeds it, and requiring path[1] < path[m-1] kills the reflection. Each
// unlabeled copy appears exactly once, in lexicographic path order.
template <class Emit>
void walk_cycles(const SmallGraph& g, int m, Emit&& emit) {
    std::vector<int> path(m);
    std::uint32_t visited = 0;

    auto dfs = [&](auto&& self, int v, int depth) -> void {
        if (depth == m - 1) {
            if (g.has_edge(v, path[0]) && path[1] < path[m - 1]) emit(path);
            return;
        }
        std::uint32_t cand = g.adj[v] & ~visited;
        cand &= ~((1u << (path[0] + 1)) - 1u); // only vertices above the root
        while (cand) {
            int w = std::countr_zero(cand);
            cand &= cand - 1;
            path[depth + 1] = w;
            visited |= 1u << w;
            self(self, w, depth + 1);
            visited &= ~(1u << w);
        }
    };

    for (int root = 0; root + m <= g.n; ++root) {
        if (g.degree(root) < 2) continue;
        path[0] = root;
        visited = 1u << root;
        dfs(dfs, root, 0);
    }
}

} // namespace

CycleSet enumerate_cycles(const SmallGraph& g, int m) {
    if (m < 3) throw std::invalid_argument("enumerate_cycles: need m >= 3");
    if (m > g.n) throw std::invalid_argument("enumerate_cycles: m exceeds vertex count");
    CycleSet cs;
    cs.m = m;
    walk_cycles(g, m, [&](const std::vector<int>& path) {
        cs.cycles.push_back(CycleCopy{path});
    });
    return cs;
}

std::uint64_t count_cycles(const SmallGraph& g, int m) {
    if (m < 3) throw std::invalid_argument("count_cycles: need m >= 3");
    if (m > g.n) throw std::invalid_argument("count_cycles: m exceeds vertex count");
    std::uint64_t count = 0;
    walk_cycles(g, m, [&](const std::vector<int>&) { ++count; });
    return count;
}

} // namespace cyclemass
