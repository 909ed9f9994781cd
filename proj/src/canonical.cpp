#include "cyclemass/canonical.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace cyclemass {

namespace {

// Branch-and-bound over vertex placements. Position p contributes the column
// of adjacency bits against positions 0..p-1 (MSB = position 0), and the
// concatenated columns are exactly the graph6 bit string, so minimizing the
// columns lexicographically minimizes the graph6 encoding over all n!
// relabelings. The prefix is re-compared against the incumbent at every node,
// which keeps pruning sound when the incumbent improves mid-search.
struct Minimizer {
    const SmallGraph& g;
    int n;
    std::vector<int> placed;
    std::vector<int> cols;
    std::vector<int> best_cols;
    std::uint32_t used = 0;

    explicit Minimizer(const SmallGraph& graph) : g(graph), n(graph.n) {
        placed.assign(n, -1);
        cols.assign(n, 0);
        best_cols.assign(n, 0);
        greedy_incumbent();
        dfs(0);
    }

    int column(int v, int pos) const {
        int bits = 0;
        for (int i = 0; i < pos; ++i)
            bits = (bits << 1) | (g.has_edge(v, placed[i]) ? 1 : 0);
        return bits;
    }

    void greedy_incumbent() {
        for (int pos = 0; pos < n; ++pos) {
            int best_v = -1, best_bits = 1 << 30;
            for (int v = 0; v < n; ++v) {
                if ((used >> v) & 1u) continue;
                int bits = column(v, pos);
                if (bits < best_bits) {
                    best_bits = bits;
                    best_v = v;
                }
            }
            placed[pos] = best_v;
            used |= 1u << best_v;
            best_cols[pos] = best_bits;
        }
        used = 0;
        std::fill(placed.begin(), placed.end(), -1);
    }

    int prefix_compare(int pos) const {
        for (int i = 0; i < pos; ++i) {
            if (cols[i] < best_cols[i]) return -1;
            if (cols[i] > best_cols[i]) return 1;
        }
        return 0;
    }

    void dfs(int pos) {
        if (pos == n) return;
        int c = prefix_compare(pos);
        if (c > 0) return;
        std::vector<std::pair<int, int>> cand; // (column bits, vertex)
        for (int v = 0; v < n; ++v)
            if (!((used >> v) & 1u)) cand.push_back({column(v, pos), v});
        std::sort(cand.begin(), cand.end());
        for (auto [bits, v] : cand) {
            if (c == 0 && bits > best_cols[pos]) break; // sorted: the rest are worse
            placed[pos] = v;
            cols[pos] = bits;
            used |= 1u << v;
            if (pos == n - 1) {
                if (std::lexicographical_compare(cols.begin(), cols.end(),
                                                 best_cols.begin(), best_cols.end()))
                    best_cols = cols;
            } else {
                dfs(pos + 1);
            }
            used &= ~(1u << v);
            placed[pos] = -1;
        }
    }
};

} // namespace

std::string canonical_form(const SmallGraph& g) {
    if (g.n > 10)
        throw std::invalid_argument("canonical_form: supports at most 10 vertices");
    if (g.n <= 1) return to_graph6(g);
    Minimizer mz(g);
    std::vector<Edge> edges;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i)
            if ((mz.best_cols[j] >> (j - 1 - i)) & 1) edges.push_back({i, j});
    return to_graph6(SmallGraph(g.n, edges));
}

SmallGraph canonical_representative(const SmallGraph& g) {
    return parse_graph6(canonical_form(g));
}

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b) {
    if (a.n != b.n || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

} // namespace cyclemass
