#pragma once

#include <optional>
#include <vector>

#include "cyclemass/small_graph.hpp"

namespace cyclemass {

struct GraphFilter {
    int min_degree = 0;
    bool connected = false;
    std::optional<int> regular{}; // exactly r-regular when set
};

/// All pairwise non-isomorphic graphs on n vertices passing the filter,
/// as canonical representatives sorted by (edge count, canonical key).
/// Requires n <= 8. Deterministic at every thread count.
std::vector<SmallGraph> enumerate_graphs(int n, const GraphFilter& filter = {},
                                         int threads = 1);

inline std::vector<SmallGraph> enumerate_graphs(int n, int min_degree, bool connected,
                                                int threads = 1) {
    return enumerate_graphs(n, GraphFilter{min_degree, connected, {}}, threads);
}

namespace detail {
/// Direct edge-subset sweep with canonical dedup; the production path for
/// n <= 6 and a cross-check oracle for the extension method.
std::vector<SmallGraph> enumerate_graphs_subsets(int n, const GraphFilter& filter,
                                                 int threads);
/// Grows (n-1)-vertex class representatives by one vertex; the production
/// path for n in {7, 8}, where the subset sweep would canonicalize millions
/// of labeled graphs.
std::vector<SmallGraph> enumerate_graphs_extension(int n, const GraphFilter& filter,
                                                   int threads);
} // namespace detail

} // namespace cyclemass
