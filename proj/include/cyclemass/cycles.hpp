#pragma once

#include <cstdint>
#include <vector>

#include "cyclemass/small_graph.hpp"

namespace cyclemass {

/// One unlabeled m-cycle copy in canonical traversal order: verts[0] is the
/// minimal vertex and verts[1] < verts.back(), so equal subgraphs compare
/// equal as sequences.
struct CycleCopy {
    std::vector<int> verts;

    int length() const { return static_cast<int>(verts.size()); }
    std::vector<Edge> edge_list() const;
    bool contains_vertex(int v) const;
    bool contains_edge(Edge e) const;

    bool operator==(const CycleCopy&) const = default;
};

/// cyc_m(G): every unlabeled C_m subgraph copy exactly once.
struct CycleSet {
    int m = 0;
    std::vector<CycleCopy> cycles;

    std::size_t size() const { return cycles.size(); }
};

/// Rooted DFS from the minimal vertex of each copy, in lexicographic order
/// of the canonical vertex sequences. Requires 3 <= m <= g.n.
CycleSet enumerate_cycles(const SmallGraph& g, int m);

/// Same enumeration, counting only.
std::uint64_t count_cycles(const SmallGraph& g, int m);

} // namespace cyclemass
