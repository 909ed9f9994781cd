#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "cyclemass/edge_mass.hpp"
#include "cyclemass/small_graph.hpp"

namespace cyclemass {

/// Base graph plus a bag size per base edge (aligned with base.edges).
struct BlowupSpec {
    SmallGraph base;
    std::vector<int> bag_sizes;
};

/// The blow-up: each base edge uv is replaced by an independent bag of
/// degree-2 vertices adjacent to u and v (no direct u-v edge remains).
/// Vertices 0..base.n-1 are the base; bags follow in base-edge order.
struct BlowupGraph {
    SmallGraph graph;
    SmallGraph base;
    std::vector<int> bag_sizes;
    std::vector<int> bag_start; // first bag vertex per base edge

    /// Index of the base edge whose bag contains v, or -1 for base vertices.
    int bag_of(int v) const;
};

BlowupGraph build_blowup(const BlowupSpec& spec);

/// Exact number of C_{2m} copies. Requires 2m <= vertex count.
std::uint64_t count_long_cycles(const BlowupGraph& bg, int m);

template <class S>
struct LeadingTermResult {
    BlowupGraph graph;
    std::vector<int> realized_bags; // rounded bag sizes, support-edge order
    int realized_n = 0;             // bag vertices only
    std::uint64_t count = 0;        // exact C_{2m} copies
    S projection;                   // beta(mu; m) * realized_n^m
    S ratio;                        // count / projection, 0 when projection is 0
    bool ratio_defined = false;
};

/// Builds the blow-up of the support of mu with bag sizes round(mu(e) * n)
/// (ties to even) and compares the exact C_{2m} count against the projection
/// beta * realized_n^m, where realized_n counts bag vertices only.
/// Diagnostic: no assertion is made about the ratio.
template <class S>
LeadingTermResult<S> leading_term_check(const EdgeMass<S>& mu, int m, int n_total);

/// Spec file format: a graph6 line for the base, then one "u v size" line
/// per base edge (each exactly once, any order).
BlowupSpec read_blowup_spec(std::istream& in);
BlowupSpec read_blowup_spec_file(const std::string& path);
void write_blowup_spec(std::ostream& out, const BlowupSpec& spec);

} // namespace cyclemass
