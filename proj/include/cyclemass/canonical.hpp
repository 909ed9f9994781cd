#pragma once

#include <string>

#include "cyclemass/small_graph.hpp"

namespace cyclemass {

/// Isomorphism-invariant key: the lexicographically minimal graph6 string
/// over all n! relabelings (branch-and-bound on the upper-triangle bit
/// columns). Equal keys iff isomorphic. Requires n <= 10.
///
/// The true minimum (rather than a degree-refined approximation) also gives
/// strict monotonicity under edge addition, so proper subgraphs sort before
/// their supergraphs among equal-order graphs.
std::string canonical_form(const SmallGraph& g);

/// The graph the canonical key denotes: parse_graph6(canonical_form(g)).
SmallGraph canonical_representative(const SmallGraph& g);

bool are_isomorphic(const SmallGraph& a, const SmallGraph& b);

} // namespace cyclemass
