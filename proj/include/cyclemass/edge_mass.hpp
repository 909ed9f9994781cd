#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "cyclemass/cycles.hpp"
#include "cyclemass/errors.hpp"
#include "cyclemass/rational.hpp"
#include "cyclemass/small_graph.hpp"

namespace cyclemass {

/// Probability mass on the edge set of the clique over vertices 0..n-1.
/// Zero-weight pairs are never stored, so the key set is supp(mu). Scalar is
/// either Rational (exact) or double (weights must sum to 1 within 2^-40).
template <class S>
struct EdgeMass {
    int n = 0;
    std::vector<std::pair<Edge, S>> weights; // sorted by edge, all > 0

    EdgeMass() = default;

    EdgeMass(int n_, std::vector<std::pair<Edge, S>> w) : n(n_), weights(std::move(w)) {
        if (n < 0 || n > max_vertices)
            throw data_error("edge mass: vertex count out of range");
        for (auto& [e, p] : weights) {
            e = make_edge(e.first, e.second);
            if (e.first < 0 || e.second >= n)
                throw data_error("edge mass: endpoint out of range");
            if (e.first == e.second)
                throw data_error("edge mass: loop edge");
            if (p < S(0))
                throw data_error("edge mass: negative weight");
        }
        std::sort(weights.begin(), weights.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        for (std::size_t i = 1; i < weights.size(); ++i)
            if (weights[i].first == weights[i - 1].first)
                throw data_error("edge mass: duplicate edge");
        std::erase_if(weights, [](const auto& kv) { return kv.second == S(0); });
        S sum(0);
        for (const auto& [e, p] : weights) sum += p;
        S dev = scalar_traits<S>::abs(sum - S(1));
        if (dev > scalar_traits<S>::sum_tolerance())
            throw data_error("edge mass: weights sum to " +
                             weight_string(sum) + ", expected 1");
    }

    S weight(Edge e) const {
        e = make_edge(e.first, e.second);
        auto it = std::lower_bound(weights.begin(), weights.end(), e,
                                   [](const auto& kv, const Edge& k) { return kv.first < k; });
        if (it != weights.end() && it->first == e) return it->second;
        return S(0);
    }

    int support_edge_count() const { return static_cast<int>(weights.size()); }

    /// Index into `weights` or -1.
    int index_of(Edge e) const {
        e = make_edge(e.first, e.second);
        auto it = std::lower_bound(weights.begin(), weights.end(), e,
                                   [](const auto& kv, const Edge& k) { return kv.first < k; });
        if (it != weights.end() && it->first == e)
            return static_cast<int>(it - weights.begin());
        return -1;
    }

private:
    static std::string weight_string(const Rational& v) { return fraction_string(v); }
    static std::string weight_string(double v) { return std::to_string(v); }
};

using ExactMass = EdgeMass<Rational>;
using FloatMass = EdgeMass<double>;

/// Weighted degrees, the support graph and its sizes.
template <class S>
struct MassStats {
    std::vector<S> weighted_degree; // indexed by vertex, size n
    SmallGraph support;             // G_mu on the full ground set
    int support_edges = 0;
    int support_vertices = 0;       // |supp mu-bar|
};

template <class S>
EdgeMass<S> uniform_on_edges(const SmallGraph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("uniform_on_edges: graph has no edges");
    S p = S(1) / scalar_traits<S>::from_int(g.edge_count());
    std::vector<std::pair<Edge, S>> w;
    w.reserve(g.edges.size());
    for (const Edge& e : g.edges) w.emplace_back(e, p);
    return EdgeMass<S>(g.n, std::move(w));
}

template <class S>
MassStats<S> stats(const EdgeMass<S>& mu) {
    MassStats<S> st;
    st.weighted_degree.assign(mu.n, S(0));
    std::vector<Edge> support_edges;
    support_edges.reserve(mu.weights.size());
    for (const auto& [e, p] : mu.weights) {
        st.weighted_degree[e.first] += p;
        st.weighted_degree[e.second] += p;
        support_edges.push_back(e);
    }
    st.support = SmallGraph(mu.n, support_edges);
    st.support_edges = static_cast<int>(support_edges.size());
    for (const S& d : st.weighted_degree)
        if (d > S(0)) ++st.support_vertices;
    return st;
}

/// mu(G): product of mu over E(G); zero as soon as any edge is unsupported.
template <class S>
S subgraph_mass(const EdgeMass<S>& mu, const SmallGraph& g) {
    if (g.edge_count() == 0)
        throw std::invalid_argument("subgraph_mass: graph has no edges");
    S prod(1);
    for (const Edge& e : g.edges) {
        if (e.second >= mu.n) return S(0);
        S p = mu.weight(e);
        if (p == S(0)) return S(0);
        prod *= p;
    }
    return prod;
}

/// beta(mu; m): sum of mu(C) over unlabeled m-cycle copies in the support
/// graph, accumulated in the canonical cycle order.
template <class S>
S beta(const EdgeMass<S>& mu, int m) {
    if (m < 3) throw std::invalid_argument("beta: m must be at least 3");
    if (mu.n < m) return S(0);
    MassStats<S> st = stats(mu);
    CycleSet cs = enumerate_cycles(st.support, m);
    S total(0);
    for (const CycleCopy& c : cs.cycles) {
        S prod(1);
        for (int i = 0; i < m; ++i)
            prod *= mu.weight(make_edge(c.verts[i], c.verts[(i + 1) % m]));
        total += prod;
    }
    return total;
}

/// The rescaled mass mu' from the edge inequality: drop e = xy, scale edges
/// meeting exactly one of x, y by a = 2/(2 - m mu(e)) and disjoint edges by
/// b = (m-4)/(m-4 + m mu(e)). Requires m in {5, 6}, e in supp(mu) and
/// weighted degree exactly 2/m at both endpoints; then the result sums to 1.
template <class S>
EdgeMass<S> rescale_edge(const EdgeMass<S>& mu, Edge e, int m) {
    if (m != 5 && m != 6)
        throw std::invalid_argument("rescale_edge: m must be 5 or 6");
    e = make_edge(e.first, e.second);
    S pe = mu.weight(e);
    if (pe == S(0))
        throw std::invalid_argument("rescale_edge: edge not in support");
    MassStats<S> st = stats(mu);
    S target = S(2) / scalar_traits<S>::from_int(m);
    for (int x : {e.first, e.second}) {
        S dev = scalar_traits<S>::abs(st.weighted_degree[x] - target);
        bool ok = scalar_traits<S>::exact ? (dev == S(0)) : (dev <= S(1e-9));
        if (!ok)
            throw std::invalid_argument("rescale_edge: weighted degree at an endpoint is not 2/m");
    }
    S me = scalar_traits<S>::from_int(m) * pe;
    if (me >= S(2))
        throw std::invalid_argument("rescale_edge: m*mu(e) >= 2, scale factor a undefined");
    S a = S(2) / (S(2) - me);
    S b = scalar_traits<S>::from_int(m - 4) / (scalar_traits<S>::from_int(m - 4) + me);
    std::vector<std::pair<Edge, S>> w;
    w.reserve(mu.weights.size());
    for (const auto& [s, p] : mu.weights) {
        if (s == e) continue;
        int shared = (s.first == e.first) + (s.first == e.second) +
                     (s.second == e.first) + (s.second == e.second);
        w.emplace_back(s, shared == 1 ? a * p : b * p);
    }
    return EdgeMass<S>(mu.n, std::move(w));
}

inline FloatMass to_float(const ExactMass& mu) {
    std::vector<std::pair<Edge, double>> w;
    w.reserve(mu.weights.size());
    for (const auto& [e, p] : mu.weights) w.emplace_back(e, to_double(p));
    return FloatMass(mu.n, std::move(w));
}

} // namespace cyclemass
