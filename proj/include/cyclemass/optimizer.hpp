#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclemass/edge_mass.hpp"

namespace cyclemass {

struct AscentConfig {
    long max_iterations = 100000;
    double tolerance = 1e-12;
    int restarts = 32;       // random interior starts in addition to uniform
    std::uint64_t seed = 12345;
};

namespace detail {

/// Support cycles compiled to edge indices, shared by every beta/residual
/// evaluation. Edges are the subset of support edges lying on at least one
/// m-cycle, in sorted (mass) order; `dead` are the pruned leftovers.
struct CycleSystem {
    int n = 0;
    int m = 0;
    std::vector<Edge> edges;
    std::vector<Edge> dead;
    std::vector<std::vector<int>> cycle_edges;   // per cycle, m edge indices
    std::vector<std::vector<int>> cycle_verts;   // per cycle, m vertices

    static CycleSystem build(const SmallGraph& support, int m);

    int edge_index(Edge e) const;
};

template <class S>
struct SystemEval {
    S beta_value;
    std::vector<S> cycle_mass; // mu(C) per cycle, canonical order
    std::vector<S> ecm;        // per edge, sum of mu(C) over cycles through it
};

/// Products accumulated in canonical cycle order, so float results are
/// deterministic and exact results match beta().
template <class S>
SystemEval<S> evaluate(const CycleSystem& sys, const std::vector<S>& w) {
    SystemEval<S> ev;
    ev.beta_value = S(0);
    ev.cycle_mass.reserve(sys.cycle_edges.size());
    ev.ecm.assign(sys.edges.size(), S(0));
    for (const auto& ce : sys.cycle_edges) {
        S prod(1);
        for (int idx : ce) prod *= w[idx];
        ev.beta_value += prod;
        for (int idx : ce) ev.ecm[idx] += prod;
        ev.cycle_mass.push_back(prod);
    }
    return ev;
}

/// One ascent run on a compiled system, as used by optimize_on_support and
/// the support search.
struct RunOutcome {
    std::vector<double> w; // aligned with the system's edges
    double beta_value = 0;
    long iterations = 0;
    bool converged = false;
    double max_edge_residual = 0;
};

/// Run 0 starts uniform; later runs draw a symmetric Dirichlet interior
/// point from the counter stream `run_key`.
std::vector<double> initial_weights(const CycleSystem& sys, std::uint64_t run_key, int run);

RunOutcome optimize_single(const CycleSystem& sys, std::uint64_t run_key, int run,
                           const AscentConfig& cfg);

void validate_config(const AscentConfig& cfg);

} // namespace detail

/// Per support edge, the total cycle mass through it: sum over C containing
/// e of mu(C). Stationarity means m*beta*mu(e) equals this for every edge.
template <class S>
std::vector<std::pair<Edge, S>> edge_cycle_mass(const EdgeMass<S>& mu, int m);

/// Growth-transform update mu+(e) = edge_cycle_mass(e) / (m beta). Preserves
/// the simplex and never decreases beta. Throws dead_support_error when
/// beta(mu; m) = 0.
template <class S>
EdgeMass<S> ascent_step(const EdgeMass<S>& mu, int m);

template <class S>
struct StationarityReport {
    S beta_value;
    std::vector<std::pair<Edge, S>> edge_residuals; // |m b mu(e) - sum| / (m b)
    std::vector<S> vertex_residuals;                // |m b deg(x) - 2 sum| / (m b)
    S max_edge_residual;
    S max_vertex_residual;
    bool within_tolerance = false;
};

/// Both regularity identities, normalized by m*beta. Requires beta > 0.
template <class S>
StationarityReport<S> verify_stationarity(const EdgeMass<S>& mu, int m,
                                          double epsilon = 1e-12);

struct AscentReport {
    FloatMass mass;
    double beta_value = 0;
    long iterations = 0; // ascent steps of the winning run
    std::vector<std::pair<Edge, double>> edge_residuals;
    std::vector<double> vertex_residuals;
    double max_edge_residual = 0;
    double max_vertex_residual = 0;
    bool converged = false;
    int runs = 0;
    SmallGraph support; // achieved support graph of the final mass
};

/// Best result over one uniform start plus cfg.restarts symmetric-Dirichlet
/// interior starts on G's live edges (edges on no m-cycle are pruned first).
/// The iteration may leave weights on a proper face of the simplex; the
/// report's support is the support actually reached. A cycle-free G yields
/// beta = 0 with zero iterations.
AscentReport optimize_on_support(const SmallGraph& g, int m, const AscentConfig& cfg = {});

class empty_search_error : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct SearchRow {
    std::string graph6;        // canonical key of the support class
    bool candidate = false;    // appeared in the enumerated candidate set
    bool has_result = false;   // at least one run converged onto this class
    double beta_value = 0;
    double residual = 0;       // max edge residual of the best attributed run
    long iterations = 0;
    bool converged = false;
    int runs_attributed = 0;
};

struct SearchReport {
    int m = 0;
    std::vector<int> n_range;
    std::string best_graph6;
    FloatMass best_mass;
    double best_beta = 0;
    bool exploratory = false; // m outside the proven cases 3..6
    long unconverged_runs = 0;
    std::vector<SearchRow> table;
};

/// Enumerates connected min-degree-2 candidate supports with at least one
/// m-cycle over the given vertex counts (each <= 8), optimizes each, and
/// attributes every converged run to the isomorphism class of its achieved
/// support, so a run that collapses onto a sub-support credits that
/// sub-support's row. Rows rank by beta (rounded to 9 significant digits)
/// descending, ties by graph6 ascending; the report is identical at every
/// thread count.
SearchReport search_opt(int m, const std::vector<int>& n_range,
                        const AscentConfig& cfg = {}, int threads = 1);

// ---- template implementations ----

template <class S>
std::vector<std::pair<Edge, S>> edge_cycle_mass(const EdgeMass<S>& mu, int m) {
    if (m < 3) throw std::invalid_argument("edge_cycle_mass: need m >= 3");
    std::vector<std::pair<Edge, S>> out;
    out.reserve(mu.weights.size());
    if (mu.n < m) {
        for (const auto& [e, p] : mu.weights) out.emplace_back(e, S(0));
        return out;
    }
    MassStats<S> st = stats(mu);
    detail::CycleSystem sys = detail::CycleSystem::build(st.support, m);
    std::vector<S> w;
    w.reserve(sys.edges.size());
    for (const Edge& e : sys.edges) w.push_back(mu.weight(e));
    detail::SystemEval<S> ev = detail::evaluate(sys, w);
    for (const auto& [e, p] : mu.weights) {
        int idx = sys.edge_index(e);
        out.emplace_back(e, idx >= 0 ? ev.ecm[idx] : S(0));
    }
    return out;
}

template <class S>
EdgeMass<S> ascent_step(const EdgeMass<S>& mu, int m) {
    std::vector<std::pair<Edge, S>> ecm = edge_cycle_mass(mu, m);
    S total(0); // = m * beta
    for (const auto& [e, v] : ecm) total += v;
    if (total == S(0))
        throw dead_support_error("ascent_step: support carries no m-cycle mass");
    for (auto& [e, v] : ecm) v /= total;
    return EdgeMass<S>(mu.n, std::move(ecm));
}

template <class S>
StationarityReport<S> verify_stationarity(const EdgeMass<S>& mu, int m, double epsilon) {
    if (m < 3) throw std::invalid_argument("verify_stationarity: need m >= 3");
    StationarityReport<S> rep;
    MassStats<S> st = stats(mu);
    detail::CycleSystem sys = detail::CycleSystem::build(
        mu.n >= m ? st.support : SmallGraph(mu.n, {}), m);
    std::vector<S> w;
    w.reserve(sys.edges.size());
    for (const Edge& e : sys.edges) w.push_back(mu.weight(e));
    detail::SystemEval<S> ev = detail::evaluate(sys, w);
    rep.beta_value = ev.beta_value;
    if (rep.beta_value == S(0))
        throw std::invalid_argument("verify_stationarity: beta is zero");
    S mb = scalar_traits<S>::from_int(m) * rep.beta_value;

    rep.max_edge_residual = S(0);
    for (const auto& [e, p] : mu.weights) {
        int idx = sys.edge_index(e);
        S through = idx >= 0 ? ev.ecm[idx] : S(0);
        S r = scalar_traits<S>::abs(mb * p - through) / mb;
        rep.edge_residuals.emplace_back(e, r);
        if (r > rep.max_edge_residual) rep.max_edge_residual = r;
    }

    std::vector<S> vertex_sum(mu.n, S(0)); // sum of 2 mu(C) over cycles at x
    for (std::size_t c = 0; c < sys.cycle_verts.size(); ++c)
        for (int v : sys.cycle_verts[c])
            vertex_sum[v] += S(2) * ev.cycle_mass[c];
    rep.vertex_residuals.assign(mu.n, S(0));
    rep.max_vertex_residual = S(0);
    for (int x = 0; x < mu.n; ++x) {
        S r = scalar_traits<S>::abs(mb * st.weighted_degree[x] - vertex_sum[x]) / mb;
        rep.vertex_residuals[x] = r;
        if (r > rep.max_vertex_residual) rep.max_vertex_residual = r;
    }

    S eps = scalar_traits<S>::from_rational(Rational(epsilon));
    rep.within_tolerance = rep.max_edge_residual <= eps && rep.max_vertex_residual <= eps;
    return rep;
}

} // namespace cyclemass
