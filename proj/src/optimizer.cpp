#include "cyclemass/optimizer.hpp"

#include <algorithm>
#include <cmath>

#include "cyclemass/cycles.hpp"
#include "cyclemass/rng.hpp"

namespace cyclemass {

namespace detail {

CycleSystem CycleSystem::build(const SmallGraph& support, int m) {
    if (m < 3) throw std::invalid_argument("CycleSystem: need m >= 3");
    CycleSystem sys;
    sys.n = support.n;
    sys.m = m;
    if (m > support.n) {
        sys.dead = support.edges;
        return sys;
    }
    CycleSet cs = enumerate_cycles(support, m);
    std::vector<bool> live(support.edges.size(), false);
    auto support_index = [&](Edge e) {
        auto it = std::lower_bound(support.edges.begin(), support.edges.end(), e);
        return static_cast<int>(it - support.edges.begin());
    };
    for (const CycleCopy& c : cs.cycles)
        for (const Edge& e : c.edge_list()) live[support_index(e)] = true;
    for (std::size_t i = 0; i < support.edges.size(); ++i)
        (live[i] ? sys.edges : sys.dead).push_back(support.edges[i]);
    sys.cycle_edges.reserve(cs.cycles.size());
    sys.cycle_verts.reserve(cs.cycles.size());
    for (const CycleCopy& c : cs.cycles) {
        std::vector<int> ce;
        ce.reserve(m);
        for (int i = 0; i < m; ++i)
            ce.push_back(sys.edge_index(make_edge(c.verts[i], c.verts[(i + 1) % m])));
        sys.cycle_edges.push_back(std::move(ce));
        sys.cycle_verts.push_back(c.verts);
    }
    return sys;
}

int CycleSystem::edge_index(Edge e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) return static_cast<int>(it - edges.begin());
    return -1;
}

namespace {

struct RunResult {
    std::vector<double> w;
    double beta_value = 0;
    long iterations = 0;
    bool converged = false;
    double max_edge_residual = 0;
};

// Growth-transform iteration with a short polish phase once the residual
// tolerance is hit: extra steps drive collapsing weights to exact zero, so
// the achieved support reads off the weight vector.
RunResult run_ascent(const CycleSystem& sys, std::vector<double> w, const AscentConfig& cfg) {
    RunResult rr;
    const std::size_t k = sys.edges.size();
    std::vector<double> wn(k);
    bool hit = false;
    long polish = 0;
    while (rr.iterations < cfg.max_iterations) {
        SystemEval<double> ev = evaluate(sys, w);
        double total = 0; // m * beta
        for (double v : ev.ecm) total += v;
        if (total == 0) break;
        double res = 0;
        for (std::size_t i = 0; i < k; ++i) {
            wn[i] = ev.ecm[i] / total;
            res = std::max(res, std::fabs(wn[i] - w[i]));
        }
        bool fixed = std::equal(w.begin(), w.end(), wn.begin());
        w.swap(wn);
        ++rr.iterations;
        if (!hit && res <= cfg.tolerance) {
            hit = true;
            polish = 256;
        }
        if (hit && (fixed || --polish <= 0)) break;
    }
    SystemEval<double> ev = evaluate(sys, w);
    rr.beta_value = ev.beta_value;
    double total = 0;
    for (double v : ev.ecm) total += v;
    if (total > 0) {
        double res = 0;
        for (std::size_t i = 0; i < k; ++i)
            res = std::max(res, std::fabs(ev.ecm[i] / total - w[i]));
        rr.max_edge_residual = res;
        rr.converged = res <= cfg.tolerance;
    }
    rr.w = std::move(w);
    return rr;
}

} // namespace

std::vector<double> initial_weights(const CycleSystem& sys, std::uint64_t run_key, int run) {
    std::vector<double> w(sys.edges.size());
    if (run == 0) {
        std::fill(w.begin(), w.end(), 1.0 / static_cast<double>(w.size()));
        return w;
    }
    CounterRng rng(run_key);
    double sum = 0;
    for (std::size_t j = 0; j < w.size(); ++j) {
        w[j] = rng.exponential(j);
        sum += w[j];
    }
    for (double& v : w) v /= sum;
    return w;
}

RunOutcome optimize_single(const CycleSystem& sys, std::uint64_t run_key, int run,
                           const AscentConfig& cfg) {
    RunResult rr = run_ascent(sys, initial_weights(sys, run_key, run), cfg);
    RunOutcome out;
    out.beta_value = rr.beta_value;
    out.iterations = rr.iterations;
    out.converged = rr.converged;
    out.max_edge_residual = rr.max_edge_residual;
    out.w = std::move(rr.w);
    return out;
}

void validate_config(const AscentConfig& cfg) {
    if (cfg.tolerance <= 0) throw std::invalid_argument("ascent: tolerance must be positive");
    if (cfg.restarts < 1) throw std::invalid_argument("ascent: need at least one restart");
    if (cfg.max_iterations < 1) throw std::invalid_argument("ascent: need at least one iteration");
}

} // namespace detail

AscentReport optimize_on_support(const SmallGraph& g, int m, const AscentConfig& cfg) {
    if (m < 3) throw std::invalid_argument("optimize_on_support: need m >= 3");
    if (g.edge_count() == 0) throw std::invalid_argument("optimize_on_support: graph has no edges");
    detail::validate_config(cfg);

    AscentReport rep;
    detail::CycleSystem sys = detail::CycleSystem::build(g, m);
    if (sys.cycle_edges.empty()) {
        rep.mass = uniform_on_edges<double>(g);
        rep.converged = true;
        rep.support = g;
        rep.runs = 0;
        return rep;
    }

    std::uint64_t graph_key = CounterRng::mix(cfg.seed, hash_string(to_graph6(g)));
    int total_runs = cfg.restarts + 1;
    detail::RunOutcome best;
    int best_run = -1;
    for (int run = 0; run < total_runs; ++run) {
        detail::RunOutcome out =
            detail::optimize_single(sys, CounterRng::mix(graph_key, run), run, cfg);
        if (best_run < 0 || out.beta_value > best.beta_value) {
            best = std::move(out);
            best_run = run;
        }
    }

    std::vector<std::pair<Edge, double>> weights;
    for (std::size_t i = 0; i < sys.edges.size(); ++i)
        weights.emplace_back(sys.edges[i], best.w[i]);
    rep.mass = FloatMass(g.n, std::move(weights));
    rep.beta_value = best.beta_value;
    rep.iterations = best.iterations;
    rep.runs = total_runs;
    if (rep.beta_value > 0) {
        StationarityReport<double> st = verify_stationarity(rep.mass, m, cfg.tolerance);
        rep.edge_residuals = st.edge_residuals;
        rep.vertex_residuals = st.vertex_residuals;
        rep.max_edge_residual = st.max_edge_residual;
        rep.max_vertex_residual = st.max_vertex_residual;
        rep.converged = st.within_tolerance;
    }
    rep.support = stats(rep.mass).support;
    return rep;
}

} // namespace cyclemass
