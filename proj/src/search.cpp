#include "cyclemass/optimizer.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <map>
#include <set>
#include <thread>

#include "cyclemass/canonical.hpp"
#include "cyclemass/cycles.hpp"
#include "cyclemass/generate.hpp"
#include "cyclemass/rng.hpp"

namespace cyclemass {

namespace {

// Beta rounded to 9 significant decimal digits: the ranking key that makes
// row order independent of sub-ulp noise between runs reaching the same
// optimum.
double round9(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.8e", v);
    return std::strtod(buf, nullptr);
}

// Support graph of a weight vector, compacted to its incident vertices.
std::string achieved_class(const detail::CycleSystem& sys, const std::vector<double>& w) {
    std::vector<Edge> live;
    std::set<int> verts;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] > 0) {
            live.push_back(sys.edges[i]);
            verts.insert(sys.edges[i].first);
            verts.insert(sys.edges[i].second);
        }
    }
    std::map<int, int> relabel;
    int next = 0;
    for (int v : verts) relabel[v] = next++;
    std::vector<Edge> mapped;
    mapped.reserve(live.size());
    for (const Edge& e : live) mapped.push_back({relabel[e.first], relabel[e.second]});
    return canonical_form(SmallGraph(next, mapped));
}

struct JobResult {
    detail::RunOutcome out;
    std::string achieved;
};

} // namespace

SearchReport search_opt(int m, const std::vector<int>& n_range, const AscentConfig& cfg,
                        int threads) {
    if (m < 3) throw std::invalid_argument("search_opt: need m >= 3");
    if (threads < 1) throw std::invalid_argument("search_opt: need at least one thread");
    detail::validate_config(cfg);
    if (n_range.empty()) throw empty_search_error("search_opt: empty vertex range");

    std::vector<int> ns(n_range);
    std::sort(ns.begin(), ns.end());
    ns.erase(std::unique(ns.begin(), ns.end()), ns.end());
    for (int n : ns) {
        if (n > 8) throw std::invalid_argument("search_opt: vertex counts beyond 8 unsupported");
        if (n < 3) throw std::invalid_argument("search_opt: vertex counts below 3 unsupported");
    }

    struct Candidate {
        SmallGraph graph;
        std::string key;
        detail::CycleSystem sys;
        std::uint64_t graph_key;
    };
    std::vector<Candidate> cands;
    for (int n : ns) {
        if (n < m) continue;
        for (const SmallGraph& g : enumerate_graphs(n, GraphFilter{2, true, {}}, threads)) {
            if (count_cycles(g, m) == 0) continue;
            Candidate c;
            c.graph = g;
            c.key = to_graph6(g); // enumerate_graphs yields canonical representatives
            c.sys = detail::CycleSystem::build(g, m);
            c.graph_key = CounterRng::mix(cfg.seed, hash_string(c.key));
            cands.push_back(std::move(c));
        }
    }
    if (cands.empty())
        throw empty_search_error("search_opt: no candidate supports in the given range");

    int runs_per = cfg.restarts + 1;
    std::size_t total_jobs = cands.size() * static_cast<std::size_t>(runs_per);
    std::vector<JobResult> results(total_jobs);

    auto work = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t j = lo; j < hi; ++j) {
            const Candidate& c = cands[j / runs_per];
            int run = static_cast<int>(j % runs_per);
            JobResult& jr = results[j];
            jr.out = detail::optimize_single(c.sys, CounterRng::mix(c.graph_key, run), run, cfg);
            if (jr.out.converged && jr.out.beta_value > 0)
                jr.achieved = achieved_class(c.sys, jr.out.w);
        }
    };
    int workers = static_cast<int>(std::min<std::size_t>(threads, total_jobs));
    if (workers <= 1) {
        work(0, total_jobs);
    } else {
        std::vector<std::thread> pool;
        std::size_t chunk = (total_jobs + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            std::size_t lo = t * chunk, hi = std::min(total_jobs, lo + chunk);
            if (lo < hi) pool.emplace_back(work, lo, hi);
        }
        for (auto& th : pool) th.join();
    }

    SearchReport rep;
    rep.m = m;
    rep.n_range = ns;
    rep.exploratory = m > 6;

    std::map<std::string, SearchRow> rows;
    for (const Candidate& c : cands) {
        SearchRow row;
        row.graph6 = c.key;
        row.candidate = true;
        rows[c.key] = row;
    }
    std::map<std::string, std::size_t> row_best_job;
    for (std::size_t j = 0; j < total_jobs; ++j) {
        const JobResult& jr = results[j];
        if (!jr.out.converged || jr.out.beta_value <= 0) {
            if (!jr.out.converged) ++rep.unconverged_runs;
            continue;
        }
        SearchRow& row = rows.try_emplace(jr.achieved, SearchRow{jr.achieved}).first->second;
        ++row.runs_attributed;
        if (!row.has_result || jr.out.beta_value > row.beta_value) {
            row.has_result = true;
            row.converged = true;
            row.beta_value = jr.out.beta_value;
            row.residual = jr.out.max_edge_residual;
            row.iterations = jr.out.iterations;
            row_best_job[jr.achieved] = j;
        }
    }

    for (auto& [key, row] : rows) rep.table.push_back(row);
    std::sort(rep.table.begin(), rep.table.end(), [](const SearchRow& a, const SearchRow& b) {
        if (a.has_result != b.has_result) return a.has_result;
        if (a.has_result) {
            double ra = round9(a.beta_value), rb = round9(b.beta_value);
            if (ra != rb) return ra > rb;
        }
        return a.graph6 < b.graph6;
    });

    const SearchRow* best = nullptr;
    for (const SearchRow& row : rep.table)
        if (row.has_result) {
            best = &row;
            break;
        }
    if (best) {
        rep.best_graph6 = best->graph6;
        rep.best_beta = best->beta_value;
        std::size_t j = row_best_job.at(best->graph6);
        const Candidate& c = cands[j / runs_per];
        std::vector<std::pair<Edge, double>> weights;
        for (std::size_t i = 0; i < c.sys.edges.size(); ++i)
            weights.emplace_back(c.sys.edges[i], results[j].out.w[i]);
        rep.best_mass = FloatMass(c.graph.n, std::move(weights));
    }
    return rep;
}

} // namespace cyclemass
