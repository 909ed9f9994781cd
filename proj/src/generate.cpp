#include "cyclemass/generate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "cyclemass/canonical.hpp"

namespace cyclemass {

namespace {

bool passes(const SmallGraph& g, const GraphFilter& f) {
    for (int v = 0; v < g.n; ++v) {
        int d = g.degree(v);
        if (d < f.min_degree) return false;
        if (f.regular && d != *f.regular) return false;
    }
    if (f.connected && !is_connected(g)) return false;
    return true;
}

std::vector<SmallGraph> finish(std::set<std::string> keys) {
    std::vector<SmallGraph> out;
    out.reserve(keys.size());
    for (const std::string& key : keys) out.push_back(parse_graph6(key));
    std::stable_sort(out.begin(), out.end(), [](const SmallGraph& a, const SmallGraph& b) {
        if (a.edge_count() != b.edge_count()) return a.edge_count() < b.edge_count();
        return to_graph6(a) < to_graph6(b);
    });
    return out;
}

template <class Work>
std::set<std::string> sharded_keys(std::uint64_t total, int threads, Work&& work) {
    int workers = static_cast<int>(std::min<std::uint64_t>(threads, total ? total : 1));
    if (workers <= 1) {
        std::set<std::string> keys;
        work(0, total, keys);
        return keys;
    }
    std::vector<std::set<std::string>> parts(workers);
    std::vector<std::thread> pool;
    std::uint64_t chunk = (total + workers - 1) / workers;
    for (int t = 0; t < workers; ++t) {
        std::uint64_t lo = t * chunk, hi = std::min(total, lo + chunk);
        if (lo < hi)
            pool.emplace_back([&, lo, hi, t] { work(lo, hi, parts[t]); });
    }
    for (auto& th : pool) th.join();
    std::set<std::string> keys;
    for (auto& p : parts) keys.merge(p);
    return keys;
}

} // namespace

namespace detail {

std::vector<SmallGraph> enumerate_graphs_subsets(int n, const GraphFilter& filter,
                                                 int threads) {
    std::vector<Edge> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.push_back({u, v});
    std::uint64_t total = 1ull << pairs.size();

    auto work = [&](std::uint64_t lo, std::uint64_t hi, std::set<std::string>& keys) {
        for (std::uint64_t mask = lo; mask < hi; ++mask) {
            std::vector<Edge> edges;
            for (std::size_t k = 0; k < pairs.size(); ++k)
                if ((mask >> k) & 1ull) edges.push_back(pairs[k]);
            SmallGraph g(n, edges);
            if (!passes(g, filter)) continue;
            keys.insert(canonical_form(g));
        }
    };
    return finish(sharded_keys(total, threads, work));
}

std::vector<SmallGraph> enumerate_graphs_extension(int n, const GraphFilter& filter,
                                                   int threads) {
    // Unfiltered class representatives level by level: every n-vertex graph
    // is some (n-1)-vertex graph plus one vertex, so extending each smaller
    // representative by every neighborhood subset covers all classes.
    std::vector<std::string> level{canonical_form(SmallGraph(1, {}))};
    for (int k = 2; k <= n; ++k) {
        std::vector<SmallGraph> bases;
        bases.reserve(level.size());
        for (const std::string& key : level) bases.push_back(parse_graph6(key));
        std::uint64_t subsets = 1ull << (k - 1);
        std::uint64_t total = bases.size() * subsets;
        auto work = [&](std::uint64_t lo, std::uint64_t hi, std::set<std::string>& keys) {
            for (std::uint64_t job = lo; job < hi; ++job) {
                const SmallGraph& base = bases[job / subsets];
                std::uint64_t nbrs = job % subsets;
                std::vector<Edge> edges = base.edges;
                for (int v = 0; v < k - 1; ++v)
                    if ((nbrs >> v) & 1ull) edges.push_back({v, k - 1});
                keys.insert(canonical_form(SmallGraph(k, edges)));
            }
        };
        std::set<std::string> keys = sharded_keys(total, threads, work);
        level.assign(keys.begin(), keys.end());
    }
    std::set<std::string> filtered;
    for (const std::string& key : level) {
        SmallGraph g = parse_graph6(key);
        if (passes(g, filter)) filtered.insert(key);
    }
    return finish(std::move(filtered));
}

} // namespace detail

std::vector<SmallGraph> enumerate_graphs(int n, const GraphFilter& filter, int threads) {
    if (n < 0 || n > 8)
        throw std::invalid_argument("enumerate_graphs: supports at most 8 vertices");
    if (threads < 1)
        throw std::invalid_argument("enumerate_graphs: need at least one thread");
    if (n == 0) return {};
    if (n <= 6) return detail::enumerate_graphs_subsets(n, filter, threads);
    return detail::enumerate_graphs_extension(n, filter, threads);
}

} // namespace cyclemass
