#include "cyclemass/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cyclemass/rng.hpp"

namespace cyclemass {

namespace {

// Success test for one sample: m distinct edges whose union is a single
// m-cycle (every touched vertex has degree 2, m vertices total, and the
// closed walk from any start returns first after exactly m steps).
bool is_cycle_sample(const std::vector<Edge>& edges, const int* idx, int m) {
    for (int a = 1; a < m; ++a)
        for (int b = 0; b < a; ++b)
            if (idx[a] == idx[b]) return false;
    int deg[max_vertices] = {};
    int nbr[max_vertices][2];
    int touched[2 * 16];
    int tcount = 0;
    for (int k = 0; k < m; ++k) {
        const Edge& e = edges[idx[k]];
        for (int side = 0; side < 2; ++side) {
            int v = side ? e.second : e.first;
            int o = side ? e.first : e.second;
            if (deg[v] == 0) touched[tcount++] = v;
            if (deg[v] >= 2) return false;
            nbr[v][deg[v]++] = o;
        }
    }
    if (tcount != m) return false;
    int start = touched[0], prev = start, cur = nbr[start][0];
    int steps = 1;
    while (cur != start) {
        int nxt = nbr[cur][0] == prev ? nbr[cur][1] : nbr[cur][0];
        prev = cur;
        cur = nxt;
        ++steps;
    }
    return steps == m;
}

} // namespace

McReport monte_carlo_cycle_probability(const FloatMass& mu, int m, std::uint64_t samples,
                                       std::uint64_t seed, int threads) {
    if (m < 3) throw std::invalid_argument("monte_carlo: need m >= 3");
    if (m > 16) throw std::invalid_argument("monte_carlo: m beyond 16 unsupported");
    if (samples < 1) throw std::invalid_argument("monte_carlo: need at least one sample");
    if (threads < 1) throw std::invalid_argument("monte_carlo: need at least one thread");

    std::vector<Edge> edges;
    std::vector<double> cum;
    edges.reserve(mu.weights.size());
    cum.reserve(mu.weights.size());
    double acc = 0;
    for (const auto& [e, p] : mu.weights) {
        edges.push_back(e);
        acc += p;
        cum.push_back(acc);
    }
    if (edges.empty()) throw std::invalid_argument("monte_carlo: empty mass");

    CounterRng rng(seed);
    auto shard = [&](std::uint64_t lo, std::uint64_t hi) {
        std::uint64_t hits = 0;
        int idx[16];
        int last = static_cast<int>(edges.size()) - 1;
        for (std::uint64_t i = lo; i < hi; ++i) {
            for (int k = 0; k < m; ++k) {
                double u = rng.uniform01(i * m + k);
                int j = static_cast<int>(std::upper_bound(cum.begin(), cum.end(), u) - cum.begin());
                idx[k] = std::min(j, last);
            }
            if (is_cycle_sample(edges, idx, m)) ++hits;
        }
        return hits;
    };

    std::uint64_t successes = 0;
    int workers = static_cast<int>(std::min<std::uint64_t>(threads, samples));
    if (workers <= 1) {
        successes = shard(0, samples);
    } else {
        std::vector<std::uint64_t> parts(workers, 0);
        std::vector<std::thread> pool;
        std::uint64_t chunk = (samples + workers - 1) / workers;
        for (int t = 0; t < workers; ++t) {
            std::uint64_t lo = t * chunk, hi = std::min(samples, lo + chunk);
            if (lo < hi)
                pool.emplace_back([&, lo, hi, t] { parts[t] = shard(lo, hi); });
        }
        for (auto& th : pool) th.join();
        for (std::uint64_t p : parts) successes += p;
    }

    McReport rep;
    rep.successes = successes;
    rep.samples = samples;
    rep.m = m;
    rep.seed = seed;
    rep.estimate = static_cast<double>(successes) / static_cast<double>(samples);
    rep.std_error = std::sqrt(rep.estimate * (1.0 - rep.estimate) / static_cast<double>(samples));
    return rep;
}

} // namespace cyclemass
