#include "cyclemass/blowup.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cyclemass/errors.hpp"

namespace cyclemass {

namespace {

std::vector<std::string> tokens(const std::string& line) {
    std::istringstream ss(line);
    std::vector<std::string> out;
    std::string t;
    while (ss >> t) out.push_back(t);
    return out;
}

int parse_int(const std::string& t, std::size_t lineno, const char* what) {
    std::size_t used = 0;
    int v;
    try {
        v = std::stoi(t, &used);
    } catch (const std::exception&) {
        throw parse_error(std::string("expected ") + what, lineno, true);
    }
    if (used != t.size()) throw parse_error(std::string("expected ") + what, lineno, true);
    return v;
}

} // namespace

int BlowupGraph::bag_of(int v) const {
    if (v < base.n) return -1;
    for (std::size_t i = 0; i < bag_start.size(); ++i)
        if (v >= bag_start[i] && v < bag_start[i] + bag_sizes[i])
            return static_cast<int>(i);
    return -1;
}

BlowupGraph build_blowup(const BlowupSpec& spec) {
    if (spec.bag_sizes.size() != spec.base.edges.size())
        throw std::invalid_argument("build_blowup: one bag size per base edge required");
    long total = spec.base.n;
    for (int s : spec.bag_sizes) {
        if (s < 0) throw std::invalid_argument("build_blowup: negative bag size");
        total += s;
    }
    if (total > max_vertices)
        throw std::invalid_argument("build_blowup: blow-up exceeds the 32-vertex cap");

    BlowupGraph bg;
    bg.base = spec.base;
    bg.bag_sizes = spec.bag_sizes;
    bg.bag_start.reserve(spec.bag_sizes.size());
    std::vector<Edge> edges;
    int next = spec.base.n;
    for (std::size_t i = 0; i < spec.base.edges.size(); ++i) {
        const Edge& e = spec.base.edges[i];
        bg.bag_start.push_back(next);
        for (int k = 0; k < spec.bag_sizes[i]; ++k) {
            edges.push_back(make_edge(e.first, next));
            edges.push_back(make_edge(e.second, next));
            ++next;
        }
    }
    bg.graph = SmallGraph(static_cast<int>(total), edges);
    return bg;
}

std::uint64_t count_long_cycles(const BlowupGraph& bg, int m) {
    if (m < 3) throw std::invalid_argument("count_long_cycles: need m >= 3");
    if (2 * m > bg.graph.n)
        throw std::invalid_argument("count_long_cycles: cycle length exceeds vertex count");
    return count_cycles(bg.graph, 2 * m);
}

template <class S>
LeadingTermResult<S> leading_term_check(const EdgeMass<S>& mu, int m, int n_total) {
    if (n_total < 0) throw std::invalid_argument("leading_term_check: negative vertex budget");
    S beta_value = beta(mu, m); // validates m

    // Compact the support onto vertices 0..k-1; the relabeling is monotone,
    // so bag order matches both mu.weights and the compacted edge list.
    std::vector<int> label(mu.n, -1);
    MassStats<S> st = stats(mu);
    int k = 0;
    for (int v = 0; v < mu.n; ++v)
        if (st.weighted_degree[v] > S(0)) label[v] = k++;
    BlowupSpec spec;
    std::vector<Edge> base_edges;
    base_edges.reserve(mu.weights.size());
    LeadingTermResult<S> res;
    for (const auto& [e, p] : mu.weights) {
        base_edges.push_back(make_edge(label[e.first], label[e.second]));
        int bag;
        if constexpr (scalar_traits<S>::exact)
            bag = round_half_even(p * n_total).template convert_to<int>();
        else
            bag = static_cast<int>(std::nearbyint(p * n_total));
        res.realized_bags.push_back(bag);
        res.realized_n += bag;
    }
    spec.base = SmallGraph(k, base_edges);
    spec.bag_sizes = res.realized_bags;
    res.graph = build_blowup(spec);
    res.count = 2 * m <= res.graph.graph.n ? count_long_cycles(res.graph, m) : 0;
    res.projection = beta_value;
    if constexpr (scalar_traits<S>::exact)
        res.projection *= rational_pow(Rational(res.realized_n), m);
    else
        res.projection *= std::pow(static_cast<double>(res.realized_n), m);
    if (res.projection > S(0)) {
        res.ratio = scalar_traits<S>::from_int(static_cast<long>(res.count)) / res.projection;
        res.ratio_defined = true;
    } else {
        res.ratio = S(0);
        res.ratio_defined = false;
    }
    return res;
}

template LeadingTermResult<Rational> leading_term_check(const ExactMass&, int, int);
template LeadingTermResult<double> leading_term_check(const FloatMass&, int, int);

BlowupSpec read_blowup_spec(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    bool have_base = false;
    BlowupSpec spec;
    std::vector<int> sizes;
    std::vector<bool> seen;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokens(line);
        if (t.empty()) continue;
        if (!have_base) {
            if (t.size() != 1)
                throw parse_error("expected a graph6 line for the base", lineno, true);
            try {
                spec.base = parse_graph6(t[0]);
            } catch (const parse_error& e) {
                throw parse_error(std::string("bad base graph: ") + e.what(), lineno, true);
            }
            sizes.assign(spec.base.edges.size(), 0);
            seen.assign(spec.base.edges.size(), false);
            have_base = true;
            continue;
        }
        if (t.size() != 3)
            throw parse_error("expected bag line 'u v size'", lineno, true);
        int u = parse_int(t[0], lineno, "vertex index");
        int v = parse_int(t[1], lineno, "vertex index");
        int s = parse_int(t[2], lineno, "bag size");
        Edge e = make_edge(u, v);
        auto it = std::find(spec.base.edges.begin(), spec.base.edges.end(), e);
        if (it == spec.base.edges.end())
            throw data_error("bag line names a non-edge " + std::to_string(u) + "-" +
                             std::to_string(v));
        std::size_t idx = static_cast<std::size_t>(it - spec.base.edges.begin());
        if (seen[idx])
            throw data_error("duplicate bag line for edge " + std::to_string(e.first) + "-" +
                             std::to_string(e.second));
        if (s < 0) throw data_error("negative bag size on edge " + std::to_string(e.first) +
                                    "-" + std::to_string(e.second));
        seen[idx] = true;
        sizes[idx] = s;
    }
    if (!have_base) throw parse_error("missing base graph line", lineno == 0 ? 1 : lineno, true);
    for (std::size_t i = 0; i < seen.size(); ++i)
        if (!seen[i])
            throw data_error("missing bag line for edge " +
                             std::to_string(spec.base.edges[i].first) + "-" +
                             std::to_string(spec.base.edges[i].second));
    long total = spec.base.n + std::accumulate(sizes.begin(), sizes.end(), 0L);
    if (total > max_vertices)
        throw data_error("blow-up exceeds the 32-vertex cap");
    spec.bag_sizes = std::move(sizes);
    return spec;
}

BlowupSpec read_blowup_spec_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open blow-up spec " + path, 0, true);
    return read_blowup_spec(in);
}

void write_blowup_spec(std::ostream& out, const BlowupSpec& spec) {
    out << to_graph6(spec.base) << "\n";
    for (std::size_t i = 0; i < spec.base.edges.size(); ++i)
        out << spec.base.edges[i].first << " " << spec.base.edges[i].second << " "
            << spec.bag_sizes[i] << "\n";
}

} // namespace cyclemass
