#include "cyclemass/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "cyclemass/canonical.hpp"
#include "cyclemass/cycles.hpp"
#include "cyclemass/generate.hpp"

namespace cyclemass {

namespace {

// Certified bracket for the right edge of a prefix-shaped truth region on
// (0, 1): find a holding point and the first failing grid point, confirm
// the grid truth set is a prefix, then bisect with rational midpoints.
template <class Pred>
ThresholdBracket bracket_prefix_region(Pred holds, const Rational& precision,
                                       const char* what) {
    const int grid = 64;
    int first_fail = -1;
    std::vector<bool> truth(grid, false);
    for (int k = 1; k < grid; ++k) {
        truth[k] = holds(Rational(k, grid));
        if (!truth[k] && first_fail < 0) first_fail = k;
    }
    Rational lo, hi;
    if (first_fail < 0) {
        throw threshold_not_found(std::string(what) + ": predicate holds on the whole grid");
    }
    for (int k = first_fail + 1; k < grid; ++k)
        if (truth[k])
            throw threshold_not_found(std::string(what) + ": truth region is not an interval");
    if (first_fail == 1) {
        // Threshold below 1/64: walk down until a holding point appears.
        hi = Rational(1, grid);
        Rational z = hi / 2;
        for (int step = 0; step < 40 && !holds(z); ++step) z /= 2;
        if (!holds(z)) throw threshold_not_found(std::string(what) + ": no holding point found");
        lo = z;
    } else {
        lo = Rational(first_fail - 1, grid);
        hi = Rational(first_fail, grid);
    }
    if (precision <= 0) throw std::invalid_argument("threshold precision must be positive");
    while (hi - lo > precision) {
        Rational mid = (lo + hi) / 2;
        (holds(mid) ? lo : hi) = mid;
    }
    return ThresholdBracket{lo, hi};
}

// Largest integer strictly below q.
int int_below(const Rational& q) {
    BigInt fl = rational_floor(q);
    if (Rational(fl) == q) --fl;
    return fl.convert_to<int>();
}

std::string format12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

} // namespace

bool vertbound_holds(const Rational& z, int m) {
    if (m < 1) throw std::invalid_argument("vertbound_holds: need m >= 1");
    if (z <= 0 || z >= 1) throw std::invalid_argument("vertbound_holds: need 0 < z < 1");
    Rational lhs = 1 - Rational(m, 2) * z;
    return lhs > rational_pow(1 - z, m);
}

ThresholdBracket vert_threshold(int m, const Rational& precision) {
    if (m < 3) throw std::invalid_argument("vert_threshold: need m >= 3");
    return bracket_prefix_region([m](const Rational& z) { return vertbound_holds(z, m); },
                                 precision, "vert_threshold");
}

Rational f(const Rational& z, int m) {
    if (m < 5) throw std::invalid_argument("f: need m >= 5");
    if (z < 0 || z >= 1) throw std::invalid_argument("f: need 0 <= z < 1");
    Rational a = rational_pow(Rational(2) / (2 - z), 4);
    Rational b = rational_pow(Rational(m - 4) / (m - 4 + z), m - 4);
    return a * b * (1 - z);
}

int f_sign_of_derivative(const Rational& z, int m) {
    if (m < 5) throw std::invalid_argument("f_sign_of_derivative: need m >= 5");
    if (z < 0 || z >= 1) throw std::invalid_argument("f_sign_of_derivative: need 0 <= z < 1");
    Rational s = Rational(1 - m) * z * z + 2 * z;
    return s > 0 ? 1 : s < 0 ? -1 : 0;
}

ThresholdBracket edge_threshold(int m, const Rational& precision) {
    if (m != 5 && m != 6) throw std::invalid_argument("edge_threshold: need m in {5, 6}");
    if (precision <= 0) throw std::invalid_argument("threshold precision must be positive");
    Rational lo(2, m - 1);
    if (f(lo, m) <= 1)
        throw threshold_not_found("edge_threshold: f <= 1 at the left endpoint");
    // f is strictly decreasing on [2/(m-1), 1), so the first grid point with
    // f <= 1 closes a valid bracket.
    Rational hi;
    bool found = false;
    const Rational base = lo;
    for (int k = 1; !found; ++k) {
        Rational z = base + Rational(k, 64);
        if (z >= 1) break;
        if (f(z, m) <= 1) {
            hi = z;
            found = true;
        } else {
            lo = z;
        }
    }
    if (!found) throw threshold_not_found("edge_threshold: f > 1 on the whole grid");
    while (hi - lo > precision) {
        Rational mid = (lo + hi) / 2;
        (f(mid, m) > 1 ? lo : hi) = mid;
    }
    return ThresholdBracket{lo, hi};
}

template <class S>
std::vector<EdgeInequalityResult<S>> check_edge_inequality(const EdgeMass<S>& mu, int m) {
    if (m < 5) throw std::invalid_argument("check_edge_inequality: need m >= 5");
    std::vector<EdgeInequalityResult<S>> out;
    out.reserve(mu.weights.size());
    for (const auto& [e, p] : mu.weights) {
        S z = scalar_traits<S>::from_int(m) * p;
        if (!(z < scalar_traits<S>::from_int(2)))
            throw std::invalid_argument("check_edge_inequality: needs m mu(e) < 2");
        S lhs;
        if constexpr (scalar_traits<S>::exact) {
            Rational a = rational_pow(Rational(2) / (2 - z), 4);
            Rational b = rational_pow(Rational(m - 4) / (m - 4 + z), m - 4);
            lhs = a * b * (1 - z);
        } else {
            double a = std::pow(2.0 / (2.0 - z), 4);
            double b = std::pow((m - 4.0) / (m - 4.0 + z), m - 4);
            lhs = a * b * (1.0 - z);
        }
        bool pass;
        if constexpr (scalar_traits<S>::exact)
            pass = lhs <= 1;
        else
            pass = lhs <= 1.0 + 1e-12;
        out.push_back(EdgeInequalityResult<S>{e, lhs, pass});
    }
    return out;
}

template std::vector<EdgeInequalityResult<Rational>> check_edge_inequality(const ExactMass&, int);
template std::vector<EdgeInequalityResult<double>> check_edge_inequality(const FloatMass&, int);

std::pair<int, int> support_size_caps(int m) {
    ThresholdBracket vert = vert_threshold(m);
    int exact = int_below(2 / vert.lo);
    int asym = int_below(Rational(1256 * static_cast<long>(m), 1000));
    return {exact, asym};
}

C6CaseReport verify_c6_case_analysis() {
    C6CaseReport rep;
    std::vector<SmallGraph> classes = enumerate_graphs(6, GraphFilter{3, true, 3});
    for (const SmallGraph& g : classes) rep.class_keys.push_back(to_graph6(g));
    std::string k33 = canonical_form(complete_bipartite(3, 3));
    std::string prism = canonical_form(cartesian_product(cycle_graph(3), complete_graph(2)));
    rep.two_regular_classes = rep.class_keys.size() == 2 &&
                              ((rep.class_keys[0] == k33 && rep.class_keys[1] == prism) ||
                               (rep.class_keys[0] == prism && rep.class_keys[1] == k33));

    rep.cycle_counts_ok = rep.two_regular_classes;
    rep.cycle_mass_step_ok = rep.two_regular_classes;
    for (const SmallGraph& g : classes) {
        CycleSet cs = enumerate_cycles(g, 6);
        rep.cycle_counts.push_back(static_cast<long>(cs.size()));
        if (cs.size() > 6) rep.cycle_counts_ok = false;
        for (const CycleCopy& c : cs.cycles) {
            int missed = 0;
            for (const Edge& e : g.edges)
                if (!c.contains_edge(e)) ++missed;
            if (missed != 3) rep.cycle_mass_step_ok = false;
        }
    }
    {
        std::vector<long> counts = rep.cycle_counts;
        std::sort(counts.begin(), counts.end());
        if (counts != std::vector<long>{3, 6}) rep.cycle_counts_ok = false;
    }
    if (Rational(1) - Rational(3, 11) != Rational(8, 11)) rep.cycle_mass_step_ok = false;

    rep.headline_value = 6 * rational_pow(Rational(8, 11), 6);
    rep.headline_bound_ok = rep.headline_value <= Rational(89, 100);
    rep.all_pass = rep.two_regular_classes && rep.cycle_counts_ok &&
                   rep.headline_bound_ok && rep.cycle_mass_step_ok;
    return rep;
}

BoundReport run_bound_suite(int m, const Rational& precision) {
    if (m < 3) throw std::invalid_argument("run_bound_suite: need m >= 3");
    BoundReport rep;
    rep.m = m;
    rep.full_suite = (m == 5 || m == 6);
    auto add = [&rep](std::string name, bool pass, std::string witness) {
        rep.checks.push_back(CheckResult{std::move(name), pass, std::move(witness)});
    };

    rep.vert = vert_threshold(m, precision);
    add("vert threshold certified",
        vertbound_holds(rep.vert.lo, m) && !vertbound_holds(rep.vert.hi, m) &&
            rep.vert.hi - rep.vert.lo <= precision,
        "lo=" + fraction_string(rep.vert.lo) + " hi=" + fraction_string(rep.vert.hi));

    auto caps = support_size_caps(m);
    rep.cap_exact = caps.first;
    rep.cap_asymptotic = caps.second;
    add("support caps ordered", rep.cap_exact <= rep.cap_asymptotic,
        "exact=" + std::to_string(rep.cap_exact) +
            " asymptotic=" + std::to_string(rep.cap_asymptotic));

    {
        double t_ok = 1.593, t_bad = 1.594;
        bool probe = (1 - t_ok / 2 > std::exp(-t_ok)) && !(1 - t_bad / 2 > std::exp(-t_bad));
        add("asymptotic probe 1 - t/2 > exp(-t)", probe,
            "holds at t=1.593 (" + format12(1 - t_ok / 2) + " vs " + format12(std::exp(-t_ok)) +
                "), fails at t=1.594");
    }

    if (rep.full_suite) {
        {
            Rational z(2, m + 1);
            add("vertbound at z = 2/(m+1)", vertbound_holds(z, m), "z=" + fraction_string(z));
        }
        {
            add("f(0) = 1", f(Rational(0), m) == 1, "f(0)=" + fraction_string(f(Rational(0), m)));
            Rational peak(2, m - 1);
            bool signs = f_sign_of_derivative(Rational(1, 10), m) == 1 &&
                         f_sign_of_derivative(peak, m) == 0 &&
                         f_sign_of_derivative((peak + 1) / 2, m) == -1;
            add("f' sign pattern +, 0, -", signs, "peak at z=" + fraction_string(peak));
        }
        {
            Rational z = m == 5 ? Rational(2, 3) : Rational(6, 11);
            Rational val = f(z, m);
            add("f probe above 1", val > 1,
                "f(" + fraction_string(z) + ")=" + fraction_string(val));
        }
        rep.edge = edge_threshold(m, precision);
        add("edge threshold certified",
            f(rep.edge.lo, m) > 1 && f(rep.edge.hi, m) < 1 &&
                rep.edge.hi - rep.edge.lo <= precision,
            "lo=" + fraction_string(rep.edge.lo) + " hi=" + fraction_string(rep.edge.hi));
        {
            auto res = check_edge_inequality(uniform_on_edges<Rational>(cycle_graph(m)), m);
            bool all = std::all_of(res.begin(), res.end(),
                                   [](const auto& r) { return r.pass; });
            add("edge inequality on the uniform cycle", all,
                "lhs=" + fraction_string(res.front().lhs));
        }
        {
            SmallGraph kn = complete_graph(m == 5 ? 5 : 6);
            auto res = check_edge_inequality(uniform_on_edges<Rational>(kn), m);
            bool any_fail = std::any_of(res.begin(), res.end(),
                                        [](const auto& r) { return !r.pass; });
            add("edge inequality rejects the uniform clique", any_fail,
                "lhs=" + fraction_string(res.front().lhs));
        }
        if (m == 6) {
            C6CaseReport c6 = verify_c6_case_analysis();
            add("six-vertex case analysis", c6.all_pass,
                "6*(8/11)^6=" + fraction_string(c6.headline_value));
        }
    }

    rep.all_pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                               [](const CheckResult& c) { return c.pass; });
    return rep;
}

} // namespace cyclemass
