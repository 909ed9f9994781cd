#include "cyclemass/report.hpp"

#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace cyclemass {

namespace {

// Rounding through the printed form keeps JSON numbers and text output in
// agreement at 12 significant digits.
double json_double(double v) { return std::strtod(format_double(v).c_str(), nullptr); }

nlohmann::json rational_json(const Rational& r) {
    return {{"fraction", fraction_string(r)}, {"value", json_double(to_double(r))}};
}

const char* yesno(bool b) { return b ? "yes" : "no"; }

} // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

nlohmann::json mass_to_json(const FloatMass& mu) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [e, p] : mu.weights)
        edges.push_back({{"u", e.first}, {"v", e.second}, {"weight", json_double(p)}});
    return {{"n", mu.n}, {"edges", edges}};
}

nlohmann::json mass_to_json(const ExactMass& mu) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& [e, p] : mu.weights)
        edges.push_back({{"u", e.first}, {"v", e.second}, {"weight", fraction_string(p)},
                         {"value", json_double(to_double(p))}});
    return {{"n", mu.n}, {"edges", edges}};
}

nlohmann::json to_json(const AscentReport& r) {
    nlohmann::json edge_res = nlohmann::json::array();
    for (const auto& [e, v] : r.edge_residuals)
        edge_res.push_back({{"u", e.first}, {"v", e.second}, {"residual", json_double(v)}});
    nlohmann::json vert_res = nlohmann::json::array();
    for (double v : r.vertex_residuals) vert_res.push_back(json_double(v));
    return {{"beta", json_double(r.beta_value)},
            {"iterations", r.iterations},
            {"runs", r.runs},
            {"converged", r.converged},
            {"max_edge_residual", json_double(r.max_edge_residual)},
            {"max_vertex_residual", json_double(r.max_vertex_residual)},
            {"support", to_graph6(r.support)},
            {"mass", mass_to_json(r.mass)},
            {"edge_residuals", edge_res},
            {"vertex_residuals", vert_res}};
}

std::string to_text(const AscentReport& r) {
    std::ostringstream out;
    out << "beta " << format_double(r.beta_value) << "\n";
    out << "iterations " << r.iterations << "\n";
    out << "runs " << r.runs << "\n";
    out << "converged " << yesno(r.converged) << "\n";
    out << "max_edge_residual " << format_double(r.max_edge_residual) << "\n";
    out << "max_vertex_residual " << format_double(r.max_vertex_residual) << "\n";
    out << "support " << to_graph6(r.support) << "\n";
    for (const auto& [e, p] : r.mass.weights)
        out << "edge " << e.first << " " << e.second << " " << format_double(p) << "\n";
    return out.str();
}

nlohmann::json to_json(const SearchReport& r) {
    nlohmann::json table = nlohmann::json::array();
    for (const SearchRow& row : r.table) {
        nlohmann::json j = {{"graph6", row.graph6},
                            {"candidate", row.candidate},
                            {"has_result", row.has_result},
                            {"runs_attributed", row.runs_attributed}};
        if (row.has_result) {
            j["beta"] = json_double(row.beta_value);
            j["residual"] = json_double(row.residual);
            j["iterations"] = row.iterations;
            j["converged"] = row.converged;
        }
        table.push_back(std::move(j));
    }
    return {{"m", r.m},
            {"n_range", r.n_range},
            {"exploratory", r.exploratory},
            {"best", {{"graph6", r.best_graph6}, {"beta", json_double(r.best_beta)}}},
            {"best_mass", mass_to_json(r.best_mass)},
            {"unconverged_runs", r.unconverged_runs},
            {"table", table}};
}

std::string to_text(const SearchReport& r) {
    std::ostringstream out;
    out << "m " << r.m << "\n";
    out << "n_range";
    for (int n : r.n_range) out << " " << n;
    out << "\n";
    out << "exploratory " << yesno(r.exploratory) << "\n";
    out << "best " << r.best_graph6 << " " << format_double(r.best_beta) << "\n";
    out << "unconverged_runs " << r.unconverged_runs << "\n";
    for (const SearchRow& row : r.table) {
        out << "row " << row.graph6;
        if (row.has_result)
            out << " beta " << format_double(row.beta_value) << " residual "
                << format_double(row.residual) << " iterations " << row.iterations
                << " converged " << yesno(row.converged);
        else
            out << " beta none";
        out << " candidate " << yesno(row.candidate) << " runs " << row.runs_attributed
            << "\n";
    }
    return out.str();
}

namespace {

nlohmann::json bracket_json(const ThresholdBracket& b) {
    return {{"lo", rational_json(b.lo)}, {"hi", rational_json(b.hi)}};
}

} // namespace

nlohmann::json to_json(const BoundReport& r) {
    nlohmann::json checks = nlohmann::json::array();
    for (const CheckResult& c : r.checks)
        checks.push_back({{"name", c.name}, {"pass", c.pass}, {"witness", c.witness}});
    nlohmann::json j = {{"m", r.m},
                        {"suite", r.full_suite ? "full" : "partial"},
                        {"vert_threshold", bracket_json(r.vert)},
                        {"cap_exact", r.cap_exact},
                        {"cap_asymptotic", r.cap_asymptotic},
                        {"checks", checks},
                        {"all_pass", r.all_pass}};
    if (r.full_suite) j["edge_threshold"] = bracket_json(r.edge);
    return j;
}

std::string to_text(const BoundReport& r) {
    std::ostringstream out;
    out << "m " << r.m << "\n";
    out << "suite " << (r.full_suite ? "full" : "partial") << "\n";
    out << "vert_lo " << fraction_string(r.vert.lo) << " "
        << format_double(to_double(r.vert.lo)) << "\n";
    out << "vert_hi " << fraction_string(r.vert.hi) << " "
        << format_double(to_double(r.vert.hi)) << "\n";
    out << "cap_exact " << r.cap_exact << "\n";
    out << "cap_asymptotic " << r.cap_asymptotic << "\n";
    if (r.full_suite) {
        out << "edge_lo " << fraction_string(r.edge.lo) << " "
            << format_double(to_double(r.edge.lo)) << "\n";
        out << "edge_hi " << fraction_string(r.edge.hi) << " "
            << format_double(to_double(r.edge.hi)) << "\n";
    }
    for (const CheckResult& c : r.checks)
        out << (c.pass ? "pass " : "fail ") << c.name << " [" << c.witness << "]\n";
    out << "all_pass " << yesno(r.all_pass) << "\n";
    return out.str();
}

nlohmann::json to_json(const McReport& r, double target) {
    nlohmann::json j = {{"m", r.m},
                        {"samples", r.samples},
                        {"seed", r.seed},
                        {"successes", r.successes},
                        {"estimate", json_double(r.estimate)},
                        {"std_error", json_double(r.std_error)},
                        {"target", json_double(target)}};
    if (r.std_error > 0)
        j["z_score"] = json_double((r.estimate - target) / r.std_error);
    else
        j["z_score"] = nullptr;
    return j;
}

std::string to_text(const McReport& r, double target) {
    std::ostringstream out;
    out << "m " << r.m << "\n";
    out << "samples " << r.samples << "\n";
    out << "seed " << r.seed << "\n";
    out << "successes " << r.successes << "\n";
    out << "estimate " << format_double(r.estimate) << "\n";
    out << "std_error " << format_double(r.std_error) << "\n";
    out << "target " << format_double(target) << "\n";
    if (r.std_error > 0)
        out << "z_score " << format_double((r.estimate - target) / r.std_error) << "\n";
    else
        out << "z_score undefined\n";
    return out.str();
}

nlohmann::json to_json(const LeadingTermResult<Rational>& r) {
    nlohmann::json j = {{"base", to_graph6(r.graph.base)},
                        {"blowup", to_graph6(r.graph.graph)},
                        {"bags", r.realized_bags},
                        {"realized_n", r.realized_n},
                        {"count", r.count},
                        {"projection", rational_json(r.projection)}};
    if (r.ratio_defined)
        j["ratio"] = rational_json(r.ratio);
    else
        j["ratio"] = nullptr;
    return j;
}

std::string to_text(const LeadingTermResult<Rational>& r) {
    std::ostringstream out;
    out << "base " << to_graph6(r.graph.base) << "\n";
    out << "blowup " << to_graph6(r.graph.graph) << "\n";
    out << "bags";
    for (int b : r.realized_bags) out << " " << b;
    out << "\n";
    out << "realized_n " << r.realized_n << "\n";
    out << "count " << r.count << "\n";
    out << "projection " << fraction_string(r.projection) << " "
        << format_double(to_double(r.projection)) << "\n";
    if (r.ratio_defined)
        out << "ratio " << fraction_string(r.ratio) << " "
            << format_double(to_double(r.ratio)) << "\n";
    else
        out << "ratio undefined\n";
    return out.str();
}

} // namespace cyclemass
