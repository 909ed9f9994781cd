#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cyclemass/blowup.hpp"
#include "cyclemass/bounds.hpp"
#include "cyclemass/generate.hpp"
#include "cyclemass/mass_io.hpp"
#include "cyclemass/monte_carlo.hpp"
#include "cyclemass/optimizer.hpp"
#include "cyclemass/report.hpp"

namespace {

using namespace cyclemass;

nlohmann::json rational_json(const Rational& r) {
    return {{"fraction", fraction_string(r)},
            {"value", std::strtod(format_double(to_double(r)).c_str(), nullptr)}};
}

void write_json(const std::string& path, const nlohmann::json& j) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("cannot open output path " + path);
    out << j.dump(2) << "\n";
}

void require_m(int m) {
    if (m < 3) throw std::invalid_argument("m must be at least 3");
}

int run_beta(const std::string& mass_path, int m, const std::string& out_path) {
    require_m(m);
    ExactMass mu = read_mass_file(mass_path);
    Rational b = beta(mu, m);
    std::cout << "beta " << fraction_string(b) << " " << format_double(to_double(b)) << "\n";
    if (!out_path.empty())
        write_json(out_path, {{"m", m}, {"beta", rational_json(b)}, {"mass", mass_to_json(mu)}});
    return 0;
}

int run_search(int m, int n_min, int n_max, const AscentConfig& cfg, int threads,
               const std::string& out_path) {
    require_m(m);
    if (n_max > 8) throw std::invalid_argument("n-max beyond 8 is not supported");
    if (n_min > n_max) throw std::invalid_argument("n-min exceeds n-max");
    std::vector<int> range;
    for (int n = n_min; n <= n_max; ++n) range.push_back(n);
    SearchReport rep = search_opt(m, range, cfg, threads);
    std::cout << to_text(rep);
    if (!out_path.empty()) write_json(out_path, to_json(rep));
    return 0;
}

int run_verify(int m, const std::string& out_path) {
    BoundReport rep = run_bound_suite(m);
    std::cout << to_text(rep);
    if (!out_path.empty()) write_json(out_path, to_json(rep));
    if (!rep.all_pass) {
        for (const CheckResult& c : rep.checks)
            if (!c.pass) std::cerr << "failed check: " << c.name << "\n";
        return 1;
    }
    return 0;
}

int run_blowup(const std::string& spec_path, const std::string& mass_path, int n_total, int m,
               const std::string& out_path) {
    require_m(m);
    ExactMass mu;
    int n_proj = 0;
    if (!spec_path.empty()) {
        BlowupSpec spec = read_blowup_spec_file(spec_path);
        long total = 0;
        for (int s : spec.bag_sizes) total += s;
        if (total == 0) throw data_error("blow-up spec has only empty bags");
        std::vector<std::pair<Edge, Rational>> w;
        for (std::size_t i = 0; i < spec.base.edges.size(); ++i)
            w.emplace_back(spec.base.edges[i], Rational(spec.bag_sizes[i], total));
        mu = ExactMass(spec.base.n, std::move(w));
        n_proj = static_cast<int>(total);
    } else {
        if (n_total < 1) throw std::invalid_argument("--n must be at least 1");
        mu = read_mass_file(mass_path);
        n_proj = n_total;
    }
    LeadingTermResult<Rational> res = leading_term_check(mu, m, n_proj);
    std::cout << to_text(res);
    if (!out_path.empty()) write_json(out_path, to_json(res));
    return 0;
}

int run_mc(const std::string& mass_path, int m, std::uint64_t samples, std::uint64_t seed,
           int threads, const std::string& out_path) {
    require_m(m);
    if (samples < 1) throw std::invalid_argument("--samples must be at least 1");
    ExactMass mu = read_mass_file(mass_path);
    Rational target = beta(mu, m);
    for (int k = 2; k <= m; ++k) target *= k;
    McReport rep = monte_carlo_cycle_probability(to_float(mu), m, samples, seed, threads);
    double target_value = to_double(target);
    std::cout << to_text(rep, target_value);
    if (!out_path.empty()) {
        nlohmann::json j = to_json(rep, target_value);
        j["target_fraction"] = fraction_string(target);
        write_json(out_path, j);
    }
    return 0;
}

int run_gen(int n, int min_degree, bool connected, int regular, int threads,
            const std::string& out_path) {
    GraphFilter filter;
    filter.min_degree = min_degree;
    filter.connected = connected;
    if (regular >= 0) filter.regular = regular;
    std::vector<SmallGraph> graphs = enumerate_graphs(n, filter, threads);
    std::vector<std::string> keys;
    keys.reserve(graphs.size());
    for (const SmallGraph& g : graphs) {
        keys.push_back(to_graph6(g));
        std::cout << keys.back() << "\n";
    }
    if (!out_path.empty())
        write_json(out_path, {{"n", n}, {"count", keys.size()}, {"graphs", keys}});
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"cycle-formation mass toolkit: beta evaluation, support search, "
                 "inequality verification, blow-ups and Monte Carlo checks"};
    app.require_subcommand(1);

    int rc = 0;
    std::string mass_path, spec_path, out_path;
    int m = 5, n_min = 3, n_max = 5, n_total = 0;
    int threads = 1, min_degree = 0, regular = -1, gen_n = 0;
    bool connected = false, exact = false;
    AscentConfig cfg;
    std::uint64_t samples = 1000000, seed = cfg.seed;

    CLI::App* beta_cmd = app.add_subcommand("beta", "evaluate beta(mu; m) for a mass file");
    beta_cmd->add_option("--mass", mass_path, "edge mass file")->required();
    beta_cmd->add_option("--m", m, "cycle length")->required();
    beta_cmd->add_flag("--exact", exact, "exact arithmetic (always on; kept for symmetry)");
    beta_cmd->add_option("--out", out_path, "write a JSON report here");
    beta_cmd->callback([&] { rc = run_beta(mass_path, m, out_path); });

    CLI::App* search_cmd =
        app.add_subcommand("search", "optimize over connected candidate supports");
    search_cmd->add_option("--m", m, "cycle length")->required();
    search_cmd->add_option("--n-max", n_max, "largest vertex count (at most 8)")->required();
    search_cmd->add_option("--n-min", n_min, "smallest vertex count");
    search_cmd->add_option("--restarts", cfg.restarts, "random restarts per candidate");
    search_cmd->add_option("--tol", cfg.tolerance, "ascent convergence tolerance");
    search_cmd->add_option("--seed", cfg.seed, "run seed");
    search_cmd->add_option("--threads", threads, "worker threads");
    search_cmd->add_option("--out", out_path, "write a JSON report here");
    search_cmd->callback([&] { rc = run_search(m, n_min, n_max, cfg, threads, out_path); });

    CLI::App* verify_cmd =
        app.add_subcommand("verify", "run the inequality suite (full for m in {5,6})");
    verify_cmd->add_option("--m", m, "cycle length")->required();
    verify_cmd->add_flag("--exact", exact, "exact arithmetic (always on; kept for symmetry)");
    verify_cmd->add_option("--out", out_path, "write a JSON report here");
    verify_cmd->callback([&] { rc = run_verify(m, out_path); });

    CLI::App* blowup_cmd =
        app.add_subcommand("blowup", "build an edge blow-up and compare the C_{2m} count "
                                     "against beta * n^m");
    blowup_cmd->add_option("--spec", spec_path, "blow-up spec file (base graph6 + bag sizes)");
    blowup_cmd->add_option("--mass", mass_path, "edge mass file (bags round mu(e) * n)");
    blowup_cmd->add_option("--n", n_total, "total bag vertex budget for --mass mode");
    blowup_cmd->add_option("--m", m, "base cycle length")->required();
    blowup_cmd->add_option("--out", out_path, "write a JSON report here");
    blowup_cmd->callback([&] {
        if (spec_path.empty() == mass_path.empty())
            throw CLI::ValidationError("blowup", "pass exactly one of --spec or --mass");
        rc = run_blowup(spec_path, mass_path, n_total, m, out_path);
    });

    CLI::App* mc_cmd = app.add_subcommand("mc", "Monte Carlo estimate of the probability that "
                                                "m sampled edges form an m-cycle");
    mc_cmd->add_option("--mass", mass_path, "edge mass file")->required();
    mc_cmd->add_option("--m", m, "cycle length")->required();
    mc_cmd->add_option("--samples", samples, "sample count");
    mc_cmd->add_option("--seed", seed, "sampling seed");
    mc_cmd->add_option("--threads", threads, "worker threads");
    mc_cmd->add_option("--out", out_path, "write a JSON report here");
    mc_cmd->callback([&] { rc = run_mc(mass_path, m, samples, seed, threads, out_path); });

    CLI::App* gen_cmd =
        app.add_subcommand("gen", "enumerate unlabeled graphs (one graph6 key per line)");
    gen_cmd->add_option("--n", gen_n, "vertex count (at most 8)")->required();
    gen_cmd->add_option("--min-degree", min_degree, "minimum degree filter");
    gen_cmd->add_flag("--connected", connected, "connected graphs only");
    gen_cmd->add_option("--regular", regular, "exact regularity filter");
    gen_cmd->add_option("--threads", threads, "worker threads");
    gen_cmd->add_option("--out", out_path, "write a JSON report here");
    gen_cmd->callback(
        [&] { rc = run_gen(gen_n, min_degree, connected, regular, threads, out_path); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const data_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}
