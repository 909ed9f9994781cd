#include "cyclemass/mass_io.hpp"

#include <fstream>
#include <sstream>

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

ExactMass read_mass(std::istream& in) {
    std::string line;
    std::size_t lineno = 0;
    int n = -1;
    long declared = -1;
    std::vector<std::pair<Edge, Rational>> weights;
    while (std::getline(in, line)) {
        ++lineno;
        std::vector<std::string> t = tokens(line);
        if (t.empty()) continue;
        if (n < 0) {
            if (t.size() != 2)
                throw parse_error("expected header 'n m'", lineno, true);
            n = parse_int(t[0], lineno, "vertex count");
            declared = parse_int(t[1], lineno, "edge count");
            if (n < 0 || declared < 0)
                throw parse_error("negative header values", lineno, true);
            continue;
        }
        if (static_cast<long>(weights.size()) == declared)
            throw parse_error("more edge lines than the header declares", lineno, true);
        if (t.size() != 3)
            throw parse_error("expected edge line 'u v p'", lineno, true);
        int u = parse_int(t[0], lineno, "vertex index");
        int v = parse_int(t[1], lineno, "vertex index");
        Rational p;
        try {
            p = parse_rational(t[2]);
        } catch (const parse_error& e) {
            throw parse_error(std::string("bad weight: ") + e.what(), lineno, true);
        }
        weights.emplace_back(Edge{u, v}, p);
    }
    if (n < 0) throw parse_error("missing header line", lineno == 0 ? 1 : lineno, true);
    if (static_cast<long>(weights.size()) != declared)
        throw parse_error("fewer edge lines than the header declares", lineno, true);
    return ExactMass(n, std::move(weights)); // data invariants checked here
}

ExactMass read_mass_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw parse_error("cannot open mass file " + path, 0, true);
    return read_mass(in);
}

void write_mass(std::ostream& out, const ExactMass& mu) {
    out << mu.n << " " << mu.weights.size() << "\n";
    for (const auto& [e, p] : mu.weights)
        out << e.first << " " << e.second << " " << fraction_string(p) << "\n";
}

void write_mass_file(const std::string& path, const ExactMass& mu) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write mass file " + path);
    write_mass(out, mu);
    out.flush();
    if (!out) throw std::runtime_error("failed writing mass file " + path);
}

} // namespace cyclemass
