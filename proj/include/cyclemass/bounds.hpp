#pragma once

#include <string>
#include <vector>

#include "cyclemass/edge_mass.hpp"
#include "cyclemass/rational.hpp"

namespace cyclemass {

class threshold_not_found : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exact comparison 1 - (m/2) z > (1-z)^m. Requires 0 < z < 1.
bool vertbound_holds(const Rational& z, int m);

/// A certified bracket around a threshold: the predicate of interest holds
/// at lo and fails at hi, with hi - lo <= the requested precision.
struct ThresholdBracket {
    Rational lo;
    Rational hi;
};

/// sup{z in (0,1) : vertbound_holds(z, m)}, as a certified bracket found by
/// a grid scan (verifying the region is a prefix of the grid) plus rational
/// bisection.
ThresholdBracket vert_threshold(int m, const Rational& precision = Rational(1, 1000000));

/// f(z) = (2/(2-z))^4 ((m-4)/(m-4+z))^(m-4) (1-z), exactly.
/// Requires 0 <= z < 1 and m >= 5.
Rational f(const Rational& z, int m);

/// Sign of f'(z), via sgn((1-m) z^2 + 2 z). Returns -1, 0 or +1.
int f_sign_of_derivative(const Rational& z, int m);

/// Root of f(z) = 1 in [2/(m-1), 1): certified bracket with f(lo) > 1 and
/// f(hi) < 1. Requires m in {5, 6}.
ThresholdBracket edge_threshold(int m, const Rational& precision = Rational(1, 1000000));

template <class S>
struct EdgeInequalityResult {
    Edge e;
    S lhs;      // (2/(2-m mu(e)))^4 ((m-4)/(m-4+m mu(e)))^(m-4) (1 - m mu(e))
    bool pass;  // lhs <= 1 (exact) or <= 1 + 1e-12 (float)
};

/// The per-edge inequality every optimal mass must satisfy; a failing edge
/// certifies non-optimality.
template <class S>
std::vector<EdgeInequalityResult<S>> check_edge_inequality(const EdgeMass<S>& mu, int m);

/// (cap_exact, cap_asymptotic) for |supp mu-bar|: the largest integer
/// strictly below 2 / vert_threshold(m).lo, and the largest integer
/// strictly below 1.256 m.
std::pair<int, int> support_size_caps(int m);

struct C6CaseReport {
    bool two_regular_classes = false;  // exactly {K_3,3, K_3 x K_2}
    bool cycle_counts_ok = false;      // C6 counts 6 and 3, both <= 6
    bool headline_bound_ok = false;    // 6 (8/11)^6 <= 89/100
    bool cycle_mass_step_ok = false;   // 3 missed edges: 1 - 3/11 = 8/11
    std::vector<std::string> class_keys;
    std::vector<long> cycle_counts;
    Rational headline_value;           // 6 (8/11)^6
    bool all_pass = false;
};

/// The complete 6-vertex case analysis behind the m=6 optimum, each step
/// in exact arithmetic.
C6CaseReport verify_c6_case_analysis();

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string witness; // exact values backing the verdict
};

struct BoundReport {
    int m = 0;
    bool full_suite = false; // m in {5,6}; otherwise the vertbound subset
    ThresholdBracket vert;
    ThresholdBracket edge;   // only when full_suite
    int cap_exact = 0;
    int cap_asymptotic = 0;
    std::vector<CheckResult> checks;
    bool all_pass = false;
};

/// Every closed-form inequality for the given m; the engine behind
/// `verify` in the CLI.
BoundReport run_bound_suite(int m, const Rational& precision = Rational(1, 1000000));

} // namespace cyclemass
