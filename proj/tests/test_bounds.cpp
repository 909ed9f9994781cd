#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "cyclemass/bounds.hpp"
#include "cyclemass/canonical.hpp"
#include "cyclemass/edge_mass.hpp"

using namespace cyclemass;

TEST_CASE("vertbound evaluations") {
    CHECK(vertbound_holds(Rational(1, 3), 5));
    CHECK_FALSE(vertbound_holds(Rational(9, 10), 5));
    CHECK(vertbound_holds(Rational(2, 7), 6));
    CHECK(vertbound_holds(Rational(246, 1000), 7));
    CHECK_FALSE(vertbound_holds(Rational(247, 1000), 7));

    // z = 2/(m+1) lies inside the holding region only up to m = 6: the
    // optimum-support argument genuinely needs the m <= 6 hypothesis.
    CHECK(vertbound_holds(Rational(2, 6), 5));
    CHECK(vertbound_holds(Rational(2, 7), 6));
    CHECK_FALSE(vertbound_holds(Rational(2, 8), 7));

    CHECK_THROWS_AS(vertbound_holds(Rational(0), 5), std::invalid_argument);
    CHECK_THROWS_AS(vertbound_holds(Rational(1), 5), std::invalid_argument);
    CHECK_THROWS_AS(vertbound_holds(Rational(1, 2), 0), std::invalid_argument);
}

TEST_CASE("vertex threshold brackets") {
    ThresholdBracket b5 = vert_threshold(5);
    CHECK(vertbound_holds(b5.lo, 5));
    CHECK_FALSE(vertbound_holds(b5.hi, 5));
    CHECK(b5.hi - b5.lo <= Rational(1, 1000000));
    CHECK(b5.lo > Rational(3555270, 10000000));
    CHECK(b5.hi < Rational(3555310, 10000000));

    ThresholdBracket b6 = vert_threshold(6);
    CHECK(b6.lo > Rational(2909870, 10000000));
    CHECK(b6.hi < Rational(2909910, 10000000));

    ThresholdBracket b7 = vert_threshold(7);
    CHECK(b7.lo > Rational(246, 1000));
    CHECK(b7.hi < Rational(247, 1000));

    CHECK(vert_threshold(20).lo > Rational(1593, 20000));

    // Tighter precision nests inside the coarse bracket.
    ThresholdBracket fine = vert_threshold(5, Rational(1, BigInt(10000000000)));
    CHECK(fine.lo >= b5.lo);
    CHECK(fine.hi <= b5.hi);
    CHECK(fine.hi - fine.lo <= Rational(1, BigInt(10000000000)));

    CHECK_THROWS_AS(vert_threshold(2), std::invalid_argument);
    CHECK_THROWS_AS(vert_threshold(5, Rational(0)), std::invalid_argument);
}

TEST_CASE("support size caps") {
    CHECK(support_size_caps(5) == std::pair<int, int>{5, 6});
    CHECK(support_size_caps(6) == std::pair<int, int>{6, 7});
    CHECK(support_size_caps(7) == std::pair<int, int>{8, 8});
    CHECK(support_size_caps(100) == std::pair<int, int>{124, 125});
}

TEST_CASE("the edge function f in exact arithmetic") {
    CHECK(f(Rational(0), 5) == 1);
    CHECK(f(Rational(0), 6) == 1);
    CHECK(f(Rational(0), 9) == 1);
    CHECK(f(Rational(2, 3), 5) == Rational(81, 80));
    CHECK(f(Rational(1, 2), 5) == Rational(256, 243));
    CHECK(f(Rational(7, 10), 5) == Rational(480000, 485537));
    CHECK(f(Rational(7, 10), 5) < 1);
    CHECK(f(Rational(6, 11), 6) == Rational(805255, 802816));
    CHECK(f(Rational(2, 5), 6) == Rational(3125, 3072));

    CHECK_THROWS_AS(f(Rational(1), 5), std::invalid_argument);
    CHECK_THROWS_AS(f(Rational(-1, 10), 5), std::invalid_argument);
    CHECK_THROWS_AS(f(Rational(1, 2), 4), std::invalid_argument);
}

TEST_CASE("derivative sign and unimodality of f") {
    CHECK(f_sign_of_derivative(Rational(1, 10), 5) == 1);
    CHECK(f_sign_of_derivative(Rational(1, 2), 5) == 0);
    CHECK(f_sign_of_derivative(Rational(3, 4), 5) == -1);
    CHECK(f_sign_of_derivative(Rational(2, 5), 6) == 0);
    CHECK(f_sign_of_derivative(Rational(0), 6) == 0); // f'(0) = 0 endpoint

    for (int m : {5, 6}) {
        int prev = 1;
        for (int k = 1; k < 1000; ++k) {
            int s = f_sign_of_derivative(Rational(k, 1000), m);
            CHECK(s <= prev); // +1 ... 0 ... -1, never rising again
            prev = s;
        }
        Rational peak(2, m - 1);
        CHECK(f_sign_of_derivative(peak, m) == 0);
        CHECK(f(peak, m) > 1);
    }
}

TEST_CASE("edge threshold brackets") {
    ThresholdBracket e5 = edge_threshold(5);
    CHECK(f(e5.lo, 5) > 1);
    CHECK(f(e5.hi, 5) < 1);
    CHECK(e5.hi - e5.lo <= Rational(1, 1000000));
    CHECK(e5.lo > Rational(2, 3));
    CHECK(e5.hi < Rational(7, 10));
    CHECK(e5.lo > Rational(6854020, 10000000));
    CHECK(e5.hi < Rational(6854060, 10000000));

    ThresholdBracket e6 = edge_threshold(6);
    CHECK(f(e6.lo, 6) > 1);
    CHECK(f(e6.hi, 6) < 1);
    CHECK(e6.lo > Rational(6, 11));
    CHECK(e6.hi < Rational(14, 25));
    CHECK(e6.lo > Rational(5574870, 10000000));
    CHECK(e6.hi < Rational(5574910, 10000000));

    ThresholdBracket tight = edge_threshold(5, Rational(1, BigInt(10000000000)));
    CHECK(tight.lo >= e5.lo);
    CHECK(tight.hi <= e5.hi);

    CHECK_THROWS_AS(edge_threshold(4), std::invalid_argument);
    CHECK_THROWS_AS(edge_threshold(7), std::invalid_argument);
}

TEST_CASE("per-edge inequality on the reference masses") {
    // The uniform cycle sits exactly at z = 1, where the factor (1-z)
    // vanishes: the inequality holds with lhs = 0.
    ExactMass c5 = uniform_on_edges<Rational>(cycle_graph(5));
    auto res = check_edge_inequality(c5, 5);
    REQUIRE(res.size() == 5);
    for (std::size_t i = 0; i < res.size(); ++i) {
        CHECK(res[i].e == c5.weights[i].first);
        CHECK(res[i].lhs == 0);
        CHECK(res[i].pass);
    }

    // The uniform clique fails on every edge, certifying non-optimality.
    ExactMass k5 = uniform_on_edges<Rational>(complete_graph(5));
    for (const auto& r : check_edge_inequality(k5, 5)) {
        CHECK(r.lhs == Rational(256, 243));
        CHECK_FALSE(r.pass);
    }
    ExactMass k6 = uniform_on_edges<Rational>(complete_graph(6));
    for (const auto& r : check_edge_inequality(k6, 6)) {
        CHECK(r.lhs == Rational(3125, 3072));
        CHECK_FALSE(r.pass);
    }

    // Float path agrees with the exact values to high precision.
    auto fres = check_edge_inequality(to_float(k5), 5);
    for (const auto& r : fres) {
        CHECK(r.lhs == doctest::Approx(256.0 / 243).epsilon(1e-12));
        CHECK_FALSE(r.pass);
    }
    auto fcyc = check_edge_inequality(to_float(c5), 5);
    for (const auto& r : fcyc) {
        CHECK(r.lhs == doctest::Approx(0.0).epsilon(1e-12));
        CHECK(r.pass);
    }

    CHECK_THROWS_AS(check_edge_inequality(c5, 4), std::invalid_argument);
    ExactMass heavy(5, {{{0, 1}, Rational(2, 5)},
                        {{2, 3}, Rational(3, 10)},
                        {{2, 4}, Rational(3, 20)},
                        {{3, 4}, Rational(3, 20)}});
    CHECK_THROWS_AS(check_edge_inequality(heavy, 5), std::invalid_argument);
}

TEST_CASE("six-vertex case analysis") {
    C6CaseReport rep = verify_c6_case_analysis();
    CHECK(rep.all_pass);
    CHECK(rep.two_regular_classes);
    CHECK(rep.cycle_counts_ok);
    CHECK(rep.headline_bound_ok);
    CHECK(rep.cycle_mass_step_ok);

    std::set<std::string> keys(rep.class_keys.begin(), rep.class_keys.end());
    std::set<std::string> expect{
        canonical_form(complete_bipartite(3, 3)),
        canonical_form(cartesian_product(cycle_graph(3), complete_graph(2)))};
    CHECK(keys == expect);

    std::vector<long> counts = rep.cycle_counts;
    std::sort(counts.begin(), counts.end());
    CHECK(counts == std::vector<long>{3, 6});

    CHECK(rep.headline_value == Rational(1572864, 1771561));
    CHECK(rep.headline_value <= Rational(89, 100));
}

TEST_CASE("bound suites per m") {
    for (int m : {5, 6}) {
        BoundReport rep = run_bound_suite(m);
        CHECK(rep.m == m);
        CHECK(rep.full_suite);
        CHECK(rep.all_pass);
        CHECK(!rep.checks.empty());
        std::set<std::string> names;
        for (const CheckResult& c : rep.checks) {
            CHECK(c.pass);
            CHECK(!c.witness.empty());
            names.insert(c.name);
        }
        for (const char* required :
             {"vert threshold certified", "support caps ordered",
              "vertbound at z = 2/(m+1)", "f(0) = 1", "f' sign pattern +, 0, -",
              "f probe above 1", "edge threshold certified",
              "edge inequality on the uniform cycle",
              "edge inequality rejects the uniform clique"})
            CHECK(names.count(required) == 1);
        CHECK(names.count("six-vertex case analysis") == (m == 6 ? 1 : 0));
    }

    for (int m : {3, 4, 7}) {
        BoundReport rep = run_bound_suite(m);
        CHECK_FALSE(rep.full_suite);
        CHECK(rep.all_pass);
        CHECK(vertbound_holds(rep.vert.lo, m));
        CHECK(rep.cap_exact <= rep.cap_asymptotic);
    }

    CHECK_THROWS_AS(run_bound_suite(2), std::invalid_argument);
}
