#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "cyclemass/canonical.hpp"
#include "cyclemass/cycles.hpp"
#include "cyclemass/errors.hpp"
#include "cyclemass/generate.hpp"
#include "cyclemass/rng.hpp"
#include "cyclemass/small_graph.hpp"

using namespace cyclemass;

namespace {

SmallGraph prism_graph() { return cartesian_product(cycle_graph(3), complete_graph(2)); }

SmallGraph path_graph(int n) {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return SmallGraph(n, edges);
}

std::vector<int> random_permutation(int n, std::uint64_t key) {
    CounterRng rng(key);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.bits(i) % static_cast<std::uint64_t>(i + 1)]);
    return perm;
}

} // namespace

TEST_CASE("graph construction and validation") {
    SmallGraph c5 = cycle_graph(5);
    CHECK(c5.n == 5);
    CHECK(c5.edge_count() == 5);
    CHECK(c5.has_edge(0, 1));
    CHECK(c5.has_edge(4, 0));
    CHECK_FALSE(c5.has_edge(0, 2));
    for (int v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    CHECK(c5.edges == std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});

    CHECK(complete_graph(4).edge_count() == 6);
    CHECK(complete_graph(0).n == 0);

    SmallGraph k33 = complete_bipartite(3, 3);
    CHECK(k33.edge_count() == 9);
    CHECK(k33.has_edge(0, 3));
    CHECK_FALSE(k33.has_edge(0, 1));
    CHECK_FALSE(k33.has_edge(3, 4));

    SmallGraph prism = prism_graph();
    CHECK(prism.n == 6);
    CHECK(prism.edge_count() == 9);
    for (int v = 0; v < 6; ++v) CHECK(prism.degree(v) == 3);

    CHECK_THROWS_AS(SmallGraph(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph(2, {{-1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(SmallGraph(33, {}), std::invalid_argument);
    CHECK_THROWS_AS(cycle_graph(2), std::invalid_argument);

    // Orientation of the input pairs is irrelevant.
    SmallGraph g(3, {{2, 0}, {1, 0}});
    CHECK(g.edges == std::vector<Edge>{{0, 1}, {0, 2}});
}

TEST_CASE("permutation and connectivity") {
    SmallGraph c6 = cycle_graph(6);
    std::vector<int> rot{1, 2, 3, 4, 5, 0};
    SmallGraph r = permuted(c6, rot);
    CHECK(r == c6);

    CHECK(is_connected(cycle_graph(5)));
    CHECK(is_connected(SmallGraph(1, {})));
    CHECK(is_connected(SmallGraph(0, {})));
    CHECK_FALSE(is_connected(SmallGraph(2, {})));
    CHECK_FALSE(is_connected(SmallGraph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}})));
    CHECK(is_connected(path_graph(8)));

    // Full 32-vertex graphs exercise the bitset boundary.
    CHECK(is_connected(cycle_graph(32)));
    CHECK_FALSE(is_connected(SmallGraph(32, {{0, 1}})));
}

TEST_CASE("graph6 encoding of the standard graphs") {
    CHECK(to_graph6(cycle_graph(5)) == "Dhc");
    CHECK(to_graph6(cycle_graph(6)) == "EhEG");
    CHECK(to_graph6(cycle_graph(10)) == "IhCGGC@_G");
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(to_graph6(complete_graph(6)) == "E~~w");
    CHECK(to_graph6(complete_bipartite(3, 3)) == "EFz_");
    CHECK(to_graph6(prism_graph()) == "ErhW");
    CHECK(to_graph6(path_graph(4)) == "Ch");
    CHECK(to_graph6(complete_bipartite(1, 3)) == "Cs");
    CHECK(to_graph6(SmallGraph(1, {})) == "@");
    CHECK(to_graph6(SmallGraph(0, {})) == "?");
}

TEST_CASE("graph6 parsing round trip and strictness") {
    for (const char* key : {"Dhc", "EhEG", "C~", "D~{", "E~~w", "EFz_", "ErhW", "Ch",
                            "Cs", "@", "?", "IhCGGC@_G"}) {
        SmallGraph g = parse_graph6(key);
        CHECK(to_graph6(g) == key);
    }
    CHECK(parse_graph6("Dhc") == cycle_graph(5));
    CHECK(parse_graph6("EFz_") == complete_bipartite(3, 3));

    CHECK_THROWS_AS(parse_graph6(""), parse_error);
    CHECK_THROWS_AS(parse_graph6("~??"), parse_error);  // extended size prefix
    CHECK_THROWS_AS(parse_graph6(">"), parse_error);    // size char below '?'
    CHECK_THROWS_AS(parse_graph6("a"), parse_error);    // 34 vertices, over the cap

    try {
        parse_graph6("Dh"); // truncated body
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
        CHECK_FALSE(e.line_based());
    }
    try {
        parse_graph6("Dhcc"); // trailing byte
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 3);
    }
    try {
        parse_graph6("Dhd"); // nonzero padding bit
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 2);
    }
    try {
        parse_graph6(std::string("D") + char(20) + "c"); // body char out of range
        FAIL("expected parse_error");
    } catch (const parse_error& e) {
        CHECK(e.offset() == 1);
    }
}

TEST_CASE("cycle enumeration on the reference graphs") {
    CycleSet one = enumerate_cycles(cycle_graph(5), 5);
    REQUIRE(one.size() == 1);
    CHECK(one.cycles[0].verts == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(one.cycles[0].edge_list() ==
          std::vector<Edge>{{0, 1}, {0, 4}, {1, 2}, {2, 3}, {3, 4}});
    CHECK(one.cycles[0].contains_vertex(3));
    CHECK(one.cycles[0].contains_edge({4, 0}));
    CHECK_FALSE(one.cycles[0].contains_edge({0, 2}));

    CycleSet k4 = enumerate_cycles(complete_graph(4), 3);
    REQUIRE(k4.size() == 4);
    CHECK(k4.cycles[0].verts == std::vector<int>{0, 1, 2});
    CHECK(k4.cycles[1].verts == std::vector<int>{0, 1, 3});
    CHECK(k4.cycles[2].verts == std::vector<int>{0, 2, 3});
    CHECK(k4.cycles[3].verts == std::vector<int>{1, 2, 3});

    CHECK(count_cycles(complete_graph(5), 3) == 10);
    CHECK(count_cycles(complete_graph(5), 4) == 15);
    CHECK(count_cycles(complete_graph(5), 5) == 12);
    CHECK(count_cycles(complete_graph(6), 6) == 60);
    CHECK(count_cycles(complete_bipartite(3, 3), 6) == 6);
    CHECK(count_cycles(complete_bipartite(3, 3), 5) == 0);
    CHECK(count_cycles(prism_graph(), 6) == 3);
    CHECK(count_cycles(cycle_graph(6), 6) == 1);
    CHECK(count_cycles(path_graph(5), 3) == 0);

    // K_n holds n!/(2m(n-m)!) copies of C_m.
    const std::uint64_t k8[] = {56, 210, 672, 1680, 2880, 2520};
    for (int m = 3; m <= 8; ++m)
        CHECK(count_cycles(complete_graph(8), m) == k8[m - 3]);

    CHECK_THROWS_AS(enumerate_cycles(complete_graph(4), 2), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_cycles(complete_graph(4), 5), std::invalid_argument);
}

TEST_CASE("cycle copies appear once, canonically, in lexicographic order") {
    for (int m = 3; m <= 6; ++m) {
        CycleSet cs = enumerate_cycles(complete_graph(6), m);
        CHECK(cs.size() == count_cycles(complete_graph(6), m));
        std::set<std::vector<Edge>> edge_sets;
        std::vector<std::vector<int>> paths;
        for (const CycleCopy& c : cs.cycles) {
            REQUIRE(c.length() == m);
            CHECK(c.verts[0] == *std::min_element(c.verts.begin(), c.verts.end()));
            CHECK(c.verts[1] < c.verts[m - 1]);
            edge_sets.insert(c.edge_list());
            paths.push_back(c.verts);
        }
        CHECK(edge_sets.size() == cs.size()); // no duplicate subgraphs
        CHECK(std::is_sorted(paths.begin(), paths.end()));
    }
}

TEST_CASE("canonical form: frozen keys and invariance") {
    CHECK(canonical_form(cycle_graph(3)) == "Bw");
    CHECK(canonical_form(cycle_graph(5)) == "DLo");
    CHECK(canonical_form(cycle_graph(6)) == "EBj?");
    CHECK(canonical_form(cycle_graph(7)) == "F@Ue?");
    CHECK(canonical_form(cycle_graph(10)) == "I??XQa_o?");
    CHECK(canonical_form(complete_graph(5)) == "D~{");
    CHECK(canonical_form(complete_graph(6)) == "E~~w");
    CHECK(canonical_form(complete_bipartite(3, 3)) == "EFz_");
    CHECK(canonical_form(prism_graph()) == "ELv_");

    // The C6 class must sort ahead of every denser 6-vertex class.
    CHECK(canonical_form(cycle_graph(6)) < canonical_form(complete_bipartite(3, 3)));
    CHECK(canonical_form(complete_bipartite(3, 3)) < canonical_form(prism_graph()));
    CHECK(canonical_form(prism_graph()) < canonical_form(complete_graph(6)));

    for (const SmallGraph& g :
         {cycle_graph(6), complete_bipartite(3, 3), prism_graph(), cycle_graph(7)}) {
        std::string key = canonical_form(g);
        for (int trial = 0; trial < 100; ++trial) {
            SmallGraph p = permuted(g, random_permutation(g.n, 1000 * g.n + trial));
            CHECK(canonical_form(p) == key);
        }
        SmallGraph rep = canonical_representative(g);
        CHECK(to_graph6(rep) == key);
        CHECK(canonical_form(rep) == key);
        CHECK(are_isomorphic(g, rep));
    }

    CHECK_FALSE(are_isomorphic(complete_bipartite(3, 3), prism_graph()));
    CHECK_FALSE(are_isomorphic(cycle_graph(5), cycle_graph(6)));
    CHECK(are_isomorphic(SmallGraph(0, {}), SmallGraph(0, {})));
    CHECK_THROWS_AS(canonical_form(complete_graph(11)), std::invalid_argument);
}

TEST_CASE("graph enumeration counts per vertex count") {
    const std::size_t totals[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) {
        std::vector<SmallGraph> all = enumerate_graphs(n);
        CHECK(all.size() == totals[n - 1]);
    }
    CHECK(enumerate_graphs(0).empty());
    CHECK(enumerate_graphs(8).size() == 12346);
    CHECK_THROWS_AS(enumerate_graphs(9), std::invalid_argument);
    CHECK_THROWS_AS(enumerate_graphs(4, GraphFilter{}, 0), std::invalid_argument);
}

TEST_CASE("graph enumeration with filters") {
    std::vector<SmallGraph> k3 = enumerate_graphs(3, 2, true);
    REQUIRE(k3.size() == 1);
    CHECK(to_graph6(k3[0]) == canonical_form(complete_graph(3)));

    CHECK(enumerate_graphs(4, 2, true).size() == 3);

    std::vector<SmallGraph> five = enumerate_graphs(5, 2, true);
    REQUIRE(five.size() == 11);
    std::vector<int> edge_counts;
    int with_c5 = 0;
    for (const SmallGraph& g : five) {
        edge_counts.push_back(g.edge_count());
        if (count_cycles(g, 5) > 0) ++with_c5;
    }
    CHECK(edge_counts == std::vector<int>{5, 6, 6, 6, 7, 7, 7, 8, 8, 9, 10});
    CHECK(with_c5 == 8);

    std::vector<SmallGraph> six = enumerate_graphs(6, 2, true);
    CHECK(six.size() == 61);
    int with_c6 = 0;
    for (const SmallGraph& g : six)
        if (count_cycles(g, 6) > 0) ++with_c6;
    CHECK(with_c6 == 48);

    std::vector<SmallGraph> cubic = enumerate_graphs(6, GraphFilter{3, true, 3});
    REQUIRE(cubic.size() == 2);
    CHECK(to_graph6(cubic[0]) == canonical_form(complete_bipartite(3, 3)));
    CHECK(to_graph6(cubic[1]) == canonical_form(prism_graph()));

    // Representatives are canonical and ordered by (edge count, key).
    for (std::size_t i = 0; i < six.size(); ++i) {
        CHECK(to_graph6(six[i]) == canonical_form(six[i]));
        if (i > 0) {
            bool ordered =
                six[i - 1].edge_count() < six[i].edge_count() ||
                (six[i - 1].edge_count() == six[i].edge_count() &&
                 to_graph6(six[i - 1]) < to_graph6(six[i]));
            CHECK(ordered);
        }
    }
}

TEST_CASE("enumeration methods agree and are thread-count invariant") {
    for (int n : {5, 6}) {
        for (GraphFilter f : {GraphFilter{}, GraphFilter{2, true, {}}}) {
            std::vector<SmallGraph> a = detail::enumerate_graphs_subsets(n, f, 1);
            std::vector<SmallGraph> b = detail::enumerate_graphs_extension(n, f, 1);
            REQUIRE(a.size() == b.size());
            for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
        }
    }
    for (int threads : {2, 4, 7}) {
        std::vector<SmallGraph> a = enumerate_graphs(6, 2, true, 1);
        std::vector<SmallGraph> b = enumerate_graphs(6, 2, true, threads);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i] == b[i]);
    }
}
