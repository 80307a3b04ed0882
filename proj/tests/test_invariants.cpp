#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "mishit/errors.hpp"
#include "mishit/invariants.hpp"
#include "oracles.hpp"

using namespace mishit;

namespace {

Graph c5() { return parse_graph6("Dhc"); }
Graph petersen() { return generate(GeneratorSpec::parse("kneser:5,2")); }

bool proper_coloring(const Graph& g, const std::vector<int>& colors, int k) {
    for (int v = 0; v < g.n; ++v) {
        if (colors[v] < 0 || colors[v] >= k) return false;
        for (uint64_t m = g.adj[v]; m;)
            if (colors[pop_lowest(m)] == colors[v]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("alpha on the fixed points") {
    CHECK(alpha(c5()).value == 2);
    CHECK(alpha(empty_graph(7)).value == 7);
    CHECK(alpha(petersen()).value == 4);
    // Witness attains the value.
    auto a = alpha(petersen());
    CHECK(popcount(a.witness) == 4);
    CHECK(oracles::is_independent(petersen(), a.witness));
    // Petersen restricted to a maximum independent set is edgeless.
    CHECK(induced_subgraph(petersen(), a.witness).edge_count() == 0);
}

TEST_CASE("omega on the fixed points") {
    CHECK(omega(generate(GeneratorSpec::parse("complete:4"))).value == 4);
    CHECK(omega(c5()).value == 2);
    CHECK(omega(petersen()).value == 2);  // triangle-free
    auto w = omega(c5());
    CHECK(oracles::is_clique(c5(), w.witness));
    CHECK(popcount(w.witness) == 2);
}

TEST_CASE("alpha, omega and im agree with brute force on all 5-vertex graphs") {
    AllGraphsStream stream(5);
    while (stream.has_next()) {
        Graph g = stream.next();
        CHECK(alpha(g).value == oracles::brute_alpha(g));
        CHECK(omega(g).value == oracles::brute_omega(g));
        CHECK(omega(g).value == alpha(complement(g)).value);
        CHECK(induced_matching_number(g).value == oracles::brute_induced_matching(g));
    }
}

TEST_CASE("chromatic number fixed points") {
    auto chi = chromatic_number(c5());
    CHECK(chi.value == 3);
    CHECK(proper_coloring(c5(), chi.colors, 3));
    CHECK_FALSE(oracles::brute_colorable(c5(), 2));

    for (int n = 1; n <= 8; ++n)
        CHECK(chromatic_number(generate(GeneratorSpec::parse(
                                   "complete:" + std::to_string(n))))
                  .value == n);
    CHECK(chromatic_number(generate(GeneratorSpec::parse("complete_multipartite:3,3")))
              .value == 2);
    CHECK(chromatic_number(petersen()).value == 3);
    CHECK_FALSE(oracles::brute_colorable(petersen(), 2));
}

TEST_CASE("chromatic number is optimal on all 5-vertex graphs") {
    AllGraphsStream stream(5);
    while (stream.has_next()) {
        Graph g = stream.next();
        auto chi = chromatic_number(g);
        CHECK(proper_coloring(g, chi.colors, chi.value));
        if (chi.value > 1) CHECK_FALSE(oracles::brute_colorable(g, chi.value - 1));
    }
}

TEST_CASE("chromatic number is optimal on seeded graphs with 6 to 8 vertices") {
    for (int n : {6, 7, 8}) {
        for (uint64_t seed = 0; seed < 25; ++seed) {
            GeneratorSpec spec = GeneratorSpec::parse("random:" + std::to_string(n) + ",1/2");
            spec.seed = 31 * seed + n;
            Graph g = generate(spec);
            auto chi = chromatic_number(g);
            CHECK(proper_coloring(g, chi.colors, chi.value));
            CHECK(oracles::brute_colorable(g, chi.value));
            if (chi.value > 1) CHECK_FALSE(oracles::brute_colorable(g, chi.value - 1));
        }
    }
}

TEST_CASE("chromatic number refuses to exceed its budget") {
    CHECK_THROWS_AS(chromatic_number(empty_graph(21)), BudgetError);
    CHECK_NOTHROW(chromatic_number(empty_graph(20)));
}

TEST_CASE("induced matching fixed points") {
    CHECK(induced_matching_number(c5()).value == 1);
    CHECK(induced_matching_number(empty_graph(4)).value == 0);
    Graph two_k2 = empty_graph(4);
    two_k2.add_edge(0, 1);
    two_k2.add_edge(2, 3);
    auto im = induced_matching_number(two_k2);
    CHECK(im.value == 2);
    CHECK(im.witness.size() == 2);
}

TEST_CASE("induced matching witness is an induced matching") {
    for (uint64_t seed = 0; seed < 50; ++seed) {
        GeneratorSpec spec = GeneratorSpec::parse("random:10,1/2");
        spec.seed = seed;
        Graph g = generate(spec);
        auto im = induced_matching_number(g);
        uint64_t verts = 0;
        for (auto [u, v] : im.witness) {
            CHECK(g.has_edge(u, v));
            CHECK_FALSE((verts & bit(u)) != 0);
            CHECK_FALSE((verts & bit(v)) != 0);
            verts |= bit(u) | bit(v);
        }
        int induced = 0;
        for (int v = 1; v < g.n; ++v)
            for (int u = 0; u < v; ++u)
                if (g.has_edge(u, v) && (verts & bit(u)) && (verts & bit(v))) ++induced;
        CHECK(induced == im.value);
    }
}

TEST_CASE("wagon bound values") {
    CHECK((wagon_bound(2, 2) == 4));
    CHECK((wagon_bound(17, 1) == 1));
    CHECK((wagon_bound(3, 3) == 81));
    CHECK_THROWS_AS(wagon_bound(0, 2), std::invalid_argument);
    // Far beyond any machine word: 63^62.
    CHECK(mpz_sizeinbase(wagon_bound(63, 32).get_mpz_t(), 2) > 64);
}

TEST_CASE("chi is bounded by the wagon bound on all 5-vertex graphs") {
    AllGraphsStream stream(5);
    while (stream.has_next()) {
        Graph g = stream.next();
        int t = induced_matching_number(g).value + 1;
        CHECK((mpz_class(chromatic_number(g).value) <= wagon_bound(omega(g).value, t)));
    }
}
