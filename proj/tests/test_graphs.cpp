#include "polycert/graph.hpp"
#include "polycert/graph_oracles.hpp"
#include "support/graph_census.hpp"

#include <doctest.h>

using namespace polycert;

namespace {

void check_handshake(const Graph& g) {
    long sum = 0;
    for (int v = 1; v <= g.n(); ++v) sum += g.degree(v);
    CHECK(sum == 2 * static_cast<long>(g.m()));
}

}  // namespace

TEST_CASE("edge-list and DIMACS parsing") {
    Graph k3 = parse_graph("3\n1 2\n2 3\n1 3\n");
    CHECK(k3 == graphs::complete(3));
    Graph k4 = parse_graph("c complete graph\np edge 4 6\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\ne 3 4\n");
    CHECK(k4 == graphs::complete(4));
    CHECK(parse_graph("# comment\n3\n1 2\n2 1\n1 2\n").m() == 1);
    CHECK_THROWS_AS(parse_graph("2\n1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2\n0 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2\n1 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_graph("2\n1 x\n"), std::invalid_argument);
    CHECK(parse_graph(graphs::petersen().to_edge_list()) == graphs::petersen());
}

TEST_CASE("named generators") {
    Graph p = graphs::petersen();
    CHECK(p.n() == 10);
    CHECK(p.m() == 15);
    for (int v = 1; v <= 10; ++v) CHECK(p.degree(v) == 3);
    for (auto [a, b] : std::vector<Graph::Edge>{{1, 6}, {2, 8}, {3, 10}, {4, 7}, {5, 9}, {6, 7}, {6, 10}, {1, 5}})
        CHECK(p.adjacent(a, b));

    Graph t = graphs::turan(5, 3);
    CHECK(t.n() == 5);
    CHECK(t.m() == 8);
    CHECK(stability_number(t) == 2);
    CHECK_FALSE(t.adjacent(1, 2));
    CHECK_FALSE(t.adjacent(3, 4));

    CHECK(graphs::odd_wheel(3) == graphs::complete(4));
    CHECK(graphs::odd_wheel(5).degree(6) == 5);
    CHECK_THROWS_AS(graphs::odd_wheel(4), std::invalid_argument);

    for (int m = 4; m <= 7; ++m) {
        Graph k = graphs::kneser(m, 2);
        CHECK(k.n() == m * (m - 1) / 2);
        for (int v = 1; v <= k.n(); ++v) CHECK(k.degree(v) == (m - 2) * (m - 3) / 2);
    }
    CHECK(graphs::kneser(5, 2).m() == 15);

    for (const char* name : {"petersen", "diamond", "triangles2", "turan5_3", "kneser6_2", "wheel5", "p4", "path4",
                             "star3", "empty3", "k4", "k2_3", "c6"})
        check_handshake(graphs::by_name(name));
    CHECK(graphs::by_name("star3") == graphs::star(3));
    CHECK(graphs::by_name("k2_3") == graphs::complete_bipartite(2, 3));
    CHECK_THROWS_AS(graphs::by_name("nonsense"), std::invalid_argument);
    CHECK_THROWS_AS(graphs::by_name("wheel4"), std::invalid_argument);
}

TEST_CASE("stable set enumeration") {
    StableSets k3 = enumerate_stable_sets(graphs::complete(3));
    CHECK(k3.alpha() == 1);
    CHECK(k3.total() == 4);
    CHECK(k3.by_size[0].size() == 1);

    StableSets pet = enumerate_stable_sets(graphs::petersen());
    CHECK(pet.alpha() == 4);
    CHECK(pet.by_size[4].size() == 5);
    CHECK(maximal_stable_sets(graphs::disjoint_triangles(2)).size() == 9);
    CHECK(enumerate_stable_sets(graphs::disjoint_triangles(2)).total() == 16);

    for (const auto& g : testing::graphs_up_to_isomorphism_through(5)) {
        StableSets s = enumerate_stable_sets(g);
        CHECK(s.by_size[1].size() == static_cast<std::size_t>(g.n()));
        for (const auto& level : s.by_size)
            for (const auto& set : level)
                for (std::size_t a = 0; a < set.size(); ++a)
                    for (std::size_t b = a + 1; b < set.size(); ++b) CHECK_FALSE(g.adjacent(set[a], set[b]));
    }
}

TEST_CASE("proper colorings") {
    CHECK(enumerate_proper_colorings(graphs::complete(3), 3).count == 6);
    CHECK(enumerate_proper_colorings(graphs::complete(4), 3).count == 0);
    CHECK(enumerate_proper_colorings(graphs::cycle(5), 3).count == 30);
    ColoringCount c = enumerate_proper_colorings(graphs::cycle(5), 3, 2);
    CHECK(c.witnesses.size() == 2);
}

TEST_CASE("hamiltonian cycles and cycle lengths") {
    CHECK(enumerate_hamiltonian_cycles(graphs::complete(3)) == 1);
    CHECK(enumerate_hamiltonian_cycles(graphs::complete(4)) == 3);
    CHECK(enumerate_hamiltonian_cycles(graphs::complete(5)) == 12);
    CHECK(enumerate_hamiltonian_cycles(graphs::petersen()) == 0);
    CHECK(enumerate_cycle_lengths(graphs::complete(3)) == std::set<int>{3});
    CHECK(enumerate_cycle_lengths(graphs::cycle(6)) == std::set<int>{6});
    CHECK(enumerate_cycle_lengths(graphs::complete(4)) == std::set<int>{3, 4});
    CHECK(enumerate_cycle_lengths(graphs::petersen()) == std::set<int>{5, 6, 8, 9});
}

TEST_CASE("vertex identification") {
    Graph w5 = graphs::odd_wheel(5);
    Graph h = identify_vertices(identify_vertices(w5, 3, 5), 2, 4);
    CHECK(h == graphs::odd_wheel(3));
    CHECK(identify_vertices(graphs::path(3), 1, 3) == graphs::complete(2));
    CHECK_THROWS_AS(identify_vertices(graphs::path(3), 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(identify_vertices(graphs::path(3), 2, 2), std::invalid_argument);

    // Identification never turns a non-3-colorable graph into a 3-colorable one.
    for (const auto& g : testing::graphs_up_to_isomorphism(6)) {
        if (enumerate_proper_colorings(g, 3).count != 0) continue;
        for (int i = 1; i <= g.n(); ++i)
            for (int j = i + 1; j <= g.n(); ++j)
                if (!g.adjacent(i, j)) CHECK(enumerate_proper_colorings(identify_vertices(g, i, j), 3).count == 0);
    }
}

TEST_CASE("edge coloring, connectivity, bipartition") {
    CHECK(edge_colorable(graphs::path(3), 2));
    CHECK_FALSE(edge_colorable(graphs::complete(3), 2));
    CHECK(edge_colorable(graphs::complete(3), 3));
    CHECK_FALSE(edge_colorable(graphs::petersen(), 3));
    CHECK(is_connected(graphs::petersen()));
    CHECK_FALSE(is_connected(graphs::disjoint_triangles(2)));
    CHECK(bipartition(graphs::cycle(6)).has_value());
    CHECK_FALSE(bipartition(graphs::cycle(5)).has_value());
}

TEST_CASE("posets") {
    Poset c = Poset::chain(3);
    CHECK(c.greater(3, 1));
    CHECK(c.relations().size() == 3);
    CHECK_FALSE(Poset::antichain(3).comparable(1, 2));
    CHECK_THROWS_AS(Poset(2, {{1, 2}, {2, 1}}), std::invalid_argument);
    Poset inc = Poset::incidence(graphs::cycle(4));
    CHECK(inc.size() == 8);
    CHECK(inc.greater(5, 1));
    CHECK(inc.relations().size() == 8);
    CHECK(parse_poset("3\n3 2\n2 1\n").greater(3, 1));
}

TEST_CASE("isomorphism census counts") {
    const std::size_t expected[] = {1, 2, 4, 11, 34, 156, 1044};
    for (int n = 1; n <= 7; ++n) CHECK(testing::graphs_up_to_isomorphism(n).size() == expected[n - 1]);
}
