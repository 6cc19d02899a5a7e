#include "polycert/dualcolor.hpp"
#include "polycert/graph_oracles.hpp"
#include "polycert/oracle.hpp"
#include "support/graph_census.hpp"

#include <doctest.h>

using namespace polycert;

TEST_CASE("graph polynomial of the diamond") {
    const Graph g = graphs::diamond();
    CHECK(graph_polynomial(g).size() == 20);
    Polynomial nf = graph_polynomial_normal_form(g, 3);
    CHECK(nf.size() == 18);
    CHECK(nf == normal_form_mod_unity(graph_polynomial(g), 3));
    for (const auto& [m, c] : nf.terms())
        for (const auto& [v, e] : m.entries()) CHECK(e < 3);
    const Labeling c = Labeling::of(3, {0, 0, 2, 0});
    CHECK_FALSE(epsilon(g, c));
    CHECK(epsilon_star(g, c) == 1);
    CHECK(epsilon_star_orientations(g, c) == 1);
    CHECK(epsilon_star_coefficient(g, c) == 1);
    CHECK(graph_polynomial_normal_form(graphs::complete(2), 2) == Polynomial::parse("x_1 - x_2"));
}

TEST_CASE("epsilon") {
    const Graph k2 = graphs::complete(2);
    CHECK(epsilon(k2, Labeling::of(2, {0, 1})));
    CHECK_FALSE(epsilon(k2, Labeling::of(2, {0, 0})));
    CHECK(epsilon_star(graphs::empty(3), Labeling::of(2, {0, 0, 0})) == 1);
    for (const auto& g : testing::graphs_up_to_isomorphism_through(4))
        for (int d = 2; d <= 3; ++d) {
            std::vector<int> labels(static_cast<std::size_t>(g.n()), 0);
            while (true) {
                const Labeling c = Labeling::of(d, labels);
                CHECK(epsilon(g, c) == epsilon_cyclotomic(g, c));
                std::size_t i = 0;
                while (i < labels.size() && ++labels[i] == d) labels[i++] = 0;
                if (i == labels.size()) break;
            }
        }
}

TEST_CASE("orientation sums match normal-form coefficients") {
    for (const auto& g : testing::graphs_up_to_isomorphism_through(5)) {
        if (g.m() > 8) continue;
        for (int d = 2; d <= 3; ++d) {
            std::vector<int> labels(static_cast<std::size_t>(g.n()), 0);
            while (true) {
                const Labeling c = Labeling::of(d, labels);
                CHECK(epsilon_star_orientations(g, c) == epsilon_star_coefficient(g, c));
                std::size_t i = 0;
                while (i < labels.size() && ++labels[i] == d) labels[i++] = 0;
                if (i == labels.size()) break;
            }
        }
    }
}

TEST_CASE("colorability iff a nonzero normal form") {
    for (const auto& g : testing::graphs_up_to_isomorphism_through(6))
        for (int d = 1; d <= 4; ++d)
            CHECK(!graph_polynomial_normal_form(g, static_cast<unsigned>(d)).is_zero() ==
                  (enumerate_proper_colorings(g, d).count > 0));
}

TEST_CASE("orientations") {
    Orientation o = make_orientation(graphs::path(3), {true, false});
    CHECK(o.sign == -1);
    CHECK(o.outdeg[1] == 0);
    CHECK(o.outdeg[2] == 2);
    CHECK(o.outdeg[3] == 0);
}

TEST_CASE("simultaneous chromatic number") {
    CHECK(simultaneous_chromatic_number(graphs::cycle(4)).sigma == 2);
    CHECK(simultaneous_chromatic_number(graphs::cycle(6)).sigma == 3);
    CHECK(simultaneous_chromatic_number(graphs::cycle(8)).sigma == 2);
    CHECK(simultaneous_chromatic_number(graphs::empty(1)).sigma == 1);
    SigmaResult k2 = simultaneous_chromatic_number(graphs::complete(2));
    CHECK(k2.sigma == 2);
    CHECK(k2.witness == Labeling::of(2, {0, 1}));
    for (const auto& g : testing::graphs_up_to_isomorphism_through(5)) {
        SigmaResult s = simultaneous_chromatic_number(g, Exec::Serial);
        SigmaResult p = simultaneous_chromatic_number(g, Exec::Parallel);
        CHECK(s.sigma == p.sigma);
        CHECK(s.witness == p.witness);
        CHECK(s.sigma <= g.max_degree() + 1);
        CHECK(is_simultaneous_coloring(g, s.witness));
    }
    CHECK_THROWS_AS(simultaneous_chromatic_number(graphs::petersen(), Exec::Parallel, 1000), BudgetExceeded);
}

TEST_CASE("orientation coloring") {
    const Graph p = graphs::petersen();
    CHECK(is_simultaneous_coloring(p, Labeling::of(4, {2, 1, 0, 2, 0, 3, 1, 2, 3, 1})));
    CHECK(orientation_coloring(graphs::empty(1), 1) == Labeling::of(1, {0}));
    const Labeling path = orientation_coloring(graphs::path(3), 3);
    CHECK(is_simultaneous_coloring(graphs::path(3), path));
    CHECK_THROWS_AS(orientation_coloring(p, 3), std::invalid_argument);
    for (const auto& g : testing::graphs_up_to_isomorphism_through(7)) {
        Orientation o;
        const Labeling c = orientation_coloring(g, g.max_degree() + 1, &o);
        CHECK(is_simultaneous_coloring(g, c));
        for (int v = 1; v <= g.n(); ++v) CHECK(c.values[static_cast<std::size_t>(v)] == o.outdeg[static_cast<std::size_t>(v)]);
    }
}

TEST_CASE("bipartite parity") {
    CHECK(bipartite_sigma_two(graphs::cycle(4)));
    CHECK_FALSE(bipartite_sigma_two(graphs::cycle(6)));
    CHECK(bipartite_sigma_two(graphs::complete(2)));
    CHECK_THROWS_AS(bipartite_sigma_two(graphs::complete(3)), std::invalid_argument);
    CHECK_THROWS_AS(bipartite_sigma_two(graphs::empty(2)), std::invalid_argument);
    for (const auto& g : testing::connected_bipartite_graphs_through(6))
        CHECK(bipartite_sigma_two(g) == (simultaneous_chromatic_number(g).sigma <= 2));
}
