#include "fixtures/transcribed.hpp"
#include "polycert/graph_oracles.hpp"
#include "polycert/stablecert.hpp"
#include "support/graph_census.hpp"

#include <doctest.h>

using namespace polycert;

namespace {

// Adds p*B to the A coefficient and subtracts p*f from slot `slot`, where f is
// the generator in that slot and B the target generator: the sum is unchanged.
Certificate shuffle(const Certificate& c, std::size_t slot, const Polynomial& p) {
    std::vector<Polynomial> coeffs = c.coefficients;
    coeffs[0] += p * c.system->generators[slot].expand();
    coeffs[slot] -= p * c.system->generators[0].expand();
    return Certificate::make(c.system, std::move(coeffs));
}

}  // namespace

TEST_CASE("constants") {
    auto c = compute_constants(2, 1);
    REQUIRE(c.size() == 3);
    CHECK(c[0] == Rational(1, 3));
    CHECK(c[1] == Rational(1, 6));
    CHECK(c[2] == Rational(1, 3));
    CHECK(compute_constants(0, 1) == std::vector<Rational>{1});
    auto c12 = compute_constants(1, 2);
    CHECK(c12[0] == Rational(1, 3));
    CHECK(c12[1] == Rational(1, 6));
    CHECK_THROWS_AS(compute_constants(2, 0), std::invalid_argument);
    CHECK_THROWS_AS(compute_constants(-1, 1), std::invalid_argument);
}

TEST_CASE("stable set polynomial") {
    auto p = StableSetPolynomial::of(graphs::turan(5, 3));
    CHECK(p.alpha() == 2);
    CHECK(p.by_size[0] == Polynomial(1));
    CHECK(p.by_size[2] == Polynomial::parse("x_1 x_2 + x_3 x_4"));
    CHECK(StableSetPolynomial::of(graphs::petersen()).sets[4].size() == 5);
}

TEST_CASE("construction") {
    Certificate t = construct_certificate(graphs::turan(5, 3), 1);
    Certificate fixture = testing::turan53_certificate();
    CHECK(*t.system == *fixture.system);
    CHECK(t.coefficients == fixture.coefficients);
    CHECK(t.degree == 2);

    Certificate k1 = construct_certificate(graphs::empty(1), 1);
    CHECK(verify_certificate(k1));
    CHECK(k1.degree == 1);
    CHECK(k1.coefficients[0] == Polynomial::parse("-1/2 x_1 - 1/2"));

    Certificate p = construct_certificate(graphs::petersen(), 1);
    CHECK(p.degree == 4);
    CHECK(verify_certificate(p));
}

TEST_CASE("construction verifies with the stated degrees") {
    for (const auto& g : testing::graphs_up_to_isomorphism_through(6)) {
        const int alpha = stability_number(g);
        for (int r = 1; r <= 2; ++r) {
            Certificate c = construct_certificate(g, r);
            CHECK(verify_certificate(c));
            CHECK(c.coefficients[0].degree() == alpha);
            for (std::size_t i = 1; i < c.coefficients.size(); ++i) CHECK(c.coefficients[i].degree() <= alpha - 1);
        }
    }
    for (const char* name : {"petersen", "triangles2", "c8", "k2_3", "wheel5"}) {
        Certificate c = construct_certificate(graphs::by_name(name), 1);
        CHECK(verify_certificate(c));
    }
}

TEST_CASE("refutation graph") {
    const Graph g = graphs::petersen();
    CHECK(refutation_graph(encode_stable_set_refutation(g, 2, 4)) == g);
    CHECK_THROWS_AS(refutation_graph(encode_k_coloring(g, 3)), std::invalid_argument);
}

TEST_CASE("reduction") {
    Certificate t = construct_certificate(graphs::turan(5, 3), 1);
    Certificate fixed = reduce_certificate(t);
    CHECK(fixed.coefficients == t.coefficients);

    Certificate square = shuffle(t, 1, Polynomial::parse("x_1"));
    REQUIRE(verify_certificate(square));
    CHECK(square.coefficients[0].coefficient(Monomial::var(VarId::x(1), 2)) != 0);
    Certificate r1 = reduce_certificate(square);
    CHECK(verify_certificate(r1));
    CHECK(r1.degree <= square.degree);
    CHECK(r1.coefficients[0] == t.coefficients[0]);

    const Graph g = graphs::turan(5, 3);
    const std::size_t e13 = 1 + 5 + static_cast<std::size_t>(g.edge_index(1, 3));
    Certificate edge = shuffle(t, e13, Polynomial(1));
    REQUIRE(verify_certificate(edge));
    Certificate r2 = reduce_certificate(edge);
    CHECK(verify_certificate(r2));
    CHECK(r2.coefficients[0] == t.coefficients[0]);
    CHECK(r2.coefficients[e13] == t.coefficients[e13]);

    Certificate twice = reduce_certificate(r2);
    CHECK(twice.coefficients == r2.coefficients);
    CHECK(twice.degree == r2.degree);
    CHECK_THROWS_AS(reduce_certificate(testing::k4_certificate()), std::invalid_argument);
}

TEST_CASE("term per stable set") {
    const Graph t = graphs::turan(5, 3);
    Certificate fixture = testing::turan53_certificate();
    CHECK(check_term_per_stable_set(fixture, t));
    CHECK(reduce_certificate(fixture).coefficients[0].size() == 8);
    CHECK(check_term_per_stable_set(construct_certificate(graphs::petersen(), 1), graphs::petersen()));
    const Graph two = graphs::disjoint_triangles(2);
    Certificate c = construct_certificate(two, 1);
    CHECK(check_term_per_stable_set(c, two));
    CHECK(reduce_certificate(c).coefficients[0].size() >= 16);
}
