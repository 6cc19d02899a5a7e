#include "polycert/cyclotomic.hpp"
#include "polycert/encodings.hpp"
#include "polycert/polynomial.hpp"

#include <doctest.h>

#include <random>

using namespace polycert;

namespace {

Polynomial P(const char* s) { return Polynomial::parse(s); }
Polynomial x(int i) { return Polynomial::var(VarId::x(i)); }

Polynomial random_poly(std::mt19937_64& rng, int vars, int terms, unsigned max_exp) {
    std::vector<std::pair<Monomial, Rational>> t;
    for (int k = 0; k < terms; ++k) {
        std::vector<Monomial::Entry> e;
        for (int v = 1; v <= vars; ++v) {
            unsigned ex = static_cast<unsigned>(rng() % (max_exp + 1));
            if (ex) e.push_back({VarId::x(v), ex});
        }
        long num = static_cast<long>(rng() % 11) - 5;
        long den = static_cast<long>(rng() % 4) + 1;
        t.emplace_back(Monomial(std::move(e)), make_rational(num, den));
    }
    return Polynomial::from_terms(std::move(t));
}

}  // namespace

TEST_CASE("rational values are kept in lowest terms") {
    Rational a(6, 4);
    a.canonicalize();
    CHECK(a.get_num() == 3);
    CHECK(a.get_den() == 2);
    CHECK(make_rational(0, 7) == Rational(0));
    CHECK(make_rational(-4, -6) == Rational(2, 3));
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
}

TEST_CASE("variable ids order and print") {
    CHECK(VarId::x(2) < VarId::x(10));
    CHECK(VarId::x(99) < VarId::y(1));
    CHECK(VarId::y(1) < VarId::y(1, 1));
    CHECK(VarId::s(1) < VarId::delta(1, 2, 1));
    CHECK(VarId::delta(4, 1, 2).to_string() == "d_4_1_2");
    CHECK(VarId::z(2, 3).to_string() == "z_2_3");
    CHECK(VarId::parse("y_2_3") == VarId::y(2, 3));
    CHECK_THROWS_AS(VarId::parse("q_1"), std::invalid_argument);
}

TEST_CASE("addition merges and cancels terms") {
    CHECK((x(1) + (-x(1))).is_zero());
    CHECK((P("x_1^2 + 1") + P("x_1*x_2")) == P("x_1^2 + x_1*x_2 + 1"));
    CHECK((P("1/2*x_1") + P("1/2*x_1")) == x(1));
    CHECK((P("x_1^2 + 1") + P("x_1*x_2")).to_string() == "x_1^2 + x_1*x_2 + 1");
}

TEST_CASE("multiplication") {
    CHECK((x(1) - x(2)) * (x(1) + x(2)) == P("x_1^2 - x_2^2"));
    CHECK((P("x_1^3 + 7") * Polynomial()).is_zero());
    CHECK(P("x_1^2 + x_1*x_2 + x_2^2") * (x(1) - x(2)) == P("x_1^3 - x_2^3"));
    CHECK((P("x_1 + 1") * P("x_2 - 2")).degree() == 2);
    CHECK(Polynomial().degree() == -1);
}

TEST_CASE("ring axioms on random polynomials") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 40; ++t) {
        Polynomial a = random_poly(rng, 3, 4, 3), b = random_poly(rng, 3, 4, 3), c = random_poly(rng, 3, 4, 3);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        CHECK(a + b == b + a);
        CHECK((a - a).is_zero());
        if (!a.is_zero() && !b.is_zero()) CHECK((a * b).degree() == a.degree() + b.degree());
    }
}

TEST_CASE("canonical text round-trips") {
    std::mt19937_64 rng(7);
    for (int t = 0; t < 30; ++t) {
        Polynomial a = random_poly(rng, 4, 5, 4);
        CHECK(Polynomial::parse(a.to_string()) == a);
    }
    CHECK(P("-1/3*x_1*x_2 + x_3 - 2").to_string() == "-1/3*x_1*x_2 + x_3 - 2");
    CHECK(P("2 x_1 x_1") == P("2*x_1^2"));
    CHECK(P("0").is_zero());
    CHECK_THROWS_AS(P("x_1 +"), std::invalid_argument);
    CHECK_THROWS_AS(P("x_1 ^ "), std::invalid_argument);
}

TEST_CASE("substitution and renaming") {
    Polynomial p = P("x_1^2 + x_1*x_2");
    CHECK(p.substitute({{VarId::x(1), x(3) + 1}}) == P("x_3^2 + 2*x_3 + 1 + x_3*x_2 + x_2"));
    CHECK(p.rename({{VarId::x(1), VarId::x(2)}, {VarId::x(2), VarId::x(1)}}) == P("x_2^2 + x_1*x_2"));
    CHECK(p.rename({{VarId::x(2), VarId::x(1)}}) == P("2*x_1^2"));
}

TEST_CASE("normal form modulo roots of unity") {
    CHECK(normal_form_mod_unity(P("x_1^3"), 3) == Polynomial(1));
    CHECK(normal_form_mod_unity(P("x_1^4*x_2"), 3) == P("x_1*x_2"));
    CHECK(normal_form_mod_unity(P("-x_1*x_3^3*x_4 + x_1*x_2^3*x_4"), 3).is_zero());

    std::mt19937_64 rng(3);
    for (unsigned d = 1; d <= 4; ++d) {
        for (int t = 0; t < 10; ++t) {
            Polynomial a = random_poly(rng, 3, 4, 5), b = random_poly(rng, 3, 4, 5);
            Polynomial na = normal_form_mod_unity(a, d);
            CHECK(normal_form_mod_unity(na, d) == na);
            CHECK(normal_form_mod_unity(a * b, d) == normal_form_mod_unity(na * normal_form_mod_unity(b, d), d));
            for (const auto& [m, c] : na.terms())
                for (const auto& [v, e] : m.entries()) CHECK(e < d);
        }
    }
}

TEST_CASE("cyclotomic polynomials") {
    CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
    CHECK(cyclotomic_polynomial(4) == std::vector<std::int64_t>{1, 0, 1});
    CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
    CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
    for (unsigned p : {2u, 3u, 5u, 7u}) CHECK(cyclotomic_polynomial(p) == std::vector<std::int64_t>(p, 1));
}

TEST_CASE("exact evaluation at roots of unity") {
    const auto a = VarId::x(1), b = VarId::x(2);
    for (unsigned e = 0; e < 3; ++e) CHECK(eval_cyclotomic(P("x_1^3 - 1"), 3, {{a, e}}).is_zero());
    CyclotomicValue same = eval_cyclotomic(P("x_1^2 + x_1*x_2 + x_2^2"), 3, {{a, 0}, {b, 0}});
    CHECK_FALSE(same.is_zero());
    CHECK(same == reduce_cyclotomic({Rational(3)}, 3));
    CHECK(eval_cyclotomic(P("x_1^2 + x_1*x_2 + x_2^2"), 3, {{a, 0}, {b, 1}}).is_zero());
    CHECK_THROWS_AS(eval_cyclotomic(P("x_1 + x_2"), 3, {{a, 0}}), std::invalid_argument);

    std::mt19937_64 rng(11);
    for (unsigned k : {2u, 3u, 4u, 6u}) {
        for (int t = 0; t < 10; ++t) {
            Polynomial p = random_poly(rng, 2, 5, 7);
            std::map<VarId, unsigned> at{{a, static_cast<unsigned>(rng() % k)}, {b, static_cast<unsigned>(rng() % k)}};
            CHECK(eval_cyclotomic(p, k, at) == eval_cyclotomic(normal_form_mod_unity(p, k), k, at));
        }
    }
    for (unsigned p : {2u, 3u, 5u, 7u})
        for (unsigned e = 0; e < p; ++e)
            CHECK(eval_cyclotomic(x(1).pow(p) - 1, p, {{a, e}}).is_zero());
}

TEST_CASE("exact rational evaluation") {
    const auto a = VarId::x(1), b = VarId::x(2);
    CHECK(eval_rational(x(1) * (x(1) - 1), {{a, 1}}) == 0);
    CHECK(eval_rational(P("x_1 + x_2 - 3"), {{a, 1}, {b, 2}}) == 0);
    CHECK_THROWS_AS(eval_rational(P("x_1 + x_2"), {{a, 1}}), std::invalid_argument);

    // Cycle constraints of the triangle at positions (1,2,3), all vertices on the cycle.
    PolySystem s = encode_longest_cycle(graphs::complete(3), 3);
    std::map<VarId, Rational> at;
    for (int i = 1; i <= 3; ++i) {
        at[VarId::x(i)] = i;
        at[VarId::y(i)] = 1;
    }
    for (const auto& g : s.generators) CHECK(eval_rational(g.expand(), at) == 0);
}
