#include "polycert/cyclotomic.hpp"
#include "polycert/encodings.hpp"
#include "polycert/graph_oracles.hpp"
#include "polycert/oracle.hpp"
#include "support/graph_census.hpp"

#include <doctest.h>

using namespace polycert;

TEST_CASE("oracle basics") {
    OracleOptions o;
    o.count_all = true;
    CHECK(*decide(encode_hamiltonian(graphs::complete(3)), o).count == 6);
    CHECK_FALSE(decide(encode_stable_set(graphs::petersen(), 5)).feasible);
    OracleResult k4 = decide(encode_k_coloring(graphs::complete(4), 3));
    CHECK_FALSE(k4.feasible);
    CHECK_FALSE(k4.witness.has_value());
}

TEST_CASE("witnesses satisfy every generator") {
    for (const PolySystem& s : {encode_k_coloring(graphs::cycle(5), 3), encode_stable_set(graphs::petersen(), 4),
                                encode_longest_cycle(graphs::complete(4), 4), encode_hamiltonian(graphs::cycle(5))}) {
        OracleResult r = decide(s);
        REQUIRE(r.feasible);
        std::map<VarId, unsigned> roots;
        std::map<VarId, Rational> ints;
        for (const auto& [v, val] : *r.witness) {
            roots[v] = static_cast<unsigned>(val);
            ints[v] = val;
        }
        for (const auto& g : s.generators) {
            Polynomial p = g.expand();
            bool has_witness = false;
            for (VarId v : p.variables()) has_witness |= s.domains.at(v).kind == DomainSpec::Kind::Witness;
            if (has_witness) continue;
            const auto& dom = s.domains.at(p.variables().front());
            if (dom.kind == DomainSpec::Kind::RootsOfUnity) CHECK(eval_cyclotomic(p, dom.order, roots).is_zero());
            else CHECK(eval_rational(p, ints) == 0);
        }
    }
}

TEST_CASE("the witness is the lexicographically first solution") {
    OracleResult r = decide(encode_k_coloring(graphs::complete(3), 3));
    REQUIRE(r.witness);
    CHECK(r.witness->at(VarId::x(1)) == 0);
    CHECK(r.witness->at(VarId::x(2)) == 1);
    CHECK(r.witness->at(VarId::x(3)) == 2);
}

TEST_CASE("hamiltonian counts equal 2n times the cycle count") {
    OracleOptions o;
    o.count_all = true;
    for (int n = 3; n <= 6; ++n)
        for (const auto& g : testing::graphs_up_to_isomorphism(n)) {
            if (n == 6 && g.m() < 9) continue;
            CHECK(*decide(encode_hamiltonian(g), o).count == 2 * n * enumerate_hamiltonian_cycles(g));
        }
}

TEST_CASE("serial and parallel search agree") {
    OracleOptions serial, parallel;
    serial.count_all = parallel.count_all = true;
    serial.exec = Exec::Serial;
    parallel.exec = Exec::Parallel;
    for (const PolySystem& s : {encode_k_coloring(graphs::petersen(), 3), encode_hamiltonian(graphs::complete(5)),
                                encode_stable_set(graphs::petersen(), 3), encode_edge_chromatic(graphs::petersen())}) {
        OracleResult a = decide(s, serial), b = decide(s, parallel);
        CHECK(a.feasible == b.feasible);
        CHECK(a.witness == b.witness);
        CHECK(*a.count == *b.count);
    }
}

TEST_CASE("budget and domain errors") {
    OracleOptions tiny;
    tiny.budget = 10;
    CHECK_THROWS_AS(decide(encode_hamiltonian(graphs::petersen()), tiny), BudgetExceeded);
    PolySystem broken = encode_k_coloring(graphs::complete(2), 2);
    broken.domains.erase(VarId::x(2));
    CHECK_THROWS_AS(decide(broken), std::invalid_argument);
    CHECK(domain_product(encode_k_coloring(graphs::complete(4), 3)) == 81);
    CHECK(domain_product(encode_edge_chromatic(graphs::star(3))) == 27);
}
