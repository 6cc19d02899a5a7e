#pragma once

#include "polycert/certificate.hpp"
#include "polycert/graph.hpp"
#include "polycert/graph_oracles.hpp"

#include <vector>

namespace polycert {

/// P(i, G): the sum of the square-free monomials of the stable sets of size i.
struct StableSetPolynomial {
    std::vector<std::vector<VertexSet>> sets;  // sets[i] in lex order
    std::vector<Polynomial> by_size;           // by_size[0] == 1

    static StableSetPolynomial of(const Graph& g);
    int alpha() const { return static_cast<int>(by_size.size()) - 1; }
};

/// C_0 .. C_alpha with C_0 = 1/(alpha + r) and C_i = i C_{i-1} / (alpha + r - i).
/// Throws std::invalid_argument unless r >= 1 and alpha >= 0.
std::vector<Rational> compute_constants(int alpha, int r);

/// Explicit degree-alpha certificate for encode_stable_set_refutation(g, r, alpha(g)).
/// Coefficient order is A, then Q_1..Q_n, then Q_e per edge.
Certificate construct_certificate(const Graph& g, int r);

/// The graph of a stable-set refutation system, read back from its generators.
/// Throws std::invalid_argument for any other system.
Graph refutation_graph(const PolySystem& system);

/// Rewrites A modulo the vertex and edge generators until every monomial of A
/// is square-free and supported on a stable set, moving the differences into
/// the Q coefficients. The result still verifies and its degree never exceeds
/// the input degree.
Certificate reduce_certificate(const Certificate& cert);

/// After reduction, A has a nonzero term for every stable set of g (the empty
/// set being the constant term).
bool check_term_per_stable_set(const Certificate& cert, const Graph& g);

}  // namespace polycert
