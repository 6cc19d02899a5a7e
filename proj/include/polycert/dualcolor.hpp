#pragma once

#include "polycert/exec.hpp"
#include "polycert/graph.hpp"
#include "polycert/polynomial.hpp"

#include <cstdint>
#include <vector>

namespace polycert {

/// Vertex labels in {0..d-1}; values[v] for v = 1..n, values[0] unused.
struct Labeling {
    int d = 0;
    std::vector<int> values;

    static Labeling of(int d, const std::vector<int>& one_based_labels);
    friend bool operator==(const Labeling&, const Labeling&) = default;
};

/// Edge directions relative to the standard orientation i -> j for i < j.
struct Orientation {
    std::vector<bool> reversed;  // per edge, in edge order
    int sign = 1;                // (-1)^(number of reversed edges)
    std::vector<int> outdeg;     // 1-based
};

Orientation make_orientation(const Graph& g, std::vector<bool> reversed);

/// f_G = product over edges i < j of (x_i - x_j), fully expanded.
Polynomial graph_polynomial(const Graph& g);
/// [f_G] modulo x_i^d - 1, reducing after every edge factor.
Polynomial graph_polynomial_normal_form(const Graph& g, unsigned d);

/// Nonzero iff c is a proper coloring.
bool epsilon(const Graph& g, const Labeling& c);
/// The same decision by evaluating f_G at x_i = w^c(i), w a primitive d-th root of unity.
bool epsilon_cyclotomic(const Graph& g, const Labeling& c);

/// Signed count of orientations whose out-degrees agree with c modulo d.
/// Walks the orientations edge by edge, cutting branches in which some vertex
/// can no longer reach its label modulo d.
Rational epsilon_star_orientations(const Graph& g, const Labeling& c);
/// Coefficient of x^c in [f_G].
Rational epsilon_star_coefficient(const Graph& g, const Labeling& c);
/// Orientation sum for at most 22 edges, normal-form coefficient otherwise.
Rational epsilon_star(const Graph& g, const Labeling& c);

bool is_simultaneous_coloring(const Graph& g, const Labeling& c);

struct SigmaResult {
    int sigma = 0;
    Labeling witness;  // lex-smallest simultaneous sigma-coloring
};

/// Least d admitting a simultaneous d-coloring, scanning labelings in lex order
/// for d = 1, 2, ... Throws BudgetExceeded when some d^n exceeds `budget`.
SigmaResult simultaneous_chromatic_number(const Graph& g, Exec exec = Exec::Parallel,
                                          std::uint64_t budget = 100'000'000);

/// Out-degree labeling of the acyclic orientation built by repeatedly removing
/// a maximum-degree vertex (smallest label on ties) and orienting its remaining
/// edges away from it. Throws std::invalid_argument if d <= max degree.
Labeling orientation_coloring(const Graph& g, int d, Orientation* orientation = nullptr);

/// For a connected bipartite graph with sides A and B: |A| or |B| has the
/// parity of |E|. Throws std::invalid_argument otherwise.
bool bipartite_sigma_two(const Graph& g);

}  // namespace polycert
