#pragma once

#include "polycert/graph.hpp"
#include "polycert/system.hpp"

#include <string_view>

namespace polycert {

// Generator order in every encoding: target/cardinality equations, vertex
// equations by vertex, edge equations in edge order, then witness and
// difference-variable equations.

/// x_i^k - 1 per vertex; x_i^{k-1} + x_i^{k-2} x_j + ... + x_j^{k-1} per edge.
PolySystem encode_k_coloring(const Graph& g, int k);

/// sum x_i - k; x_i^2 - x_i per vertex; x_i x_j per edge.
PolySystem encode_stable_set(const Graph& g, int k);

/// The infeasible system J(G, r) asking for a stable set of size alpha + r.
PolySystem encode_stable_set_refutation(const Graph& g, int r, int alpha);

/// Cycle of length L: variables y_i (on cycle) and x_i (position).
PolySystem encode_longest_cycle(const Graph& g, int L);

/// Hamiltonian cycle: one position variable x_i in 1..n per vertex.
PolySystem encode_hamiltonian(const Graph& g);

/// Poset dimension at most dim. Variables x_{i,k} (value of element i in
/// extension k), s_k (distinctness witness), d_{i,j,k} (differences).
PolySystem encode_poset_dimension(const Poset& p, int dim);

/// Planar subgraph with K edges via three linear extensions of the incidence
/// poset. Variables z_{i,j} (edge selector), x_{i,k} (vertex value),
/// y_{i,j,k} (edge value), s_k, and d_{a,b,k} where a, b are incidence-poset
/// element ids (vertices 1..n, then edges n+1..n+m in edge order).
PolySystem encode_planar_subgraph(const Graph& g, int K);

/// k-colorable subgraph with R edges: y_{i,j} selects edges.
PolySystem encode_k_colorable_subgraph(const Graph& g, int k, int R);

/// Edge coloring with max-degree many colors: x_{i,j} per edge, s_i per vertex.
PolySystem encode_edge_chromatic(const Graph& g);

/// x_i^{k-1} + x_i^{k-2} x_j + ... + x_j^{k-1}.
Polynomial edge_polynomial(VarId a, VarId b, int k);

/// Names accepted by the command line tool, in a fixed order.
const std::vector<std::string_view>& encoding_names();

}  // namespace polycert
