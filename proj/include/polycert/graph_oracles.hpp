#pragma once

#include "polycert/graph.hpp"

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

namespace polycert {

using VertexSet = std::vector<int>;

/// Stable sets grouped by size: by_size[i] lists the stable sets of size i in
/// lex order. by_size[0] holds the empty set.
struct StableSets {
    std::vector<std::vector<VertexSet>> by_size;
    int alpha() const { return static_cast<int>(by_size.size()) - 1; }
    std::size_t total() const;
};

StableSets enumerate_stable_sets(const Graph& g);
int stability_number(const Graph& g);
/// Inclusion-maximal stable sets, lex order.
std::vector<VertexSet> maximal_stable_sets(const Graph& g);

struct ColoringCount {
    std::uint64_t count = 0;
    /// Up to the requested number of labelings (index 0 unused), found in lex order.
    std::vector<std::vector<int>> witnesses;
};

/// Counts maps V -> {0..k-1} without monochromatic edges.
ColoringCount enumerate_proper_colorings(const Graph& g, int k, std::size_t max_witnesses = 1);

/// Undirected hamiltonian cycles, each counted once.
std::uint64_t enumerate_hamiltonian_cycles(const Graph& g);

/// Lengths L for which g has a simple cycle of length L.
std::set<int> enumerate_cycle_lengths(const Graph& g);

/// Merges non-adjacent i and j into min(i, j); labels above max(i, j) shift down by one.
/// Throws std::invalid_argument if i == j or {i, j} is an edge.
Graph identify_vertices(const Graph& g, int i, int j);

/// Whether the edges admit a proper coloring with k colors.
bool edge_colorable(const Graph& g, int k);

bool is_connected(const Graph& g);
/// side[v] in {0,1} for a 2-coloring, or nothing if g is not bipartite.
std::optional<std::vector<int>> bipartition(const Graph& g);

}  // namespace polycert
