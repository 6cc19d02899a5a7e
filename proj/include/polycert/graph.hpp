#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycert {

/// Simple undirected graph on vertices 1..n. Edges are stored as (i, j) with
/// i < j, sorted lexicographically and free of duplicates.
class Graph {
public:
    using Edge = std::pair<int, int>;

    Graph() = default;
    /// Collapses duplicate edges. Throws std::invalid_argument on a self-loop
    /// or an endpoint outside 1..n.
    Graph(int n, std::vector<Edge> edges);

    int n() const { return n_; }
    std::size_t m() const { return edges_.size(); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool adjacent(int i, int j) const;
    /// Position of edge {i,j} in edges(), or -1.
    int edge_index(int i, int j) const;

    /// Edge-list text: first line n, then one "i j" line per edge.
    std::string to_edge_list() const;

    friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;  // 1-based, sorted
};

/// Reads either the edge-list format or DIMACS ("p edge n m" / "e i j").
/// Lines starting with 'c' (DIMACS) or '#' are comments.
Graph parse_graph(std::string_view text);

/// Named graphs. Labelings:
///  * cycle(n): edges {i, i+1} and {1, n}.
///  * petersen(): outer 5-cycle 1..5, inner pentagram 6..10 (6-7-8-9-10-6),
///    spokes {1,6},{2,8},{3,10},{4,7},{5,9}.
///  * odd_wheel(n): rim cycle 1..n, hub n+1 adjacent to every rim vertex. n odd, n >= 3.
///  * turan(n, r): parts of sizes as equal as possible, larger parts first,
///    consecutive labels (T(5,3) has parts {1,2},{3,4},{5}).
///  * kneser(m, k): k-subsets of 1..m in lex order, adjacent when disjoint.
///  * disjoint_triangles(t): triangles {3s+1, 3s+2, 3s+3}.
///  * star(k): center 1, leaves 2..k+1.
namespace graphs {
Graph empty(int n);
Graph complete(int n);
Graph path(int n);
Graph cycle(int n);
Graph star(int k);
Graph complete_bipartite(int a, int b);
Graph petersen();
Graph odd_wheel(int n);
Graph turan(int n, int r);
Graph kneser(int m, int k);
Graph disjoint_triangles(int t);
/// The four-vertex graph with edges 12, 13, 23, 24, 34.
Graph diamond();

/// Resolves names such as "k4", "c6", "p3" / "path3", "star3", "empty3",
/// "k2_3", "petersen", "wheel5", "turan5_3", "kneser6_2", "triangles2", "diamond".
/// Throws std::invalid_argument for unknown names or invalid parameters.
Graph by_name(std::string_view name);
}  // namespace graphs

/// Finite strict partial order on elements 1..m, stored transitively closed.
class Poset {
public:
    Poset() = default;
    /// Each pair (a, b) states a > b. The closure is taken; a cycle throws std::invalid_argument.
    Poset(int m, const std::vector<std::pair<int, int>>& greater_pairs);

    int size() const { return m_; }
    bool greater(int a, int b) const { return gt_[index(a, b)]; }
    bool comparable(int a, int b) const { return greater(a, b) || greater(b, a); }
    /// All pairs (a, b) with a > b, lex order.
    std::vector<std::pair<int, int>> relations() const;

    static Poset chain(int m);      // m > m-1 > ... > 1
    static Poset antichain(int m);
    /// Vertices 1..n, then edges n+1..n+m in edge order; an edge is above its two endpoints.
    static Poset incidence(const Graph& g);

private:
    std::size_t index(int a, int b) const { return static_cast<std::size_t>(a - 1) * m_ + (b - 1); }
    int m_ = 0;
    std::vector<bool> gt_;
};

/// Poset text: first line m, then one "a b" line per relation a > b.
Poset parse_poset(std::string_view text);

}  // namespace polycert
