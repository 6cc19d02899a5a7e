#include "polycert/graph_oracles.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace polycert {

std::size_t StableSets::total() const {
    std::size_t t = 0;
    for (const auto& level : by_size) t += level.size();
    return t;
}

StableSets enumerate_stable_sets(const Graph& g) {
    StableSets out;
    out.by_size.emplace_back(1);  // the empty set
    VertexSet current;
    std::function<void(int)> extend = [&](int next) {
        for (int v = next; v <= g.n(); ++v) {
            bool ok = true;
            for (int u : current)
                if (g.adjacent(u, v)) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            current.push_back(v);
            if (out.by_size.size() <= current.size()) out.by_size.emplace_back();
            out.by_size[current.size()].push_back(current);
            extend(v + 1);
            current.pop_back();
        }
    };
    extend(1);
    for (auto& level : out.by_size) std::sort(level.begin(), level.end());
    return out;
}

int stability_number(const Graph& g) { return enumerate_stable_sets(g).alpha(); }

std::vector<VertexSet> maximal_stable_sets(const Graph& g) {
    std::vector<VertexSet> out;
    for (const auto& level : enumerate_stable_sets(g).by_size)
        for (const auto& s : level) {
            bool maximal = true;
            for (int v = 1; v <= g.n() && maximal; ++v) {
                if (std::binary_search(s.begin(), s.end(), v)) continue;
                bool free = std::none_of(s.begin(), s.end(), [&](int u) { return g.adjacent(u, v); });
                if (free) maximal = false;
            }
            if (maximal) out.push_back(s);
        }
    std::sort(out.begin(), out.end());
    return out;
}

ColoringCount enumerate_proper_colorings(const Graph& g, int k, std::size_t max_witnesses) {
    ColoringCount out;
    std::vector<int> color(static_cast<std::size_t>(g.n()) + 1, -1);
    std::function<void(int)> assign = [&](int v) {
        if (v > g.n()) {
            ++out.count;
            if (out.witnesses.size() < max_witnesses) out.witnesses.push_back(color);
            return;
        }
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (int u : g.neighbors(v))
                if (u < v && color[u] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            color[v] = c;
            assign(v + 1);
        }
        color[v] = -1;
    };
    if (k >= 1 || g.n() == 0) assign(1);
    return out;
}

std::uint64_t enumerate_hamiltonian_cycles(const Graph& g) {
    const int n = g.n();
    if (n < 3) return 0;
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    std::uint64_t directed = 0;
    std::function<void(int, int)> walk = [&](int v, int depth) {
        if (depth == n) {
            if (g.adjacent(v, 1)) ++directed;
            return;
        }
        for (int u : g.neighbors(v))
            if (!used[u]) {
                used[u] = 1;
                walk(u, depth + 1);
                used[u] = 0;
            }
    };
    used[1] = 1;
    walk(1, 1);
    return directed / 2;
}

std::set<int> enumerate_cycle_lengths(const Graph& g) {
    std::set<int> lengths;
    const int n = g.n();
    std::vector<char> used(static_cast<std::size_t>(n) + 1, 0);
    for (int s = 1; s <= n; ++s) {
        // cycles whose smallest vertex is s
        std::function<void(int, int)> walk = [&](int v, int len) {
            for (int u : g.neighbors(v)) {
                if (u == s && len >= 3) lengths.insert(len);
                if (u > s && !used[u]) {
                    used[u] = 1;
                    walk(u, len + 1);
                    used[u] = 0;
                }
            }
        };
        used[s] = 1;
        walk(s, 1);
        used[s] = 0;
    }
    return lengths;
}

Graph identify_vertices(const Graph& g, int i, int j) {
    if (i == j) throw std::invalid_argument("identify_vertices: vertices must differ");
    if (i < 1 || j < 1 || i > g.n() || j > g.n()) throw std::invalid_argument("identify_vertices: vertex out of range");
    if (g.adjacent(i, j)) throw std::invalid_argument("identify_vertices: vertices are adjacent");
    const int keep = std::min(i, j), drop = std::max(i, j);
    auto relabel = [&](int v) { return v == drop ? keep : (v > drop ? v - 1 : v); };
    std::vector<Graph::Edge> edges;
    for (auto [a, b] : g.edges()) edges.emplace_back(relabel(a), relabel(b));
    return Graph(g.n() - 1, std::move(edges));
}

bool edge_colorable(const Graph& g, int k) {
    const auto& edges = g.edges();
    std::vector<int> color(edges.size(), -1);
    std::function<bool(std::size_t)> assign = [&](std::size_t e) {
        if (e == edges.size()) return true;
        for (int c = 0; c < k; ++c) {
            bool ok = true;
            for (std::size_t f = 0; f < e && ok; ++f) {
                bool share = edges[f].first == edges[e].first || edges[f].first == edges[e].second ||
                             edges[f].second == edges[e].first || edges[f].second == edges[e].second;
                if (share && color[f] == c) ok = false;
            }
            if (!ok) continue;
            color[e] = c;
            if (assign(e + 1)) return true;
        }
        color[e] = -1;
        return false;
    };
    return assign(0);
}

bool is_connected(const Graph& g) {
    if (g.n() <= 1) return true;
    std::vector<char> seen(static_cast<std::size_t>(g.n()) + 1, 0);
    std::vector<int> stack{1};
    seen[1] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
    }
    return reached == g.n();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.n()) + 1, -1);
    for (int s = 1; s <= g.n(); ++s) {
        if (side[s] >= 0) continue;
        side[s] = 0;
        std::vector<int> stack{s};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v)) {
                if (side[u] < 0) {
                    side[u] = 1 - side[v];
                    stack.push_back(u);
                } else if (side[u] == side[v]) {
                    return std::nullopt;
                }
            }
        }
    }
    return side;
}

}  // namespace polycert
