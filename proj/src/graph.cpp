#include "polycert/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace polycert {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), adj_(static_cast<std::size_t>(n) + 1) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    for (auto& [i, j] : edges) {
        if (i < 1 || j < 1) throw std::invalid_argument("graph: vertex index below 1");
        if (i > n || j > n) throw std::invalid_argument("graph: vertex index above n");
        if (i == j) throw std::invalid_argument("graph: self-loop at vertex " + std::to_string(i));
        if (i > j) std::swap(i, j);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
    for (auto [i, j] : edges_) {
        adj_[i].push_back(j);
        adj_[j].push_back(i);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 1; v <= n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool Graph::adjacent(int i, int j) const {
    if (i < 1 || i > n_) return false;
    return std::binary_search(adj_[i].begin(), adj_[i].end(), j);
}

int Graph::edge_index(int i, int j) const {
    if (i > j) std::swap(i, j);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{i, j});
    if (it == edges_.end() || *it != Edge{i, j}) return -1;
    return static_cast<int>(it - edges_.begin());
}

std::string Graph::to_edge_list() const {
    std::ostringstream out;
    out << n_ << '\n';
    for (auto [i, j] : edges_) out << i << ' ' << j << '\n';
    return out.str();
}

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(start, end - start);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        start = end + 1;
    }
    return lines;
}

std::vector<std::string_view> tokens(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

int to_int(std::string_view tok, std::size_t line_no) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (ec != std::errc() || ptr != tok.data() + tok.size())
        throw std::invalid_argument("line " + std::to_string(line_no) + ": expected integer, got '" +
                                    std::string(tok) + "'");
    return v;
}

[[noreturn]] void malformed(std::size_t line_no, const std::string& what) {
    throw std::invalid_argument("line " + std::to_string(line_no) + ": " + what);
}

std::pair<int, std::vector<std::pair<int, int>>> parse_pairs(std::string_view text, const char* what) {
    auto lines = split_lines(text);
    bool dimacs = false;
    for (auto line : lines) {
        auto t = tokens(line);
        if (!t.empty() && (t[0] == "p" || t[0] == "e")) dimacs = true;
    }
    int n = -1;
    std::vector<std::pair<int, int>> pairs;
    for (std::size_t k = 0; k < lines.size(); ++k) {
        auto t = tokens(lines[k]);
        std::size_t no = k + 1;
        if (t.empty() || t[0][0] == '#' || (dimacs && t[0] == "c")) continue;
        if (dimacs) {
            if (t[0] == "p") {
                if (t.size() != 4 || n >= 0) malformed(no, "bad problem line");
                n = to_int(t[2], no);
            } else if (t[0] == "e") {
                if (t.size() != 3 || n < 0) malformed(no, "bad edge line");
                pairs.emplace_back(to_int(t[1], no), to_int(t[2], no));
            } else {
                malformed(no, "unknown DIMACS line");
            }
        } else if (n < 0) {
            if (t.size() != 1) malformed(no, std::string("expected ") + what + " count");
            n = to_int(t[0], no);
        } else {
            if (t.size() != 2) malformed(no, "expected two indices");
            pairs.emplace_back(to_int(t[0], no), to_int(t[1], no));
        }
    }
    if (n < 0) throw std::invalid_argument(std::string("missing ") + what + " count");
    return {n, std::move(pairs)};
}

}  // namespace

Graph parse_graph(std::string_view text) {
    auto [n, pairs] = parse_pairs(text, "vertex");
    return Graph(n, std::move(pairs));
}

Poset parse_poset(std::string_view text) {
    auto [m, pairs] = parse_pairs(text, "element");
    return Poset(m, pairs);
}

namespace graphs {

Graph empty(int n) { return Graph(n, {}); }

Graph complete(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph path(int n) {
    std::vector<Graph::Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    return Graph(n, std::move(e));
}

Graph cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Graph::Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    return Graph(n, std::move(e));
}

Graph star(int k) {
    std::vector<Graph::Edge> e;
    for (int i = 2; i <= k + 1; ++i) e.emplace_back(1, i);
    return Graph(k + 1, std::move(e));
}

Graph complete_bipartite(int a, int b) {
    std::vector<Graph::Edge> e;
    for (int i = 1; i <= a; ++i)
        for (int j = a + 1; j <= a + b; ++j) e.emplace_back(i, j);
    return Graph(a + b, std::move(e));
}

Graph petersen() {
    return Graph(10, {{1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 5},
                      {6, 7}, {7, 8}, {8, 9}, {9, 10}, {6, 10},
                      {1, 6}, {2, 8}, {3, 10}, {4, 7}, {5, 9}});
}

Graph odd_wheel(int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd wheel needs an odd rim of at least 3");
    std::vector<Graph::Edge> e;
    for (int i = 1; i < n; ++i) e.emplace_back(i, i + 1);
    e.emplace_back(1, n);
    for (int i = 1; i <= n; ++i) e.emplace_back(i, n + 1);
    return Graph(n + 1, std::move(e));
}

Graph turan(int n, int r) {
    if (r < 1 || n < 0) throw std::invalid_argument("turan: invalid parameters");
    std::vector<int> part(static_cast<std::size_t>(n) + 1);
    int v = 1;
    for (int p = 0; p < r; ++p) {
        int size = n / r + (p < n % r ? 1 : 0);
        for (int s = 0; s < size; ++s) part[v++] = p;
    }
    std::vector<Graph::Edge> e;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j)
            if (part[i] != part[j]) e.emplace_back(i, j);
    return Graph(n, std::move(e));
}

Graph kneser(int m, int k) {
    if (k < 1 || m < k) throw std::invalid_argument("kneser: invalid parameters");
    std::vector<unsigned> sets;
    for (unsigned mask = 0; mask < (1u << m); ++mask)
        if (__builtin_popcount(mask) == k) sets.push_back(mask);
    // lex order of the sorted element lists
    auto key = [m](unsigned mask) {
        std::vector<int> out;
        for (int i = 0; i < m; ++i)
            if (mask >> i & 1u) out.push_back(i);
        return out;
    };
    std::sort(sets.begin(), sets.end(), [&](unsigned a, unsigned b) { return key(a) < key(b); });
    std::vector<Graph::Edge> e;
    const int n = static_cast<int>(sets.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((sets[i] & sets[j]) == 0) e.emplace_back(i + 1, j + 1);
    return Graph(n, std::move(e));
}

Graph disjoint_triangles(int t) {
    std::vector<Graph::Edge> e;
    for (int s = 0; s < t; ++s) {
        e.emplace_back(3 * s + 1, 3 * s + 2);
        e.emplace_back(3 * s + 1, 3 * s + 3);
        e.emplace_back(3 * s + 2, 3 * s + 3);
    }
    return Graph(3 * t, std::move(e));
}

Graph diamond() { return Graph(4, {{1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}}); }

namespace {

bool consume(std::string_view& s, std::string_view prefix) {
    if (s.substr(0, prefix.size()) != prefix) return false;
    s.remove_prefix(prefix.size());
    return true;
}

std::vector<int> numbers(std::string_view s, std::string_view full) {
    std::vector<int> out;
    std::size_t i = 0;
    while (i < s.size()) {
        std::size_t j = s.find('_', i);
        if (j == std::string_view::npos) j = s.size();
        int v = 0;
        auto tok = s.substr(i, j - i);
        auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
        if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size())
            throw std::invalid_argument("unknown graph name: " + std::string(full));
        out.push_back(v);
        i = j + 1;
    }
    return out;
}

}  // namespace

Graph by_name(std::string_view name) {
    std::string_view s = name;
    auto need = [&](const std::vector<int>& v, std::size_t k) {
        if (v.size() != k) throw std::invalid_argument("unknown graph name: " + std::string(name));
        return v;
    };
    if (s == "petersen") return petersen();
    if (s == "diamond") return diamond();
    if (consume(s, "triangles")) return disjoint_triangles(need(numbers(s, name), 1)[0]);
    if (consume(s, "turan")) {
        auto v = need(numbers(s, name), 2);
        return turan(v[0], v[1]);
    }
    if (consume(s, "kneser")) {
        auto v = need(numbers(s, name), 2);
        return kneser(v[0], v[1]);
    }
    if (consume(s, "wheel")) return odd_wheel(need(numbers(s, name), 1)[0]);
    if (consume(s, "path")) return path(need(numbers(s, name), 1)[0]);
    if (consume(s, "star")) return star(need(numbers(s, name), 1)[0]);
    if (consume(s, "empty")) return empty(need(numbers(s, name), 1)[0]);
    if (consume(s, "k")) {
        auto v = numbers(s, name);
        if (v.size() == 1) return complete(v[0]);
        if (v.size() == 2) return complete_bipartite(v[0], v[1]);
    } else if (consume(s, "c")) {
        return cycle(need(numbers(s, name), 1)[0]);
    } else if (consume(s, "p")) {
        return path(need(numbers(s, name), 1)[0]);
    }
    throw std::invalid_argument("unknown graph name: " + std::string(name));
}

}  // namespace graphs

Poset::Poset(int m, const std::vector<std::pair<int, int>>& greater_pairs)
    : m_(m), gt_(static_cast<std::size_t>(m) * m, false) {
    for (auto [a, b] : greater_pairs) {
        if (a < 1 || b < 1 || a > m || b > m) throw std::invalid_argument("poset: element out of range");
        gt_[index(a, b)] = true;
    }
    for (int k = 1; k <= m; ++k)
        for (int a = 1; a <= m; ++a)
            if (gt_[index(a, k)])
                for (int b = 1; b <= m; ++b)
                    if (gt_[index(k, b)]) gt_[index(a, b)] = true;
    for (int a = 1; a <= m; ++a)
        if (gt_[index(a, a)]) throw std::invalid_argument("poset: relation is not acyclic");
}

std::vector<std::pair<int, int>> Poset::relations() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 1; a <= m_; ++a)
        for (int b = 1; b <= m_; ++b)
            if (greater(a, b)) out.emplace_back(a, b);
    return out;
}

Poset Poset::chain(int m) {
    std::vector<std::pair<int, int>> rel;
    for (int a = 2; a <= m; ++a) rel.emplace_back(a, a - 1);
    return Poset(m, rel);
}

Poset Poset::antichain(int m) { return Poset(m, {}); }

Poset Poset::incidence(const Graph& g) {
    std::vector<std::pair<int, int>> rel;
    int id = g.n();
    for (auto [i, j] : g.edges()) {
        ++id;
        rel.emplace_back(id, i);
        rel.emplace_back(id, j);
    }
    return Poset(g.n() + static_cast<int>(g.m()), rel);
}

}  // namespace polycert
