#include "polycert/dualcolor.hpp"

#include "polycert/cyclotomic.hpp"
#include "polycert/graph_oracles.hpp"
#include "polycert/oracle.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace polycert {

Labeling Labeling::of(int d, const std::vector<int>& one_based_labels) {
    Labeling c;
    c.d = d;
    c.values.push_back(0);
    c.values.insert(c.values.end(), one_based_labels.begin(), one_based_labels.end());
    return c;
}

namespace {

void check_labeling(const Graph& g, const Labeling& c) {
    if (c.d < 1 || static_cast<int>(c.values.size()) != g.n() + 1)
        throw std::invalid_argument("labeling does not match the graph");
    for (int v = 1; v <= g.n(); ++v)
        if (c.values[v] < 0 || c.values[v] >= c.d) throw std::invalid_argument("label out of range");
}

Monomial labeling_monomial(const Labeling& c) {
    std::vector<Monomial::Entry> e;
    for (std::size_t v = 1; v < c.values.size(); ++v)
        if (c.values[v] > 0) e.push_back({VarId::x(static_cast<int>(v)), static_cast<unsigned>(c.values[v])});
    return Monomial(std::move(e));
}

Polynomial edge_factor(int i, int j) { return Polynomial::var(VarId::x(i)) - Polynomial::var(VarId::x(j)); }

}  // namespace

Orientation make_orientation(const Graph& g, std::vector<bool> reversed) {
    if (reversed.size() != g.m()) throw std::invalid_argument("orientation length does not match the graph");
    Orientation o;
    o.outdeg.assign(static_cast<std::size_t>(g.n()) + 1, 0);
    for (std::size_t e = 0; e < g.m(); ++e) {
        auto [i, j] = g.edges()[e];
        if (reversed[e]) {
            ++o.outdeg[j];
            o.sign = -o.sign;
        } else {
            ++o.outdeg[i];
        }
    }
    o.reversed = std::move(reversed);
    return o;
}

Polynomial graph_polynomial(const Graph& g) {
    Polynomial p(1);
    for (auto [i, j] : g.edges()) p *= edge_factor(i, j);
    return p;
}

Polynomial graph_polynomial_normal_form(const Graph& g, unsigned d) {
    if (d < 1) throw std::invalid_argument("order must be positive");
    Polynomial p(1);
    for (auto [i, j] : g.edges()) p = normal_form_mod_unity(p * edge_factor(i, j), d);
    return p;
}

bool epsilon(const Graph& g, const Labeling& c) {
    check_labeling(g, c);
    for (auto [i, j] : g.edges())
        if (c.values[i] == c.values[j]) return false;
    return true;
}

bool epsilon_cyclotomic(const Graph& g, const Labeling& c) {
    check_labeling(g, c);
    std::map<VarId, unsigned> at;
    for (int v = 1; v <= g.n(); ++v) at[VarId::x(v)] = static_cast<unsigned>(c.values[v]);
    const unsigned d = static_cast<unsigned>(c.d);
    return !eval_cyclotomic(graph_polynomial_normal_form(g, d), d, at).is_zero();
}

Rational epsilon_star_orientations(const Graph& g, const Labeling& c) {
    check_labeling(g, c);
    const int n = g.n();
    const std::size_t m = g.m();
    std::vector<int> outdeg(static_cast<std::size_t>(n) + 1, 0);
    std::vector<int> left(static_cast<std::size_t>(n) + 1, 0);  // unassigned incident edges
    for (int v = 1; v <= n; ++v) left[v] = g.degree(v);
    for (int v = 1; v <= n; ++v)
        if (left[v] == 0 && c.values[v] % c.d != 0) return Rational(0);
    // Final out-degree of v lies in [outdeg, outdeg + left]; some value must be = c(v) mod d.
    auto reachable = [&](int v) {
        if (left[v] + 1 >= c.d) return true;
        const int lo = outdeg[v] % c.d;
        const int gap = (c.values[v] - lo + c.d) % c.d;
        return gap <= left[v];
    };
    long total = 0;
    std::function<void(std::size_t, int)> walk = [&](std::size_t e, int sign) {
        if (e == m) {
            total += sign;
            return;
        }
        auto [i, j] = g.edges()[e];
        --left[i];
        --left[j];
        for (int flip = 0; flip < 2; ++flip) {
            const int tail = flip ? j : i;
            ++outdeg[tail];
            if (reachable(i) && reachable(j)) walk(e + 1, flip ? -sign : sign);
            --outdeg[tail];
        }
        ++left[i];
        ++left[j];
    };
    walk(0, 1);
    return Rational(total);
}

Rational epsilon_star_coefficient(const Graph& g, const Labeling& c) {
    check_labeling(g, c);
    return graph_polynomial_normal_form(g, static_cast<unsigned>(c.d)).coefficient(labeling_monomial(c));
}

Rational epsilon_star(const Graph& g, const Labeling& c) {
    return g.m() <= 22 ? epsilon_star_orientations(g, c) : epsilon_star_coefficient(g, c);
}

bool is_simultaneous_coloring(const Graph& g, const Labeling& c) { return epsilon(g, c) && epsilon_star(g, c) != 0; }

namespace {

struct MonomialSet {
    std::unordered_set<Monomial, MonomialHash> support;
    explicit MonomialSet(const Polynomial& p) {
        for (const auto& [mono, coef] : p.terms()) support.insert(mono);
    }
};

// Labeling number t in lex order, vertex 1 most significant.
void decode(std::uint64_t t, int d, Labeling& c) {
    for (std::size_t v = c.values.size() - 1; v >= 1; --v) {
        c.values[v] = static_cast<int>(t % static_cast<std::uint64_t>(d));
        t /= static_cast<std::uint64_t>(d);
    }
}

bool simultaneous_at(const Graph& g, const MonomialSet& fg, const Labeling& c) {
    for (auto [i, j] : g.edges())
        if (c.values[i] == c.values[j]) return false;
    return fg.support.count(labeling_monomial(c)) > 0;
}

}  // namespace

SigmaResult simultaneous_chromatic_number(const Graph& g, Exec exec, std::uint64_t budget) {
    const int n = g.n();
    for (int d = 1; d <= g.max_degree() + 1; ++d) {
        std::uint64_t total = 1;
        for (int v = 0; v < n; ++v) {
            if (total > budget / static_cast<std::uint64_t>(d)) throw BudgetExceeded("labeling count exceeds budget");
            total *= static_cast<std::uint64_t>(d);
        }
        const MonomialSet fg(graph_polynomial_normal_form(g, static_cast<unsigned>(d)));
        if (fg.support.empty()) continue;
        const std::uint64_t none = std::numeric_limits<std::uint64_t>::max();
        std::uint64_t found = none;
        if (exec == Exec::Parallel) {
            std::atomic<std::uint64_t> best{none};
#pragma omp parallel
            {
                Labeling c{d, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
#pragma omp for schedule(static, 4096)
                for (std::uint64_t t = 0; t < total; ++t) {
                    if (t >= best.load(std::memory_order_relaxed)) continue;
                    decode(t, d, c);
                    if (simultaneous_at(g, fg, c)) {
                        std::uint64_t cur = best.load();
                        while (t < cur && !best.compare_exchange_weak(cur, t)) {
                        }
                    }
                }
            }
            found = best.load();
        } else {
            Labeling c{d, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
            for (std::uint64_t t = 0; t < total && found == none; ++t) {
                decode(t, d, c);
                if (simultaneous_at(g, fg, c)) found = t;
            }
        }
        if (found != none) {
            SigmaResult r;
            r.sigma = d;
            r.witness = Labeling{d, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
            decode(found, d, r.witness);
            return r;
        }
    }
    throw std::logic_error("no simultaneous coloring up to max degree + 1");
}

Labeling orientation_coloring(const Graph& g, int d, Orientation* orientation) {
    if (d <= g.max_degree()) throw std::invalid_argument("orientation coloring needs d > max degree");
    const int n = g.n();
    std::vector<bool> removed(static_cast<std::size_t>(n) + 1, false);
    std::vector<int> degree(static_cast<std::size_t>(n) + 1);
    for (int v = 1; v <= n; ++v) degree[v] = g.degree(v);
    std::vector<bool> reversed(g.m(), false);
    Labeling c{d, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
    for (int step = 0; step < n; ++step) {
        int pick = 0;
        for (int v = 1; v <= n; ++v)
            if (!removed[v] && (pick == 0 || degree[v] > degree[pick])) pick = v;
        c.values[pick] = degree[pick];
        removed[pick] = true;
        for (int u : g.neighbors(pick)) {
            if (removed[u]) continue;
            --degree[u];
            reversed[static_cast<std::size_t>(g.edge_index(pick, u))] = pick > u;
        }
    }
    if (orientation) *orientation = make_orientation(g, std::move(reversed));
    return c;
}

bool bipartite_sigma_two(const Graph& g) {
    auto side = bipartition(g);
    if (!side || !is_connected(g)) throw std::invalid_argument("graph is not connected bipartite");
    long a = 0;
    for (int v = 1; v <= g.n(); ++v) a += (*side)[v] == 0;
    const long b = g.n() - a;
    const long m = static_cast<long>(g.m());
    return a % 2 == m % 2 || b % 2 == m % 2;
}

}  // namespace polycert
