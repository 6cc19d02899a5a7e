#include "polycert/encodings.hpp"

#include <stdexcept>
#include <string>

namespace polycert {

namespace {

using P = Polynomial;

P var(VarId v) { return P::var(v); }
P c(long v) { return P(Rational(v)); }

P sum_of(const std::vector<VarId>& vars) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (VarId v : vars) terms.emplace_back(Monomial::var(v), Rational(1));
    return P::from_terms(std::move(terms));
}

// prod_{s=lo..hi} (v - s)
Generator range_generator(VarId v, long lo, long hi) {
    std::vector<P> factors;
    for (long s = lo; s <= hi; ++s) factors.push_back(var(v) - c(s));
    return Generator::product(std::move(factors));
}

PolySystem make(std::string name, std::vector<std::pair<std::string, std::string>> params) {
    PolySystem sys;
    sys.encoding = std::move(name);
    sys.params = std::move(params);
    return sys;
}

std::string str(long v) { return std::to_string(v); }

}  // namespace

Polynomial edge_polynomial(VarId a, VarId b, int k) {
    std::vector<std::pair<Monomial, Rational>> terms;
    for (int e = 0; e < k; ++e)
        terms.emplace_back(Monomial({{a, static_cast<unsigned>(k - 1 - e)}, {b, static_cast<unsigned>(e)}}), Rational(1));
    return P::from_terms(std::move(terms));
}

PolySystem encode_k_coloring(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("coloring: k must be positive");
    PolySystem sys = make("coloring", {{"k", str(k)}, {"n", str(g.n())}});
    for (int i = 1; i <= g.n(); ++i) {
        sys.domains[VarId::x(i)] = DomainSpec::roots(k);
        sys.generators.push_back(Generator::poly(P(Monomial::var(VarId::x(i), k)) - c(1)));
    }
    for (auto [i, j] : g.edges()) sys.generators.push_back(Generator::poly(edge_polynomial(VarId::x(i), VarId::x(j), k)));
    return sys;
}

PolySystem encode_stable_set(const Graph& g, int k) {
    if (k < 1 || k > g.n()) throw std::invalid_argument("stable-set: need 1 <= k <= n");
    PolySystem sys = make("stable-set", {{"k", str(k)}, {"n", str(g.n())}});
    std::vector<VarId> xs;
    for (int i = 1; i <= g.n(); ++i) xs.push_back(VarId::x(i));
    sys.generators.push_back(Generator::poly(sum_of(xs) - c(k)));
    for (VarId v : xs) {
        sys.domains[v] = DomainSpec::boolean();
        sys.generators.push_back(Generator::poly(var(v) * var(v) - var(v)));
    }
    for (auto [i, j] : g.edges()) sys.generators.push_back(Generator::poly(var(VarId::x(i)) * var(VarId::x(j))));
    return sys;
}

PolySystem encode_stable_set_refutation(const Graph& g, int r, int alpha) {
    if (r < 1) throw std::invalid_argument("stable-refute: r must be positive");
    if (alpha < 0) throw std::invalid_argument("stable-refute: alpha must be non-negative");
    PolySystem sys = make("stable-refute", {{"r", str(r)}, {"alpha", str(alpha)}, {"n", str(g.n())}});
    std::vector<VarId> xs;
    for (int i = 1; i <= g.n(); ++i) xs.push_back(VarId::x(i));
    sys.generators.push_back(Generator::poly(sum_of(xs) - c(alpha + r)));
    for (VarId v : xs) {
        sys.domains[v] = DomainSpec::boolean();
        sys.generators.push_back(Generator::poly(var(v) * var(v) - var(v)));
    }
    for (auto [i, j] : g.edges()) sys.generators.push_back(Generator::poly(var(VarId::x(i)) * var(VarId::x(j))));
    return sys;
}

PolySystem encode_longest_cycle(const Graph& g, int L) {
    const int n = g.n();
    if (L < 3 || L > n) throw std::invalid_argument("cycle: need 3 <= L <= n");
    PolySystem sys = make("cycle", {{"L", str(L)}, {"n", str(n)}});
    std::vector<VarId> ys;
    for (int i = 1; i <= n; ++i) ys.push_back(VarId::y(i));
    sys.generators.push_back(Generator::poly(sum_of(ys) - c(L)));
    for (int i = 1; i <= n; ++i) {
        VarId x = VarId::x(i), y = VarId::y(i);
        sys.domains[x] = DomainSpec::range(1, n);
        sys.domains[y] = DomainSpec::boolean();
        sys.generators.push_back(Generator::product({var(y), var(y) - c(1)}));
        sys.generators.push_back(range_generator(x, 1, n));
        std::vector<P> factors{var(y)};
        for (int j : g.neighbors(i)) {
            P yj = var(VarId::y(j)), yx = yj * var(VarId::x(j));
            factors.push_back(var(x) - yx + yj);
            factors.push_back(var(x) - yx - yj.scaled(L - 1));
        }
        sys.generators.push_back(Generator::product(std::move(factors)));
    }
    return sys;
}

PolySystem encode_hamiltonian(const Graph& g) {
    const int n = g.n();
    if (n < 3) throw std::invalid_argument("hamiltonian: need n >= 3");
    PolySystem sys = make("hamiltonian", {{"n", str(n)}});
    for (int i = 1; i <= n; ++i) {
        VarId x = VarId::x(i);
        sys.domains[x] = DomainSpec::range(1, n);
        sys.generators.push_back(range_generator(x, 1, n));
        std::vector<P> factors;
        for (int j : g.neighbors(i)) {
            P diff = var(x) - var(VarId::x(j));
            factors.push_back(diff + c(1));
            factors.push_back(diff - c(n - 1));
        }
        sys.generators.push_back(Generator::product(std::move(factors)));
    }
    return sys;
}

PolySystem encode_poset_dimension(const Poset& p, int dim) {
    if (dim < 1) throw std::invalid_argument("poset-dim: dim must be positive");
    const int m = p.size();
    PolySystem sys = make("poset-dim", {{"dim", str(dim)}, {"m", str(m)}});
    auto x = [](int i, int k) { return VarId::x(i, k); };
    for (int k = 1; k <= dim; ++k)
        for (int i = 1; i <= m; ++i) {
            sys.domains[x(i, k)] = DomainSpec::range(1, m);
            sys.generators.push_back(range_generator(x(i, k), 1, m));
        }
    for (int k = 1; k <= dim; ++k)
        for (auto [a, b] : p.relations())
            sys.generators.push_back(Generator::poly(var(x(a, k)) - var(x(b, k)) - var(VarId::delta(a, b, k))));
    for (int a = 1; a <= m; ++a)
        for (int b = a + 1; b <= m; ++b) {
            if (p.comparable(a, b)) continue;
            for (auto [i, j] : {std::pair{a, b}, std::pair{b, a}}) {
                std::vector<P> factors;
                for (int k = 1; k <= dim; ++k)
                    factors.push_back(var(x(i, k)) - var(x(j, k)) - var(VarId::delta(i, j, k)));
                sys.generators.push_back(Generator::product(std::move(factors)));
            }
        }
    for (int k = 1; k <= dim; ++k) {
        VarId s = VarId::s(k);
        sys.domains[s] = DomainSpec::witness();
        std::vector<P> factors{var(s)};
        for (int i = 1; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) factors.push_back(var(x(i, k)) - var(x(j, k)));
        sys.generators.push_back(Generator::product(std::move(factors), 1));
    }
    for (int k = 1; k <= dim; ++k)
        for (int i = 1; i <= m; ++i)
            for (int j = 1; j <= m; ++j) {
                if (i == j) continue;
                VarId d = VarId::delta(i, j, k);
                sys.domains[d] = DomainSpec::range(1, m - 1);
                sys.generators.push_back(range_generator(d, 1, m - 1));
            }
    return sys;
}

PolySystem encode_planar_subgraph(const Graph& g, int K) {
    const int n = g.n();
    const int m = static_cast<int>(g.m());
    if (K < 0 || K > m) throw std::invalid_argument("planar-subgraph: need 0 <= K <= |E|");
    const int N = n + m;
    PolySystem sys = make("planar-subgraph", {{"K", str(K)}, {"n", str(n)}, {"m", str(m)}});
    const auto& E = g.edges();
    auto z = [](const Graph::Edge& e) { return var(VarId::z(e.first, e.second)); };
    auto xv = [](int i, int k) { return var(VarId::x(i, k)); };
    auto yv = [](const Graph::Edge& e, int k) { return var(VarId::y(e.first, e.second, k)); };
    auto eid = [&](std::size_t idx) { return n + 1 + static_cast<int>(idx); };
    std::vector<VarId> deltas;
    auto delta = [&](int a, int b, int k) {
        VarId d = VarId::delta(a, b, k);
        deltas.push_back(d);
        return var(d);
    };

    std::vector<VarId> zs;
    for (const auto& e : E) zs.push_back(VarId::z(e.first, e.second));
    sys.generators.push_back(Generator::poly(sum_of(zs) - c(K)));
    for (const auto& e : E) {
        sys.domains[VarId::z(e.first, e.second)] = DomainSpec::boolean();
        sys.generators.push_back(Generator::poly(z(e) * z(e) - z(e)));
    }
    for (int k = 1; k <= 3; ++k) {
        for (int i = 1; i <= n; ++i) {
            sys.domains[VarId::x(i, k)] = DomainSpec::range(1, N);
            sys.generators.push_back(range_generator(VarId::x(i, k), 1, N));
        }
        for (const auto& e : E) {
            VarId y = VarId::y(e.first, e.second, k);
            sys.domains[y] = DomainSpec::range(1, N);
            sys.generators.push_back(range_generator(y, 1, N));
        }
    }
    for (int k = 1; k <= 3; ++k) {
        VarId s = VarId::s(k);
        sys.domains[s] = DomainSpec::witness();
        std::vector<P> factors{var(s)};
        for (int i = 1; i <= n; ++i)
            for (int j = i + 1; j <= n; ++j) factors.push_back(xv(i, k) - xv(j, k));
        for (int i = 1; i <= n; ++i)
            for (const auto& e : E) factors.push_back(xv(i, k) - yv(e, k));
        for (std::size_t a = 0; a < E.size(); ++a)
            for (std::size_t b = a + 1; b < E.size(); ++b) factors.push_back(yv(E[a], k) - yv(E[b], k));
        sys.generators.push_back(Generator::product(std::move(factors), 1));
    }
    for (int k = 1; k <= 3; ++k)
        for (std::size_t a = 0; a < E.size(); ++a)
            for (int i : {E[a].first, E[a].second})
                sys.generators.push_back(
                    Generator::product({z(E[a]), yv(E[a], k) - xv(i, k) - delta(eid(a), i, k)}));
    for (int i = 1; i <= n; ++i)
        for (std::size_t a = 0; a < E.size(); ++a) {
            if (E[a].first == i || E[a].second == i) continue;
            std::vector<P> above{z(E[a])}, below{z(E[a])};
            for (int k = 1; k <= 3; ++k) above.push_back(yv(E[a], k) - xv(i, k) - delta(eid(a), i, k));
            for (int k = 1; k <= 3; ++k) below.push_back(xv(i, k) - yv(E[a], k) - delta(i, eid(a), k));
            sys.generators.push_back(Generator::product(std::move(above)));
            sys.generators.push_back(Generator::product(std::move(below)));
        }
    for (std::size_t a = 0; a < E.size(); ++a)
        for (std::size_t b = a + 1; b < E.size(); ++b) {
            P gate = z(E[a]) * z(E[b]);
            std::vector<P> ab{gate}, ba{gate};
            for (int k = 1; k <= 3; ++k) ab.push_back(yv(E[a], k) - yv(E[b], k) - delta(eid(a), eid(b), k));
            for (int k = 1; k <= 3; ++k) ba.push_back(yv(E[b], k) - yv(E[a], k) - delta(eid(b), eid(a), k));
            sys.generators.push_back(Generator::product(std::move(ab)));
            sys.generators.push_back(Generator::product(std::move(ba)));
        }
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            std::vector<P> ij, ji;
            for (int k = 1; k <= 3; ++k) ij.push_back(xv(i, k) - xv(j, k) - delta(i, j, k));
            for (int k = 1; k <= 3; ++k) ji.push_back(xv(j, k) - xv(i, k) - delta(j, i, k));
            sys.generators.push_back(Generator::product(std::move(ij)));
            sys.generators.push_back(Generator::product(std::move(ji)));
        }
    for (VarId d : deltas) {
        sys.domains[d] = DomainSpec::range(1, N - 1);
        sys.generators.push_back(range_generator(d, 1, N - 1));
    }
    return sys;
}

PolySystem encode_k_colorable_subgraph(const Graph& g, int k, int R) {
    if (k < 1) throw std::invalid_argument("colorable-subgraph: k must be positive");
    if (R < 0 || R > static_cast<int>(g.m())) throw std::invalid_argument("colorable-subgraph: need 0 <= R <= |E|");
    PolySystem sys = make("colorable-subgraph", {{"k", str(k)}, {"R", str(R)}, {"n", str(g.n())}});
    std::vector<VarId> ys;
    for (auto [i, j] : g.edges()) ys.push_back(VarId::y(i, j));
    sys.generators.push_back(Generator::poly(sum_of(ys) - c(R)));
    for (int i = 1; i <= g.n(); ++i) {
        sys.domains[VarId::x(i)] = DomainSpec::roots(k);
        sys.generators.push_back(Generator::poly(P(Monomial::var(VarId::x(i), k)) - c(1)));
    }
    for (auto [i, j] : g.edges()) {
        VarId y = VarId::y(i, j);
        sys.domains[y] = DomainSpec::boolean();
        sys.generators.push_back(Generator::poly(var(y) * var(y) - var(y)));
        sys.generators.push_back(Generator::product({var(y), edge_polynomial(VarId::x(i), VarId::x(j), k)}));
    }
    return sys;
}

PolySystem encode_edge_chromatic(const Graph& g) {
    if (g.m() == 0) throw std::invalid_argument("edge-chromatic: graph has no edges");
    const int D = g.max_degree();
    PolySystem sys = make("edge-chromatic", {{"Delta", str(D)}, {"n", str(g.n())}});
    auto ev = [](int i, int j) { return i < j ? VarId::x(i, j) : VarId::x(j, i); };
    for (auto [i, j] : g.edges()) {
        sys.domains[ev(i, j)] = DomainSpec::roots(static_cast<unsigned>(D));
        sys.generators.push_back(Generator::poly(P(Monomial::var(ev(i, j), D)) - c(1)));
    }
    for (int i = 1; i <= g.n(); ++i) {
        VarId s = VarId::s(i);
        sys.domains[s] = DomainSpec::witness();
        std::vector<P> factors{var(s)};
        const auto& adj = g.neighbors(i);
        for (std::size_t a = 0; a < adj.size(); ++a)
            for (std::size_t b = a + 1; b < adj.size(); ++b)
                factors.push_back(var(ev(i, adj[a])) - var(ev(i, adj[b])));
        sys.generators.push_back(Generator::product(std::move(factors), 1));
    }
    return sys;
}

const std::vector<std::string_view>& encoding_names() {
    static const std::vector<std::string_view> names{
        "coloring", "stable-set", "stable-refute", "cycle", "hamiltonian",
        "poset-dim", "planar-subgraph", "colorable-subgraph", "edge-chromatic"};
    return names;
}

}  // namespace polycert
