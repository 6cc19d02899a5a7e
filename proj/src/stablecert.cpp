#include "polycert/stablecert.hpp"

#include "polycert/encodings.hpp"

#include <stdexcept>

namespace polycert {

namespace {

Monomial set_monomial(const VertexSet& s) {
    std::vector<Monomial::Entry> e;
    for (int v : s) e.push_back({VarId::x(v), 1});
    return Monomial(std::move(e));
}

Monomial without(const VertexSet& s, std::size_t skip) {
    VertexSet rest;
    for (std::size_t t = 0; t < s.size(); ++t)
        if (t != skip) rest.push_back(s[t]);
    return set_monomial(rest);
}

}  // namespace

StableSetPolynomial StableSetPolynomial::of(const Graph& g) {
    StableSetPolynomial p;
    p.sets = enumerate_stable_sets(g).by_size;
    for (const auto& level : p.sets) {
        std::vector<std::pair<Monomial, Rational>> terms;
        for (const auto& s : level) terms.emplace_back(set_monomial(s), 1);
        p.by_size.push_back(Polynomial::from_terms(std::move(terms)));
    }
    return p;
}

std::vector<Rational> compute_constants(int alpha, int r) {
    if (r < 1 || alpha < 0) throw std::invalid_argument("constants need r >= 1 and alpha >= 0");
    std::vector<Rational> c(static_cast<std::size_t>(alpha) + 1);
    c[0] = Rational(1, alpha + r);
    for (int i = 1; i <= alpha; ++i) c[i] = Rational(i) * c[i - 1] / Rational(alpha + r - i);
    return c;
}

Certificate construct_certificate(const Graph& g, int r) {
    const StableSetPolynomial P = StableSetPolynomial::of(g);
    const int alpha = P.alpha();
    const std::vector<Rational> C = compute_constants(alpha, r);
    auto system = std::make_shared<const PolySystem>(encode_stable_set_refutation(g, r, alpha));
    const int n = g.n();

    Polynomial A;
    for (int i = 0; i <= alpha; ++i) A -= P.by_size[i].scaled(C[i]);
    std::vector<std::vector<std::pair<Monomial, Rational>>> Q(static_cast<std::size_t>(n) + 1);
    std::vector<std::vector<std::pair<Monomial, Rational>>> QE(g.m());

    for (int i = 0; i <= alpha; ++i) {
        for (const VertexSet& d : P.sets[i]) {
            for (int k = 1; k <= n; ++k) {
                bool repeated = false;
                for (int v : d) repeated = repeated || v == k;
                if (repeated) continue;
                std::size_t l = 0;
                while (l < d.size() && !g.adjacent(k, d[l])) ++l;
                if (l == d.size()) {
                    Q[k].emplace_back(set_monomial(d), C[i + 1]);
                } else {
                    QE[g.edge_index(k, d[l])].emplace_back(without(d, l), C[i]);
                }
            }
        }
    }

    std::vector<Polynomial> coeffs;
    coeffs.reserve(1 + n + g.m());
    coeffs.push_back(std::move(A));
    for (int k = 1; k <= n; ++k) coeffs.push_back(Polynomial::from_terms(std::move(Q[k])));
    for (auto& t : QE) coeffs.push_back(Polynomial::from_terms(std::move(t)));
    return Certificate::make(std::move(system), std::move(coeffs));
}

Graph refutation_graph(const PolySystem& system) {
    if (system.encoding != "stable-refute") throw std::invalid_argument("not a stable-set refutation system");
    const int n = std::stoi(system.param("n"));
    std::vector<Graph::Edge> edges;
    for (std::size_t t = 1 + static_cast<std::size_t>(n); t < system.generators.size(); ++t) {
        const auto vars = system.generators[t].variables();
        if (vars.size() != 2) throw std::invalid_argument("not a stable-set refutation system");
        edges.emplace_back(vars[0].index(0), vars[1].index(0));
    }
    Graph g(n, edges);
    const int r = std::stoi(system.param("r"));
    const int alpha = std::stoi(system.param("alpha"));
    if (system.generators != encode_stable_set_refutation(g, r, alpha).generators)
        throw std::invalid_argument("not a stable-set refutation system");
    return g;
}

Certificate reduce_certificate(const Certificate& cert) {
    if (!cert.system) throw std::invalid_argument("certificate has no system");
    const Graph g = refutation_graph(*cert.system);
    const std::size_t n = static_cast<std::size_t>(g.n());
    if (cert.coefficients.size() != cert.system->generators.size())
        throw std::invalid_argument("certificate length does not match its system");
    const Polynomial B = cert.system->generators[0].expand();

    std::vector<Polynomial> coeffs = cert.coefficients;
    Polynomial& A = coeffs[0];
    for (;;) {
        // Largest offending monomial first.
        const std::pair<const Monomial, Rational>* bad = nullptr;
        for (auto it = A.terms().rbegin(); it != A.terms().rend() && !bad; ++it) {
            const Monomial& m = it->first;
            bool ok = m.is_square_free();
            for (std::size_t a = 0; ok && a < m.entries().size(); ++a)
                for (std::size_t b = a + 1; ok && b < m.entries().size(); ++b)
                    ok = !g.adjacent(m.entries()[a].first.index(0), m.entries()[b].first.index(0));
            if (!ok) bad = &*it;
        }
        if (!bad) break;
        const Monomial m = bad->first;
        const Rational c = bad->second;
        A -= Polynomial(m, c);
        const auto& ent = m.entries();
        std::size_t sq = 0;
        while (sq < ent.size() && ent[sq].second < 2) ++sq;
        if (sq < ent.size()) {
            const VarId v = ent[sq].first;
            const Monomial rest = m / Monomial::var(v, 2);
            A += Polynomial(m / Monomial::var(v), c);
            coeffs[static_cast<std::size_t>(v.index(0))] += Polynomial(rest, c) * B;
            continue;
        }
        int best = -1;
        for (std::size_t a = 0; a < ent.size(); ++a)
            for (std::size_t b = a + 1; b < ent.size(); ++b) {
                int e = g.edge_index(ent[a].first.index(0), ent[b].first.index(0));
                if (e >= 0 && (best < 0 || e < best)) best = e;
            }
        auto [i, j] = g.edges()[static_cast<std::size_t>(best)];
        const Monomial rest = m / (Monomial::var(VarId::x(i)) * Monomial::var(VarId::x(j)));
        coeffs[1 + n + static_cast<std::size_t>(best)] += Polynomial(rest, c) * B;
    }
    return Certificate::make(cert.system, std::move(coeffs));
}

bool check_term_per_stable_set(const Certificate& cert, const Graph& g) {
    const Certificate reduced = reduce_certificate(cert);
    if (!(refutation_graph(*reduced.system) == g)) throw std::invalid_argument("certificate is for a different graph");
    const Polynomial& A = reduced.coefficients[0];
    for (const auto& level : enumerate_stable_sets(g).by_size)
        for (const auto& s : level)
            if (A.coefficient(set_monomial(s)) == 0) return false;
    return true;
}

}  // namespace polycert
