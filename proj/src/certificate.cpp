#include "polycert/certificate.hpp"

#include "polycert/encodings.hpp"
#include "polycert/graph_oracles.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace polycert {

int max_degree(const std::vector<Polynomial>& polys) {
    int d = -1;
    for (const auto& p : polys) d = std::max(d, p.degree());
    return d;
}

Certificate Certificate::make(std::shared_ptr<const PolySystem> system, std::vector<Polynomial> coefficients) {
    Certificate c;
    c.system = std::move(system);
    c.degree = max_degree(coefficients);
    c.coefficients = std::move(coefficients);
    return c;
}

Polynomial combination(const Certificate& cert, Exec exec) {
    if (!cert.system) throw std::invalid_argument("certificate has no system");
    const auto& gens = cert.system->generators;
    if (gens.size() != cert.coefficients.size())
        throw std::invalid_argument("certificate has " + std::to_string(cert.coefficients.size()) +
                                    " coefficients for " + std::to_string(gens.size()) + " generators");
    const std::size_t n = gens.size();
    std::vector<Polynomial> parts(n);
    auto one = [&](std::size_t i) {
        if (!cert.coefficients[i].is_zero()) parts[i] = cert.coefficients[i] * gens[i].expand();
    };
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (std::size_t i = 0; i < n; ++i) one(i);
    } else {
        for (std::size_t i = 0; i < n; ++i) one(i);
    }
    std::vector<std::pair<Monomial, Rational>> terms;
    for (const auto& p : parts)
        for (const auto& [m, c] : p.terms()) terms.emplace_back(m, c);
    return Polynomial::from_terms(std::move(terms));
}

bool verify_certificate(const Certificate& cert, Exec exec) {
    if (cert.degree != max_degree(cert.coefficients)) return false;
    return combination(cert, exec) == Polynomial(1);
}

Certificate assemble_certificate(std::shared_ptr<const PolySystem> system, const LinearSystem& ls,
                                 const std::vector<Rational>& solution) {
    std::vector<std::vector<std::pair<Monomial, Rational>>> terms(system->generators.size());
    for (std::size_t c = 0; c < ls.columns.size(); ++c)
        if (solution[c] != 0) terms[ls.columns[c].generator].emplace_back(ls.columns[c].multiplier, solution[c]);
    std::vector<Polynomial> coeffs;
    coeffs.reserve(terms.size());
    for (auto& t : terms) coeffs.push_back(Polynomial::from_terms(std::move(t)));
    return Certificate::make(std::move(system), std::move(coeffs));
}

namespace {

std::vector<VarId> system_variables(const PolySystem& s) {
    std::vector<VarId> vars;
    for (const auto& [v, d] : s.domains) vars.push_back(v);
    return vars;
}

}  // namespace

CertificateSearch find_certificate(const PolySystem& system, unsigned max_degree, const FindOptions& options) {
    CertificateSearch out;
    auto shared = std::make_shared<const PolySystem>(system);
    const auto gens = system.expanded_generators();
    const auto vars = system_variables(system);
    for (unsigned d = options.min_degree; d <= max_degree; ++d) {
        auto start = std::chrono::steady_clock::now();
        BuildOptions bo;
        bo.degree = d;
        bo.keep_prob = options.keep_prob;
        bo.seed = options.seed;
        bo.support_filter = options.support_filter;
        bo.exec = options.exec;
        LinearSystem ls = build_system(gens, vars, bo);
        auto solution = solve_exact(ls);
        DegreeAttempt attempt{d, ls.rows.size(), ls.columns.size(), ls.nnz(), solution.has_value(), 0};
        attempt.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        out.attempts.push_back(attempt);
        if (solution) {
            Certificate cert = assemble_certificate(shared, ls, *solution);
            if (!verify_certificate(cert, options.exec))
                throw std::logic_error("solver returned a solution that does not verify");
            out.certificate = std::move(cert);
            return out;
        }
    }
    return out;
}

namespace {

int param_int(const PolySystem& s, const char* key) {
    std::string v = s.param(key);
    if (v.empty()) throw std::invalid_argument(std::string("system lacks parameter ") + key);
    return std::stoi(v);
}

void require_coloring_system(const Certificate& cert, const Graph& g, int k) {
    if (!cert.system || cert.system->encoding != "coloring" ||
        cert.system->generators != encode_k_coloring(g, k).generators)
        throw std::invalid_argument("certificate is not for the coloring system of the given graph");
}

}  // namespace

Certificate contract_certificate(const Certificate& cert, const Graph& g, int i, int j) {
    if (!cert.system) throw std::invalid_argument("certificate has no system");
    const int k = param_int(*cert.system, "k");
    require_coloring_system(cert, g, k);
    const Graph h = identify_vertices(g, i, j);
    auto target = std::make_shared<const PolySystem>(encode_k_coloring(h, k));
    const int keep = std::min(i, j), drop = std::max(i, j);
    auto image = [&](int v) { return v == drop ? keep : (v > drop ? v - 1 : v); };
    std::map<VarId, VarId> renaming;
    for (int v = 1; v <= g.n(); ++v)
        if (image(v) != v) renaming.emplace(VarId::x(v), VarId::x(image(v)));

    std::vector<Polynomial> coeffs(target->generators.size());
    for (int v = 1; v <= g.n(); ++v)
        coeffs[static_cast<std::size_t>(image(v) - 1)] += cert.coefficients[static_cast<std::size_t>(v - 1)].rename(renaming);
    for (std::size_t e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges()[e];
        int idx = h.edge_index(image(a), image(b));
        coeffs[static_cast<std::size_t>(h.n() + idx)] += cert.coefficients[static_cast<std::size_t>(g.n()) + e].rename(renaming);
    }
    return Certificate::make(std::move(target), std::move(coeffs));
}

Polynomial WheelSyzygy::residual() const {
    auto e = [](int i, int j) {
        return edge_polynomial(VarId::x(i), VarId::x(j), 3);
    };
    Polynomial r = alpha * (e(1, 5) - e(1, 3));
    for (const auto& [edge, beta] : betas) r += beta * e(edge.first, edge.second);
    return r;
}

Certificate extend_odd_wheel_certificate(const Certificate& cert, int n) {
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("odd wheel extension needs an odd rim size >= 3");
    const Graph g = graphs::odd_wheel(n);
    require_coloring_system(cert, g, 3);
    const Graph h = graphs::odd_wheel(n + 2);
    auto target = std::make_shared<const PolySystem>(encode_k_coloring(h, 3));
    const int hub = n + 1, new_hub = n + 3;
    const std::map<VarId, VarId> hub_move{{VarId::x(hub), VarId::x(new_hub)}};
    auto image = [&](int v) { return v == hub ? new_hub : v; };

    const WheelSyzygy& syz = odd_wheel_syzygy();
    const std::map<VarId, VarId> place{{VarId::x(0), VarId::x(new_hub)}, {VarId::x(3), VarId::x(n)},
                                       {VarId::x(4), VarId::x(n + 1)}, {VarId::x(5), VarId::x(n + 2)}};
    const Polynomial alpha = syz.alpha.rename(place);

    std::vector<Polynomial> coeffs(target->generators.size());
    auto edge_slot = [&](int a, int b) {
        int idx = h.edge_index(a, b);
        if (idx < 0) throw std::logic_error("odd wheel extension: missing edge");
        return static_cast<std::size_t>(h.n() + idx);
    };
    for (int v = 1; v <= g.n(); ++v)
        coeffs[static_cast<std::size_t>(image(v) - 1)] += cert.coefficients[static_cast<std::size_t>(v - 1)].rename(hub_move);
    for (std::size_t e = 0; e < g.m(); ++e) {
        auto [a, b] = g.edges()[e];
        Polynomial c = cert.coefficients[static_cast<std::size_t>(g.n()) + e].rename(hub_move);
        if (a == 1 && b == n) {
            if (!(c == alpha))
                throw std::invalid_argument("odd wheel extension: coefficient of the closing rim edge is not the expected one");
            coeffs[edge_slot(1, n + 2)] += alpha;
            continue;
        }
        coeffs[edge_slot(image(a), image(b))] += c;
    }
    auto vertex = [&](int syzygy_label) {
        switch (syzygy_label) {
            case 0: return new_hub;
            case 1: return 1;
            case 2: return 2;
            case 3: return n;
            case 4: return n + 1;
            default: return n + 2;
        }
    };
    for (const auto& [edge, beta] : syz.betas)
        coeffs[edge_slot(vertex(edge.first), vertex(edge.second))] += beta.rename(place);
    return Certificate::make(std::move(target), std::move(coeffs));
}

TrialSummary sparsification_trial(const PolySystem& system, unsigned degree, double keep_prob, std::size_t trials,
                                  std::uint64_t seed, Exec exec) {
    TrialSummary out;
    out.trials = trials;
    out.outcomes.assign(trials, 0);
    auto shared = std::make_shared<const PolySystem>(system);
    const auto gens = system.expanded_generators();
    const auto vars = system_variables(system);
    auto run = [&](std::size_t t) {
        BuildOptions bo;
        bo.degree = degree;
        bo.keep_prob = keep_prob;
        bo.seed = seed + t;
        bo.exec = Exec::Serial;
        LinearSystem ls = build_system(gens, vars, bo);
        auto solution = solve_exact(ls);
        if (!solution) return;
        Certificate cert = assemble_certificate(shared, ls, *solution);
        out.outcomes[t] = verify_certificate(cert, Exec::Serial) ? 1 : 0;
    };
    const long T = static_cast<long>(trials);
    if (exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 1)
        for (long t = 0; t < T; ++t) run(static_cast<std::size_t>(t));
    } else {
        for (long t = 0; t < T; ++t) run(static_cast<std::size_t>(t));
    }
    for (char o : out.outcomes) out.successes += o ? 1 : 0;
    return out;
}

std::string certificate_to_json(const Certificate& cert) {
    using nlohmann::json;
    const PolySystem& s = *cert.system;
    json j;
    j["format"] = "polycert-certificate/1";
    j["encoding"] = s.encoding;
    j["params"] = json::array();
    for (const auto& [k, v] : s.params) j["params"].push_back(json::array({k, v}));
    j["domains"] = json::object();
    for (const auto& [v, d] : s.domains) j["domains"][v.to_string()] = d.to_string();
    j["generators"] = json::array();
    for (const auto& g : s.generators) j["generators"].push_back(g.to_string());
    j["coefficients"] = json::array();
    for (const auto& c : cert.coefficients) j["coefficients"].push_back(c.to_string());
    j["degree"] = cert.degree;
    return j.dump(2) + "\n";
}

Certificate certificate_from_json(std::string_view text) {
    using nlohmann::json;
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
    }
    try {
        if (j.at("format").get<std::string>() != "polycert-certificate/1")
            throw std::invalid_argument("certificate JSON: unknown format");
        auto sys = std::make_shared<PolySystem>();
        sys->encoding = j.at("encoding").get<std::string>();
        for (const auto& p : j.at("params")) sys->params.emplace_back(p.at(0).get<std::string>(), p.at(1).get<std::string>());
        for (const auto& [k, v] : j.at("domains").items()) sys->domains[VarId::parse(k)] = DomainSpec::parse(v.get<std::string>());
        for (const auto& g : j.at("generators")) sys->generators.push_back(Generator::parse(g.get<std::string>()));
        sys->validate();
        std::vector<Polynomial> coeffs;
        for (const auto& c : j.at("coefficients")) coeffs.push_back(Polynomial::parse(c.get<std::string>()));
        Certificate cert;
        cert.system = std::move(sys);
        cert.coefficients = std::move(coeffs);
        cert.degree = j.at("degree").get<int>();
        return cert;
    } catch (const json::exception& e) {
        throw std::invalid_argument(std::string("certificate JSON: ") + e.what());
    }
}

}  // namespace polycert
