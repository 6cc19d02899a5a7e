#include "polycert/certificate.hpp"
#include "polycert/encodings.hpp"

namespace polycert {

namespace {

// Hub is x_0 in these tables; rim vertices are x_1, x_2, x_3 (seed) or x_1..x_5 (relation).
constexpr const char* kAlpha = "2/9 x_1^4 + 1/9 x_1^3 x_2 + 1/9 x_1^3 x_0 + 2/9 x_1^2 x_2 x_0";

constexpr const char* kBeta34 =
    "2/9 x_1^3 x_0 + 1/9 x_1 x_2 x_0 x_5 - 1/9 x_1 x_2 x_4 x_5 - 1/9 x_1 x_3 x_0^2 - 2/9 x_1 x_3 x_0 x_4"
    " - 2/9 x_2 x_0^3 - 1/9 x_2 x_0^2 x_4 + 1/9 x_4^4";
constexpr const char* kBeta45 =
    "-2/9 x_1^4 - 2/9 x_1^2 x_2 x_0 - 1/9 x_1^2 x_2 x_4 + 1/9 x_1^2 x_0 x_4 - 1/9 x_1 x_2 x_3 x_0"
    " + 1/9 x_1 x_2 x_3 x_4 - 1/9 x_1 x_2 x_0^2 + 1/9 x_1 x_2 x_4^2 - 2/9 x_0^4 + 1/9 x_0^3 x_4 - 1/9 x_4^4"
    " + 1/9 x_4^3 x_5 - 1/9 x_4 x_5^3";
constexpr const char* kBeta01 =
    "-1/3 x_1 x_3 x_0^2 - 2/9 x_3 x_0 x_4^2 - 5/9 x_1 x_3^2 x_0 - 1/3 x_1^2 x_3 x_0 + 2/9 x_1^2 x_4 x_5"
    " + 2/9 x_0^2 x_4 x_5 - 1/9 x_1 x_4 x_5^2 + 2/9 x_3^2 x_0 x_4 + 2/9 x_2 x_3 x_4^2 + 1/9 x_1^2 x_2 x_3"
    " - 1/9 x_1^2 x_2 x_5 + 2/9 x_1^3 x_3 - 2/9 x_1^3 x_5 + 1/9 x_1^2 x_0 x_5 - 2/9 x_1^2 x_0^2"
    " + 2/9 x_1^2 x_4^2 - 4/9 x_1 x_3^2 x_4 - 2/3 x_1 x_3 x_0 x_4 - 4/9 x_1 x_0 x_4 x_5 - 5/9 x_1 x_0^2 x_4"
    " - 4/9 x_1 x_0 x_4^2 - 1/9 x_1 x_0 x_5^2 - 1/9 x_1 x_4^2 x_5 - 2/9 x_1 x_0^3 + 2/9 x_2 x_3^2 x_0"
    " + 1/9 x_2 x_3^2 x_4 - 1/9 x_2 x_3 x_5^2 + 2/9 x_2 x_0 x_4^2 + 1/3 x_2 x_3 x_0 x_4 - 1/9 x_2 x_3 x_0 x_5"
    " + 1/9 x_2 x_4^3 - 4/9 x_3^3 x_0 - 1/3 x_3^4 - 1/9 x_3^3 x_4 + 2/9 x_3^2 x_4^2 + 2/9 x_0^2 x_5^2"
    " - 1/9 x_0 x_4^3";
constexpr const char* kBeta03 =
    "2/9 x_1^4 + 1/9 x_1^3 x_2 + 4/9 x_1^3 x_0 + 4/9 x_1^3 x_4 - 1/9 x_1^2 x_2 x_4 + 1/3 x_1^2 x_3^2"
    " + 1/9 x_1^2 x_3 x_0 + 1/9 x_1^2 x_3 x_4 + 5/9 x_1^2 x_0^2 + 5/9 x_1^2 x_0 x_4 + 2/9 x_1^2 x_4^2"
    " - 2/9 x_1 x_2 x_0^2 - 1/9 x_1 x_2 x_0 x_4 - 1/9 x_1 x_2 x_0 x_5 + 1/9 x_1 x_2 x_4 x_5 + 1/3 x_1 x_3^2 x_0"
    " + 2/9 x_1 x_3 x_0^2 + 1/3 x_1 x_3 x_0 x_4 + 1/3 x_3^2 x_0^2 - 1/9 x_3 x_0^3 - 1/9 x_3 x_0^2 x_4"
    " - 2/9 x_3 x_0 x_4^2 - 2/9 x_0^4 - 2/9 x_0^3 x_4";
constexpr const char* kBeta04 =
    "1/9 x_1^3 x_5 - 2/9 x_1^2 x_2 x_3 + 1/9 x_1^2 x_2 x_5 - 4/9 x_1^2 x_3^2 - 1/9 x_1 x_2 x_3 x_4"
    " + 1/9 x_1 x_2 x_0^2 - 1/9 x_1 x_2 x_4^2 + 1/9 x_1 x_3 x_0^2 + 2/9 x_1 x_3 x_0 x_4 + 1/3 x_1 x_0^3"
    " + 1/9 x_1 x_0^2 x_4 + 1/9 x_1 x_0^2 x_5 + 1/9 x_2 x_3 x_0 x_5 + 1/9 x_2 x_3 x_5^2 + 2/9 x_3^3 x_0"
    " + 1/9 x_3^2 x_0 x_4 - 1/9 x_3^2 x_4^2 + 1/3 x_3 x_0^3 + 1/9 x_3 x_0 x_4^2 - 1/9 x_3 x_4^3 + 2/9 x_0^4";
constexpr const char* kBeta05 =
    "-1/9 x_1^3 x_2 + 1/9 x_1^3 x_4 + 1/9 x_1^2 x_2 x_3 + 1/9 x_1^2 x_2 x_4 - 1/9 x_1^2 x_0^2"
    " + 2/9 x_1 x_2 x_3 x_0 - 1/9 x_1 x_2 x_3 x_4 + 1/9 x_1 x_2 x_0^2 - 1/9 x_1 x_2 x_4^2 - 1/9 x_1 x_0^3"
    " + 1/9 x_1 x_0^2 x_4 - 1/9 x_2 x_3 x_0 x_4 - 1/9 x_2 x_3 x_4^2 - 1/9 x_0 x_4^2 x_5 - 1/9 x_0 x_4 x_5^2"
    " + 1/9 x_4^2 x_5^2 + 1/9 x_4 x_5^3";

constexpr const char* kSeedE12 =
    "4/9 x_1^4 - 5/9 x_1^3 x_2 - 2/9 x_1^3 x_3 - 4/9 x_1^3 x_0 + 2/9 x_1^2 x_2 x_0 + 2/9 x_1^2 x_3 x_0";
constexpr const char* kSeedE23 = "1/9 x_1^4 + 2/9 x_1^3 x_2 - 1/9 x_1^3 x_0 - 2/9 x_1^2 x_2 x_0";
constexpr const char* kSeedE20 = "1/3 x_1^3 x_2";
constexpr const char* kSeedE10 = "1/3 x_1^4";
constexpr const char* kSeedE30 = "-1/3 x_1^4 - 1/3 x_1^3 x_2";
constexpr const char* kSeedV1 = "-x_1^3 - 1";

WheelSyzygy build_syzygy() {
    WheelSyzygy s;
    s.alpha = Polynomial::parse(kAlpha);
    s.betas = {{{3, 4}, Polynomial::parse(kBeta34)}, {{4, 5}, Polynomial::parse(kBeta45)},
               {{0, 1}, Polynomial::parse(kBeta01)}, {{0, 3}, Polynomial::parse(kBeta03)},
               {{0, 4}, Polynomial::parse(kBeta04)}, {{0, 5}, Polynomial::parse(kBeta05)}};
    return s;
}

}  // namespace

const WheelSyzygy& odd_wheel_syzygy() {
    static const WheelSyzygy s = build_syzygy();
    return s;
}

Certificate odd_wheel_seed_certificate() {
    const Graph g = graphs::odd_wheel(3);
    auto system = std::make_shared<const PolySystem>(encode_k_coloring(g, 3));
    const std::map<VarId, VarId> hub{{VarId::x(0), VarId::x(4)}};
    auto at = [&](const char* text) { return Polynomial::parse(text).rename(hub); };
    std::vector<Polynomial> coeffs(system->generators.size());
    auto edge = [&](int a, int b) -> Polynomial& { return coeffs[static_cast<std::size_t>(g.n() + g.edge_index(a, b))]; };
    coeffs[0] = at(kSeedV1);
    edge(1, 2) = at(kSeedE12);
    edge(1, 3) = at(kAlpha);
    edge(1, 4) = at(kSeedE10);
    edge(2, 3) = at(kSeedE23);
    edge(2, 4) = at(kSeedE20);
    edge(3, 4) = at(kSeedE30);
    return Certificate::make(std::move(system), std::move(coeffs));
}

}  // namespace polycert
