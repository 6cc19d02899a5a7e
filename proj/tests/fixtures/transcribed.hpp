#pragma once

#include "polycert/certificate.hpp"
#include "polycert/encodings.hpp"

#include <map>
#include <string>
#include <utility>

namespace polycert::testing {

/// Builds a certificate for `system` on graph `g` from coefficient texts keyed
/// by vertex {v, 0} or edge {i, j}. Target-equation coefficients use key {0, 0}.
inline Certificate certificate_from_texts(const Graph& g, PolySystem system, bool has_target,
                                          const std::map<std::pair<int, int>, std::string>& texts) {
    std::vector<Polynomial> coeffs(system.generators.size());
    const std::size_t base = has_target ? 1 : 0;
    for (const auto& [key, text] : texts) {
        std::size_t slot;
        if (key.first == 0) slot = 0;
        else if (key.second == 0) slot = base + static_cast<std::size_t>(key.first - 1);
        else slot = base + static_cast<std::size_t>(g.n() + g.edge_index(key.first, key.second));
        coeffs[slot] = Polynomial::parse(text);
    }
    return Certificate::make(std::make_shared<const PolySystem>(std::move(system)), std::move(coeffs));
}

/// The degree-four certificate of non-3-colorability of K4.
inline Certificate k4_certificate() {
    const Graph g = graphs::complete(4);
    return certificate_from_texts(
        g, encode_k_coloring(g, 3), false,
        {{{1, 0}, "-x_1^3 - 1"},
         {{2, 4}, "4/9 x_4^4 - 5/9 x_4^3 x_2 - 2/9 x_4^3 x_3 - 4/9 x_4^3 x_1 + 2/9 x_4^2 x_2 x_1 + 2/9 x_4^2 x_3 x_1"},
         {{2, 3}, "1/9 x_4^4 + 2/9 x_4^3 x_2 - 1/9 x_4^3 x_1 - 2/9 x_4^2 x_2 x_1"},
         {{3, 4}, "2/9 x_4^4 + 1/9 x_4^3 x_2 + 1/9 x_4^3 x_1 + 2/9 x_4^2 x_2 x_1"},
         {{1, 4}, "-2/3 x_4^4 + x_4^3 x_1 - x_4 x_1^3 + x_1^4"},
         {{1, 2}, "1/3 x_4^3 x_2"},
         {{1, 3}, "-1/3 x_4^4 - 1/3 x_4^3 x_2"}});
}

/// The degree-two certificate that T(5,3) has no stable set of size 3.
inline Certificate turan53_certificate() {
    const Graph g = graphs::turan(5, 3);
    return certificate_from_texts(
        g, encode_stable_set_refutation(g, 1, 2), true,
        {{{0, 0}, "-1/3 x_1 x_2 - 1/3 x_3 x_4 - 1/6 x_1 - 1/6 x_2 - 1/6 x_3 - 1/6 x_4 - 1/6 x_5 - 1/3"},
         {{1, 3}, "1/3 x_4 + 1/3 x_2 + 1/3"},
         {{1, 4}, "1/3 x_2 + 1/3"},
         {{1, 5}, "1/3 x_2 + 1/3"},
         {{2, 3}, "1/3 x_4 + 1/3"},
         {{2, 4}, "1/3"},
         {{2, 5}, "1/3"},
         {{3, 5}, "1/3 x_4 + 1/3"},
         {{4, 5}, "1/3"},
         {{1, 0}, "1/3 x_2 + 1/6"},
         {{2, 0}, "1/3 x_1 + 1/6"},
         {{3, 0}, "1/3 x_4 + 1/6"},
         {{4, 0}, "1/3 x_3 + 1/6"},
         {{5, 0}, "1/6"}});
}

}  // namespace polycert::testing
