#pragma once

#include "polycert/polynomial.hpp"

#include <cstdint>
#include <map>
#include <vector>

namespace polycert {

/// Integer coefficients of the k-th cyclotomic polynomial, constant term first.
/// Computed once per k by exact division of x^k - 1 and cached.
const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned k);

/// An element of Q(w), w a primitive k-th root of unity, held as the
/// coefficients (in powers of w) of its unique representative of degree
/// below deg(Phi_k).
struct CyclotomicValue {
    unsigned order = 1;
    std::vector<Rational> coords;

    bool is_zero() const;
    friend bool operator==(const CyclotomicValue&, const CyclotomicValue&) = default;
};

/// Reduces a vector of coefficients of powers w^0..w^{n-1} modulo Phi_k.
CyclotomicValue reduce_cyclotomic(std::vector<Rational> powers, unsigned k);

/// Value of p at x_v = w^{assignment(v)}. Throws std::invalid_argument for a
/// variable without an assignment.
CyclotomicValue eval_cyclotomic(const Polynomial& p, unsigned k, const std::map<VarId, unsigned>& assignment);

/// Exact zero test for sum_i c_i w^i with small integer data (i < values.size()).
/// Used on hot paths where the coefficients are known to fit.
bool cyclotomic_is_zero(std::vector<__int128> values, unsigned k);

}  // namespace polycert
