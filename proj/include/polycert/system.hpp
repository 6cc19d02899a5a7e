#pragma once

#include "polycert/polynomial.hpp"

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace polycert {

/// Finite value set attached to a variable.
struct DomainSpec {
    enum class Kind { Range, RootsOfUnity, Boolean, Witness };

    Kind kind = Kind::Boolean;
    long lo = 0;
    long hi = 1;
    unsigned order = 0;

    static DomainSpec range(long lo, long hi);
    static DomainSpec roots(unsigned k);
    static DomainSpec boolean() { return {}; }
    /// Inverse witnesses: never enumerated, eliminated by the oracle.
    static DomainSpec witness() { return {Kind::Witness, 0, 0, 0}; }

    /// Number of values (0 for witnesses).
    std::size_t size() const;
    /// Integer values for Range/Boolean; exponents 0..k-1 for RootsOfUnity.
    std::vector<long> values() const;

    /// "range lo hi", "roots k", "bool" or "witness".
    std::string to_string() const;
    static DomainSpec parse(std::string_view text);
    friend bool operator==(const DomainSpec&, const DomainSpec&) = default;
};

/// A generator equation (f_1 * ... * f_r) - c = 0, kept factored so that long
/// products are expanded only on demand. An empty factor list is the constant 1.
struct Generator {
    std::vector<Polynomial> factors;
    Rational constant;

    static Generator poly(Polynomial p);
    static Generator product(std::vector<Polynomial> factors, const Rational& c = 0);

    Polynomial expand() const;
    int degree() const;
    std::vector<VarId> variables() const;
    bool is_plain() const { return factors.size() == 1 && constant == 0; }

    /// Plain generators print as their canonical polynomial; others as
    /// "(f_1) * (f_2) * ... = c".
    std::string to_string() const;
    static Generator parse(std::string_view text);

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// An encoded problem instance.
struct PolySystem {
    std::string encoding;
    std::vector<std::pair<std::string, std::string>> params;
    std::vector<Generator> generators;
    std::map<VarId, DomainSpec> domains;

    /// Throws std::invalid_argument if a generator variable lacks a domain.
    void validate() const;
    std::vector<Polynomial> expanded_generators() const;
    std::size_t variable_count() const { return domains.size(); }
    std::string param(const std::string& key) const;

    /// Round-trippable text: header, domain block, then one generator per line.
    std::string to_text() const;
    static PolySystem parse(std::string_view text);

    friend bool operator==(const PolySystem&, const PolySystem&) = default;
};

}  // namespace polycert
