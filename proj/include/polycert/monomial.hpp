#pragma once

#include "polycert/var.hpp"

#include <compare>
#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace polycert {

/// A power product of variables, stored sparsely and sorted by VarId.
/// No zero exponents are stored; the empty product is the monomial 1.
class Monomial {
public:
    using Entry = std::pair<VarId, unsigned>;

    Monomial() = default;
    /// Entries may be unsorted and may repeat a variable; zero exponents are dropped.
    explicit Monomial(std::vector<Entry> entries);

    static Monomial var(VarId v, unsigned exp = 1);

    std::span<const Entry> entries() const { return entries_; }
    unsigned degree() const { return degree_; }
    bool is_one() const { return entries_.empty(); }
    unsigned exponent(VarId v) const;
    bool is_square_free() const;
    bool divides(const Monomial& other) const;

    Monomial operator*(const Monomial& other) const;
    /// other must divide *this.
    Monomial operator/(const Monomial& other) const;
    /// Every exponent replaced by its residue modulo d.
    Monomial reduce_exponents(unsigned d) const;

    /// Graded lexicographic order: total degree first, then the first variable
    /// (in VarId order) whose exponents differ decides, larger exponent is larger.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.degree_ == b.degree_ && a.entries_ == b.entries_;
    }

    /// "x_1^2*y_3", or "1" for the empty product.
    std::string to_string() const;
    std::size_t hash() const;

private:
    std::vector<Entry> entries_;
    unsigned degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// All monomials of total degree at most max_degree in the given variables,
/// in ascending graded-lex order.
std::vector<Monomial> monomials_up_to(std::span<const VarId> vars, unsigned max_degree);

}  // namespace polycert
