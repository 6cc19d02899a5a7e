#pragma once

#include "polycert/monomial.hpp"
#include "polycert/rational.hpp"

#include <functional>
#include <map>
#include <string>
#include <string_view>
#include <vector>

namespace polycert {

/// Sparse multivariate polynomial over the rationals.
///
/// Terms are kept in a map ordered by ascending graded-lex monomial order and
/// never hold a zero coefficient, so structural equality is mathematical
/// equality. Values are immutable once built; every operation returns a new
/// polynomial.
class Polynomial {
public:
    using TermMap = std::map<Monomial, Rational>;

    Polynomial() = default;
    Polynomial(const Rational& c);  // NOLINT: constants convert implicitly
    Polynomial(long c) : Polynomial(Rational(c)) {}  // NOLINT
    Polynomial(int c) : Polynomial(Rational(c)) {}   // NOLINT
    Polynomial(const Monomial& m, const Rational& c = 1);

    static Polynomial var(VarId v) { return Polynomial(Monomial::var(v)); }
    /// Sums duplicate monomials and drops zero coefficients.
    static Polynomial from_terms(std::vector<std::pair<Monomial, Rational>> terms);

    const TermMap& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    /// Total degree; -1 for the zero polynomial.
    int degree() const;
    Rational coefficient(const Monomial& m) const;
    Rational constant_term() const { return coefficient(Monomial()); }
    std::vector<VarId> variables() const;

    Polynomial operator-() const;
    friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    Polynomial scaled(const Rational& c) const;
    Polynomial pow(unsigned e) const;
    Polynomial& operator+=(const Polynomial& b) { return *this = *this + b; }
    Polynomial& operator-=(const Polynomial& b) { return *this = *this - b; }
    Polynomial& operator*=(const Polynomial& b) { return *this = *this * b; }

    friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.terms_ == b.terms_; }

    /// Simultaneous substitution of polynomials for variables.
    Polynomial substitute(const std::map<VarId, Polynomial>& images) const;
    /// Simultaneous renaming of variables.
    Polynomial rename(const std::map<VarId, VarId>& renaming) const;
    /// Keeps the terms whose monomial satisfies the predicate.
    Polynomial filter(const std::function<bool(const Monomial&)>& keep) const;

    /// Canonical text: terms in descending graded-lex order, e.g.
    /// "-1/3*x_1*x_2 + x_3 - 2". The zero polynomial prints as "0".
    std::string to_string() const;
    /// Accepts the canonical form and anything looser built from the same tokens
    /// (any term order, repeated variables, explicit "*1", factors separated by
    /// whitespace instead of "*"). Throws std::invalid_argument.
    static Polynomial parse(std::string_view text);

private:
    TermMap terms_;
};

/// Replaces every exponent e by e mod d and merges collided terms: the normal
/// form modulo the ideal generated by all x^d - 1.
Polynomial normal_form_mod_unity(const Polynomial& p, unsigned d);

/// Exact rational evaluation. Throws std::invalid_argument if a variable of p is unassigned.
Rational eval_rational(const Polynomial& p, const std::map<VarId, Rational>& assignment);

}  // namespace polycert
