#pragma once

#include "polycert/exec.hpp"
#include "polycert/system.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

namespace polycert {

/// Unknown of the linear system: the coefficient of `multiplier` in the
/// certificate coefficient of generator `generator`.
struct Column {
    std::size_t generator;
    Monomial multiplier;
    friend bool operator==(const Column&, const Column&) = default;
};

/// One equation per monomial of sum_i alpha_i f_i; the constant monomial's
/// right-hand side is 1, every other is 0.
struct LinearSystem {
    std::vector<Column> columns;
    std::vector<Monomial> rows;  // ascending graded-lex; rows[0] is the monomial 1
    std::vector<std::vector<std::pair<std::size_t, Rational>>> row_entries;  // sorted by column

    std::size_t constant_row() const { return 0; }
    std::size_t nnz() const;
    friend bool operator==(const LinearSystem&, const LinearSystem&) = default;
};

struct BuildOptions {
    unsigned degree = 0;
    /// Each admissible column is kept with this probability (1 keeps all without drawing).
    double keep_prob = 1.0;
    std::uint64_t seed = 0;
    /// Optional restriction on multiplier monomials.
    std::function<bool(const Monomial&)> support_filter;
    Exec exec = Exec::Parallel;
};

/// Builds the degree-bounded system. Multipliers range over all monomials of
/// degree <= options.degree in the variables of `system`, generator-major and
/// ascending graded-lex within a generator. Sparsification draws one value of
/// std::mt19937_64(seed) per admissible column in that order.
LinearSystem build_system(const PolySystem& system, const BuildOptions& options);
/// Same, from already expanded generators.
LinearSystem build_system(const std::vector<Polynomial>& generators, const std::vector<VarId>& variables,
                          const BuildOptions& options);

/// Exact sparse Gaussian elimination with Markowitz pivoting (minimum
/// (r-1)(c-1), ties by row then column). Returns a solution with free unknowns
/// set to zero, or nothing when the system is inconsistent.
std::optional<std::vector<Rational>> solve_exact(const LinearSystem& ls);

}  // namespace polycert
