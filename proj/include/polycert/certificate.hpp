#pragma once

#include "polycert/exec.hpp"
#include "polycert/graph.hpp"
#include "polycert/linear_system.hpp"
#include "polycert/system.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace polycert {

/// Coefficients alpha_i, one per generator of `system`, with sum alpha_i f_i = 1.
struct Certificate {
    std::shared_ptr<const PolySystem> system;
    std::vector<Polynomial> coefficients;
    int degree = -1;

    /// Sets degree to the maximum coefficient degree (-1 if all are zero).
    static Certificate make(std::shared_ptr<const PolySystem> system, std::vector<Polynomial> coefficients);
};

int max_degree(const std::vector<Polynomial>& polys);

/// sum alpha_i f_i. Throws std::invalid_argument on a length mismatch.
Polynomial combination(const Certificate& cert, Exec exec = Exec::Parallel);
/// True iff the combination is exactly the constant 1 and the degree field is consistent.
bool verify_certificate(const Certificate& cert, Exec exec = Exec::Parallel);

/// Reads alpha_i from a solution vector of `ls`.
Certificate assemble_certificate(std::shared_ptr<const PolySystem> system, const LinearSystem& ls,
                                 const std::vector<Rational>& solution);

struct DegreeAttempt {
    unsigned degree = 0;
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::size_t nnz = 0;
    bool solvable = false;
    double seconds = 0;
};

struct FindOptions {
    unsigned min_degree = 0;
    double keep_prob = 1.0;
    std::uint64_t seed = 0;
    std::function<bool(const Monomial&)> support_filter;
    Exec exec = Exec::Parallel;
};

struct CertificateSearch {
    std::optional<Certificate> certificate;
    std::vector<DegreeAttempt> attempts;
};

/// Tries degrees min_degree..max_degree in order and returns the first
/// certificate found, after verification. With keep_prob = 1 and min_degree = 0
/// the certificate has minimum degree. Throws std::logic_error if a solved
/// system fails verification.
CertificateSearch find_certificate(const PolySystem& system, unsigned max_degree, const FindOptions& options = {});

/// Certificate for the coloring system of g with non-adjacent i and j merged
/// (see identify_vertices): x_max(i,j) is replaced by x_min(i,j), higher labels
/// shift down, and coefficients of generators that coincide are added.
/// Throws std::invalid_argument if the certificate is not for encode_k_coloring(g, k)
/// or if i and j are adjacent.
Certificate contract_certificate(const Certificate& cert, const Graph& g, int i, int j);

/// The degree-4 certificate for the 3-coloring system of the odd wheel W_3
/// (rim 1, 2, 3 and hub 4).
Certificate odd_wheel_seed_certificate();

/// The relation alpha*e13 = alpha*e15 + sum beta_ij e_ij in variables x_0
/// (hub), x_1..x_5, where e_ij = x_i^2 + x_i x_j + x_j^2.
struct WheelSyzygy {
    Polynomial alpha;
    std::vector<std::pair<std::pair<int, int>, Polynomial>> betas;  // keyed by edge (i, j)
    /// -alpha e13 + alpha e15 + sum beta e; the zero polynomial when the relation holds.
    Polynomial residual() const;
};
const WheelSyzygy& odd_wheel_syzygy();

/// Turns a certificate for 3-coloring W_n (rim 1..n, hub n+1) whose coefficient
/// on edge {1, n} is the syzygy's alpha into a certificate for W_{n+2} with the
/// same property. Throws std::invalid_argument if the precondition fails.
Certificate extend_odd_wheel_certificate(const Certificate& cert, int n);

struct TrialSummary {
    std::size_t trials = 0;
    std::size_t successes = 0;
    std::vector<char> outcomes;  // per trial, seed = base seed + index
    double fraction() const { return trials ? static_cast<double>(successes) / trials : 0.0; }
};

/// Runs `trials` sparsified solves at a fixed degree; a trial succeeds when it
/// yields a verified certificate.
TrialSummary sparsification_trial(const PolySystem& system, unsigned degree, double keep_prob, std::size_t trials,
                                  std::uint64_t seed, Exec exec = Exec::Parallel);

/// JSON document with the system (encoding, params, domains, generators) and
/// the coefficients, all polynomials in canonical text. Keys are sorted, so
/// parsing and re-serializing reproduces the text exactly.
std::string certificate_to_json(const Certificate& cert);
/// Throws std::invalid_argument on malformed input.
Certificate certificate_from_json(std::string_view text);

}  // namespace polycert
