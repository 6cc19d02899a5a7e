#pragma once

#include "polycert/exec.hpp"
#include "polycert/system.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>

#include <gmpxx.h>

namespace polycert {

struct OracleOptions {
    bool count_all = false;
    /// Maximum number of search-tree nodes (single value assignments).
    std::uint64_t budget = 2'000'000'000ULL;
    Exec exec = Exec::Parallel;
};

/// Outcome of an exhaustive search. The witness maps every non-witness variable
/// to an integer value, or to the exponent e of w^e for roots-of-unity domains;
/// inverse-witness variables are left out since their value is forced.
struct OracleResult {
    bool feasible = false;
    std::optional<std::map<VarId, long>> witness;
    std::optional<mpz_class> count;
    std::uint64_t nodes = 0;
};

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Decides the system over its declared domains. The reported witness is the
/// first solution in lexicographic VarId/value order, whatever the execution mode.
/// Throws BudgetExceeded, or std::invalid_argument for a missing domain or an
/// inverse-witness variable used outside a single "s * P = c" equation.
OracleResult decide(const PolySystem& system, const OracleOptions& options = {});

/// Product of domain sizes over non-witness variables, saturating at UINT64_MAX.
std::uint64_t domain_product(const PolySystem& system);

}  // namespace polycert
