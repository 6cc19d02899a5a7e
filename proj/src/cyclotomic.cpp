#include "polycert/cyclotomic.hpp"

#include <mutex>
#include <stdexcept>
#include <unordered_map>

namespace polycert {

namespace {

using IntPoly = std::vector<std::int64_t>;

// Exact quotient of a by a monic divisor b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
    const std::size_t db = b.size() - 1;
    if (a.size() < b.size()) throw std::logic_error("cyclotomic: divisor degree too large");
    IntPoly q(a.size() - db, 0);
    for (std::size_t i = a.size(); i-- > db;) {
        std::int64_t c = a[i];
        q[i - db] = c;
        if (c == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= c * b[j];
    }
    for (std::size_t i = 0; i < db; ++i)
        if (a[i] != 0) throw std::logic_error("cyclotomic: inexact division");
    return q;
}

IntPoly compute_phi(unsigned k) {
    IntPoly p(k + 1, 0);
    p[0] = -1;
    p[k] = 1;
    for (unsigned m = 1; m < k; ++m)
        if (k % m == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(m));
    return p;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(unsigned k) {
    if (k == 0) throw std::invalid_argument("cyclotomic order must be positive");
    static std::mutex mu;
    static std::unordered_map<unsigned, IntPoly> cache;
    {
        std::lock_guard lock(mu);
        if (auto it = cache.find(k); it != cache.end()) return it->second;
    }
    IntPoly phi = compute_phi(k);
    std::lock_guard lock(mu);
    return cache.try_emplace(k, std::move(phi)).first->second;
}

bool CyclotomicValue::is_zero() const {
    for (const auto& c : coords)
        if (c != 0) return false;
    return true;
}

CyclotomicValue reduce_cyclotomic(std::vector<Rational> powers, unsigned k) {
    const auto& phi = cyclotomic_polynomial(k);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = powers.size(); i-- > deg;) {
        if (powers[i] == 0) continue;
        Rational c = powers[i];
        for (std::size_t j = 0; j <= deg; ++j) powers[i - deg + j] -= c * phi[j];
    }
    powers.resize(deg);
    return CyclotomicValue{k, std::move(powers)};
}

CyclotomicValue eval_cyclotomic(const Polynomial& p, unsigned k, const std::map<VarId, unsigned>& assignment) {
    if (k == 0) throw std::invalid_argument("eval_cyclotomic: order must be positive");
    std::vector<Rational> powers(k);
    for (const auto& [m, c] : p.terms()) {
        unsigned long long e = 0;
        for (const auto& [v, exp] : m.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("eval_cyclotomic: unassigned variable " + v.to_string());
            e += static_cast<unsigned long long>(exp) * (it->second % k);
        }
        powers[e % k] += c;
    }
    return reduce_cyclotomic(std::move(powers), k);
}

bool cyclotomic_is_zero(std::vector<__int128> values, unsigned k) {
    const auto& phi = cyclotomic_polynomial(k);
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = values.size(); i-- > deg;) {
        __int128 c = values[i];
        if (c == 0) continue;
        for (std::size_t j = 0; j <= deg; ++j) values[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 0; i < deg && i < values.size(); ++i)
        if (values[i] != 0) return false;
    return true;
}

}  // namespace polycert
