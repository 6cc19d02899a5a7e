#include "polycert/oracle.hpp"

#include "polycert/cyclotomic.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numeric>
#include <set>

#include <omp.h>

namespace polycert {

namespace {

struct Slot {
    VarId var;
    DomainSpec domain;
    std::vector<long> values;
    long max_abs = 0;
};

struct CTerm {
    __int128 coef = 0;
    mpz_class exact_coef;
    std::vector<std::pair<int, unsigned>> ints;   // (slot, exponent)
    std::vector<std::pair<int, unsigned>> roots;  // (slot, exponent scaled to order L)
};

// A polynomial compiled for repeated zero tests at integer / root-of-unity points.
struct CFactor {
    std::vector<CTerm> terms;
    unsigned L = 1;
    const std::vector<std::int64_t>* phi = nullptr;
    bool wide = false;
    std::vector<int> slots;
};

struct Scratch {
    std::vector<__int128> acc;
    std::vector<mpz_class> exact;
};

inline __int128 ipow(long base, unsigned e) {
    __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) r *= base;
    return r;
}

bool factor_is_zero(const CFactor& f, const long* cur, Scratch& s) {
    if (!f.wide) {
        if (f.L == 1) {
            __int128 sum = 0;
            for (const auto& t : f.terms) {
                __int128 v = t.coef;
                for (auto [slot, e] : t.ints) v *= ipow(cur[slot], e);
                sum += v;
            }
            return sum == 0;
        }
        s.acc.assign(f.L, 0);
        for (const auto& t : f.terms) {
            __int128 v = t.coef;
            for (auto [slot, e] : t.ints) v *= ipow(cur[slot], e);
            unsigned long long idx = 0;
            for (auto [slot, m] : t.roots) idx += static_cast<unsigned long long>(m) * cur[slot];
            s.acc[idx % f.L] += v;
        }
        const auto& phi = *f.phi;
        const std::size_t deg = phi.size() - 1;
        for (std::size_t i = f.L; i-- > deg;) {
            __int128 c = s.acc[i];
            if (c == 0) continue;
            for (std::size_t j = 0; j <= deg; ++j) s.acc[i - deg + j] -= c * phi[j];
        }
        for (std::size_t i = 0; i < deg; ++i)
            if (s.acc[i] != 0) return false;
        return true;
    }
    s.exact.assign(f.L, 0);
    mpz_class v, p;
    for (const auto& t : f.terms) {
        v = t.exact_coef;
        for (auto [slot, e] : t.ints) {
            mpz_pow_ui(p.get_mpz_t(), mpz_class(cur[slot]).get_mpz_t(), e);
            v *= p;
        }
        unsigned long long idx = 0;
        for (auto [slot, m] : t.roots) idx += static_cast<unsigned long long>(m) * cur[slot];
        s.exact[idx % f.L] += v;
    }
    if (f.L == 1) return s.exact[0] == 0;
    const auto& phi = *f.phi;
    const std::size_t deg = phi.size() - 1;
    for (std::size_t i = f.L; i-- > deg;) {
        if (s.exact[i] == 0) continue;
        mpz_class c = s.exact[i];
        for (std::size_t j = 0; j <= deg; ++j) s.exact[i - deg + j] -= c * phi[j];
    }
    for (std::size_t i = 0; i < deg; ++i)
        if (s.exact[i] != 0) return false;
    return true;
}

struct PrivateFactor {
    int factor;
    std::vector<int> slots;
    std::uint64_t space;
};

// An equation prod(factors) = 0, possibly with variables private to it.
struct ZeroGen {
    std::vector<int> core_factors;
    std::vector<PrivateFactor> priv;
};

struct Check {
    bool nonzero;  // true: factor must be nonzero; false: ZeroGen must hold
    int id;
    std::size_t support;
};

struct Plan {
    std::vector<Slot> slots;
    std::vector<CFactor> factors;
    std::vector<ZeroGen> zero_gens;
    std::vector<int> core;                    // slot ids in VarId order
    std::vector<std::vector<Check>> checks;   // by core depth
    std::vector<Check> initial;               // checks with no core variable
    std::vector<int> unused;                  // slots constrained by nothing
    std::vector<int> private_slots;
};

unsigned lcm_u(unsigned a, unsigned b) { return a / std::gcd(a, b) * b; }

int compile(Plan& plan, const Polynomial& p, const std::map<VarId, int>& slot_of) {
    CFactor f;
    std::set<int> slots;
    mpz_class denom = 1;
    for (const auto& [m, c] : p.terms()) {
        mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(), c.get_den_mpz_t());
        for (const auto& [v, e] : m.entries()) {
            int s = slot_of.at(v);
            slots.insert(s);
            const Slot& slot = plan.slots[s];
            if (slot.domain.kind == DomainSpec::Kind::RootsOfUnity) f.L = lcm_u(f.L, slot.domain.order);
        }
    }
    f.slots.assign(slots.begin(), slots.end());
    long double bound = 0;
    for (const auto& [m, c] : p.terms()) {
        CTerm t;
        mpz_class num = c.get_num() * (denom / c.get_den());
        t.exact_coef = num;
        long double mag = std::fabs(num.get_d());
        for (const auto& [v, e] : m.entries()) {
            int s = slot_of.at(v);
            const Slot& slot = plan.slots[s];
            if (slot.domain.kind == DomainSpec::Kind::RootsOfUnity) {
                t.roots.emplace_back(s, e * (f.L / slot.domain.order));
            } else {
                t.ints.emplace_back(s, e);
                mag *= std::pow(static_cast<long double>(std::max<long>(slot.max_abs, 1)), e);
            }
        }
        bound += mag;
        f.terms.push_back(std::move(t));
    }
    f.wide = !(bound < 1e36L);
    if (!f.wide)
        for (auto& t : f.terms) {
            // magnitude checked above, so the value fits in 128 bits
            mpz_class a = abs(t.exact_coef);
            __int128 v = 0;
            std::size_t count = 0;
            std::vector<std::uint64_t> limbs(2, 0);
            mpz_export(limbs.data(), &count, -1, sizeof(std::uint64_t), 0, 0, a.get_mpz_t());
            v = (static_cast<__int128>(limbs[1]) << 64) | limbs[0];
            t.coef = sgn(t.exact_coef) < 0 ? -v : v;
        }
    if (f.L > 1) f.phi = &cyclotomic_polynomial(f.L);
    plan.factors.push_back(std::move(f));
    return static_cast<int>(plan.factors.size()) - 1;
}

bool is_single_var(const Polynomial& p, VarId v) { return p == Polynomial::var(v); }

Plan build_plan(const PolySystem& sys) {
    Plan plan;
    std::map<VarId, int> slot_of;
    std::set<VarId> witness_vars;
    for (const auto& [v, d] : sys.domains) {
        if (d.kind == DomainSpec::Kind::Witness) {
            witness_vars.insert(v);
            continue;
        }
        Slot s{v, d, d.values(), 0};
        for (long x : s.values) s.max_abs = std::max(s.max_abs, std::labs(x));
        if (d.kind == DomainSpec::Kind::RootsOfUnity) s.max_abs = 1;
        slot_of[v] = static_cast<int>(plan.slots.size());
        plan.slots.push_back(std::move(s));
    }
    sys.validate();

    std::map<VarId, int> witness_uses;
    for (const auto& g : sys.generators)
        for (VarId v : g.variables())
            if (witness_vars.count(v)) ++witness_uses[v];

    // Raw generator layout before private-variable analysis.
    struct RawGen {
        bool witness = false;
        std::vector<int> factors;
    };
    std::vector<RawGen> raw;
    std::vector<long> cur(plan.slots.size(), 0);
    Scratch scratch;
    for (const auto& g : sys.generators) {
        std::vector<VarId> wv;
        for (VarId v : g.variables())
            if (witness_vars.count(v)) wv.push_back(v);
        RawGen rg;
        if (!wv.empty()) {
            int s_pos = -1;
            if (g.constant != 0 && wv.size() == 1 && witness_uses[wv[0]] == 1) {
                for (std::size_t i = 0; i < g.factors.size(); ++i) {
                    bool here = false;
                    for (VarId v : g.factors[i].variables()) here |= v == wv[0];
                    if (here) {
                        if (s_pos >= 0 || !is_single_var(g.factors[i], wv[0])) s_pos = -2;
                        else s_pos = static_cast<int>(i);
                    }
                }
            }
            if (s_pos < 0)
                throw std::invalid_argument("oracle: witness variable " + wv[0].to_string() +
                                            " must occur once, as a bare factor of an equation with nonzero constant");
            rg.witness = true;
            for (std::size_t i = 0; i < g.factors.size(); ++i)
                if (static_cast<int>(i) != s_pos) rg.factors.push_back(compile(plan, g.factors[i], slot_of));
            raw.push_back(std::move(rg));
            continue;
        }
        if (g.constant != 0) {
            rg.factors.push_back(compile(plan, g.expand(), slot_of));
        } else {
            bool trivially_true = false;
            for (const auto& f : g.factors) trivially_true |= f.is_zero();
            if (trivially_true) continue;
            for (const auto& f : g.factors) rg.factors.push_back(compile(plan, f, slot_of));
        }
        // Drop univariate equations that hold on the whole domain of their variable.
        std::set<int> vars;
        for (int f : rg.factors)
            for (int s : plan.factors[f].slots) vars.insert(s);
        if (vars.size() == 1) {
            int s = *vars.begin();
            bool always = true;
            for (long value : plan.slots[s].values) {
                cur[s] = value;
                bool holds = false;
                for (int f : rg.factors) holds = holds || factor_is_zero(plan.factors[f], cur.data(), scratch);
                if (!holds) {
                    always = false;
                    break;
                }
            }
            if (always) continue;
        }
        raw.push_back(std::move(rg));
    }

    // Occurrence analysis.
    const std::size_t S = plan.slots.size();
    std::vector<int> gen_uses(S, 0);
    for (const auto& rg : raw) {
        std::set<int> vars;
        for (int f : rg.factors)
            for (int s : plan.factors[f].slots) vars.insert(s);
        for (int s : vars) ++gen_uses[s];
    }
    std::vector<char> is_private(S, 0);
    for (const auto& rg : raw) {
        if (rg.witness) continue;
        std::map<int, int> factor_uses;
        for (int f : rg.factors)
            for (int s : plan.factors[f].slots) ++factor_uses[s];
        for (auto [s, k] : factor_uses)
            if (gen_uses[s] == 1 && k == 1) is_private[s] = 1;
    }
    // Keep the per-factor private enumeration small.
    for (const auto& rg : raw) {
        if (rg.witness) continue;
        for (int f : rg.factors) {
            long double space = 1;
            for (int s : plan.factors[f].slots)
                if (is_private[s]) space *= static_cast<long double>(plan.slots[s].values.size());
            if (space > 1e6L)
                for (int s : plan.factors[f].slots) is_private[s] = 0;
        }
    }
    std::vector<int> depth_of(S, -1);
    for (std::size_t s = 0; s < S; ++s) {
        if (gen_uses[s] == 0) {
            plan.unused.push_back(static_cast<int>(s));
        } else if (is_private[s]) {
            plan.private_slots.push_back(static_cast<int>(s));
        } else {
            depth_of[s] = static_cast<int>(plan.core.size());
            plan.core.push_back(static_cast<int>(s));
        }
    }
    plan.checks.resize(plan.core.size());
    auto place = [&](Check c, int depth) {
        if (depth < 0) plan.initial.push_back(c);
        else plan.checks[depth].push_back(c);
    };
    for (const auto& rg : raw) {
        if (rg.witness) {
            for (int f : rg.factors) {
                int depth = -1;
                for (int s : plan.factors[f].slots) depth = std::max(depth, depth_of[s]);
                place(Check{true, f, plan.factors[f].slots.size()}, depth);
            }
            continue;
        }
        ZeroGen zg;
        int depth = -1;
        std::set<int> vars;
        for (int f : rg.factors) {
            PrivateFactor pf{f, {}, 1};
            for (int s : plan.factors[f].slots) {
                vars.insert(s);
                depth = std::max(depth, depth_of[s]);
                if (is_private[s]) {
                    pf.slots.push_back(s);
                    pf.space *= plan.slots[s].values.size();
                }
            }
            if (pf.slots.empty()) zg.core_factors.push_back(f);
            else zg.priv.push_back(std::move(pf));
        }
        plan.zero_gens.push_back(std::move(zg));
        place(Check{false, static_cast<int>(plan.zero_gens.size()) - 1, vars.size()}, depth);
    }
    auto by_support = [](const Check& a, const Check& b) { return a.support < b.support; };
    std::stable_sort(plan.initial.begin(), plan.initial.end(), by_support);
    for (auto& level : plan.checks) std::stable_sort(level.begin(), level.end(), by_support);
    return plan;
}

// Number of assignments to the factor's private variables making it zero.
// With stop_at_first, returns 0 or 1.
std::uint64_t count_private_zeros(const Plan& plan, const PrivateFactor& pf, long* cur, Scratch& s,
                                  bool stop_at_first) {
    std::vector<std::size_t> idx(pf.slots.size(), 0);
    for (int sl : pf.slots) cur[sl] = plan.slots[sl].values[0];
    std::uint64_t zeros = 0;
    while (true) {
        if (factor_is_zero(plan.factors[pf.factor], cur, s)) {
            ++zeros;
            if (stop_at_first) return zeros;
        }
        std::size_t k = pf.slots.size();
        while (k > 0) {
            --k;
            int sl = pf.slots[k];
            if (++idx[k] < plan.slots[sl].values.size()) {
                cur[sl] = plan.slots[sl].values[idx[k]];
                break;
            }
            idx[k] = 0;
            cur[sl] = plan.slots[sl].values[0];
            if (k == 0) return zeros;
        }
        if (pf.slots.empty()) return zeros;
    }
}

// Evaluates one check; in counting mode multiplies mult by the number of
// private completions.
bool run_check(const Plan& plan, const Check& c, long* cur, Scratch& s, mpz_class* mult) {
    if (c.nonzero) return !factor_is_zero(plan.factors[c.id], cur, s);
    const ZeroGen& zg = plan.zero_gens[c.id];
    bool core_zero = false;
    for (int f : zg.core_factors)
        if (factor_is_zero(plan.factors[f], cur, s)) {
            core_zero = true;
            break;
        }
    if (zg.priv.empty()) return core_zero;
    if (!mult) {
        if (core_zero) return true;
        for (const auto& pf : zg.priv)
            if (count_private_zeros(plan, pf, cur, s, true) > 0) return true;
        return false;
    }
    mpz_class total = 1;
    for (const auto& pf : zg.priv) total *= static_cast<unsigned long>(pf.space);
    if (core_zero) {
        *mult *= total;
        return true;
    }
    mpz_class nonzero = 1;
    for (const auto& pf : zg.priv)
        nonzero *= static_cast<unsigned long>(pf.space - count_private_zeros(plan, pf, cur, s, false));
    mpz_class satisfied = total - nonzero;
    if (satisfied == 0) return false;
    *mult *= satisfied;
    return true;
}

struct BranchResult {
    bool found = false;
    std::vector<long> solution;
    mpz_class count = 0;
    std::uint64_t nodes = 0;
    bool budget_hit = false;
};

class Searcher {
public:
    Searcher(const Plan& plan, bool counting, std::atomic<std::uint64_t>& nodes, std::uint64_t budget,
             std::atomic<long>& stop_below, long branch)
        : plan_(plan), counting_(counting), nodes_(nodes), budget_(budget), stop_below_(stop_below),
          branch_(branch), cur_(plan.slots.size(), 0) {}

    BranchResult run(int first_value_index, const mpz_class& base) {
        try {
            if (plan_.core.empty()) {
                leaf(base);
            } else if (first_value_index < 0) {
                dfs(0, base);
            } else {
                assign_and_descend(0, static_cast<std::size_t>(first_value_index), base);
            }
        } catch (const Abort&) {
        }
        flush(false);
        result_.nodes = local_nodes_total_;
        return std::move(result_);
    }

private:
    struct Abort {};

    void dfs(std::size_t depth, const mpz_class& mult) {
        if (depth == plan_.core.size()) {
            leaf(mult);
            return;
        }
        const Slot& slot = plan_.slots[plan_.core[depth]];
        for (std::size_t i = 0; i < slot.values.size(); ++i) {
            assign_and_descend(depth, i, mult);
            if (result_.found && !counting_) return;
        }
    }

    void assign_and_descend(std::size_t depth, std::size_t value_index, const mpz_class& mult) {
        if (++local_nodes_ >= 4096) flush();
        cur_[plan_.core[depth]] = plan_.slots[plan_.core[depth]].values[value_index];
        if (counting_) {
            mpz_class m = mult;
            for (const auto& c : plan_.checks[depth])
                if (!run_check(plan_, c, cur_.data(), scratch_, &m)) return;
            dfs(depth + 1, m);
        } else {
            for (const auto& c : plan_.checks[depth])
                if (!run_check(plan_, c, cur_.data(), scratch_, nullptr)) return;
            dfs(depth + 1, mult);
        }
    }

    void leaf(const mpz_class& mult) {
        if (counting_) {
            result_.count += mult;
            if (!result_.found) {
                result_.found = true;
                result_.solution = cur_;
            }
            return;
        }
        result_.found = true;
        result_.solution = cur_;
    }

    void flush(bool may_abort = true) {
        local_nodes_total_ += local_nodes_;
        std::uint64_t total = nodes_.fetch_add(local_nodes_) + local_nodes_;
        local_nodes_ = 0;
        if (total > budget_) result_.budget_hit = true;
        if (!may_abort) return;
        if (result_.budget_hit) throw Abort{};
        if (!counting_ && stop_below_.load() < branch_) throw Abort{};
    }

    const Plan& plan_;
    bool counting_;
    std::atomic<std::uint64_t>& nodes_;
    std::uint64_t budget_;
    std::atomic<long>& stop_below_;
    long branch_;
    std::vector<long> cur_;
    Scratch scratch_;
    BranchResult result_;
    std::uint64_t local_nodes_ = 0;
    std::uint64_t local_nodes_total_ = 0;
};

// Fills private and unused variables of a core solution.
std::map<VarId, long> complete_witness(const Plan& plan, std::vector<long> cur) {
    Scratch s;
    for (int sl : plan.unused) cur[sl] = plan.slots[sl].values[0];
    for (int sl : plan.private_slots) cur[sl] = plan.slots[sl].values[0];
    for (const auto& zg : plan.zero_gens) {
        if (zg.priv.empty()) continue;
        bool core_zero = false;
        for (int f : zg.core_factors) core_zero = core_zero || factor_is_zero(plan.factors[f], cur.data(), s);
        if (core_zero) continue;
        for (const auto& pf : zg.priv) {
            if (count_private_zeros(plan, pf, cur.data(), s, true) > 0) break;  // leaves the zero in place
            for (int sl : pf.slots) cur[sl] = plan.slots[sl].values[0];
        }
    }
    std::map<VarId, long> out;
    for (std::size_t i = 0; i < plan.slots.size(); ++i) out[plan.slots[i].var] = cur[i];
    return out;
}

}  // namespace

std::uint64_t domain_product(const PolySystem& system) {
    unsigned __int128 p = 1;
    for (const auto& [v, d] : system.domains) {
        if (d.kind == DomainSpec::Kind::Witness) continue;
        p *= d.size();
        if (p > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    }
    return static_cast<std::uint64_t>(p);
}

OracleResult decide(const PolySystem& system, const OracleOptions& options) {
    const Plan plan = build_plan(system);
    OracleResult result;

    mpz_class base = 1;
    for (int sl : plan.unused) base *= static_cast<unsigned long>(plan.slots[sl].values.size());
    {
        std::vector<long> cur(plan.slots.size(), 0);
        Scratch s;
        for (const auto& c : plan.initial)
            if (!run_check(plan, c, cur.data(), s, options.count_all ? &base : nullptr)) {
                if (options.count_all) result.count = 0;
                return result;
            }
    }

    std::atomic<std::uint64_t> nodes{0};
    std::atomic<long> stop_below{std::numeric_limits<long>::max()};
    std::vector<BranchResult> branches;

    if (plan.core.empty() || options.exec == Exec::Serial) {
        Searcher searcher(plan, options.count_all, nodes, options.budget, stop_below, 0);
        branches.push_back(searcher.run(-1, base));
    } else {
        const long width = static_cast<long>(plan.slots[plan.core[0]].values.size());
        branches.resize(static_cast<std::size_t>(width));
#pragma omp parallel for schedule(dynamic, 1)
        for (long b = 0; b < width; ++b) {
            if (!options.count_all && stop_below.load() < b) continue;
            Searcher searcher(plan, options.count_all, nodes, options.budget, stop_below, b);
            branches[b] = searcher.run(static_cast<int>(b), base);
            if (branches[b].found && !options.count_all) {
                long expected = stop_below.load();
                while (b < expected && !stop_below.compare_exchange_weak(expected, b)) {
                }
            }
        }
    }

    result.nodes = nodes.load();
    const BranchResult* first = nullptr;
    mpz_class count = 0;
    bool budget_hit = false;
    for (const auto& br : branches) {
        // A truncated branch ahead of the first solution could hide an earlier one.
        budget_hit |= br.budget_hit && (options.count_all || !br.found);
        if (br.found && !first) first = &br;
        count += br.count;
        if (first && !options.count_all) break;
    }
    if (budget_hit)
        throw BudgetExceeded("oracle: search budget of " + std::to_string(options.budget) + " nodes exceeded");
    if (first) {
        result.feasible = true;
        result.witness = complete_witness(plan, first->solution);
    }
    if (options.count_all) result.count = count;
    return result;
}

}  // namespace polycert
