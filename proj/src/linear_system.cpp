#include "polycert/linear_system.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <unordered_map>

namespace polycert {

std::size_t LinearSystem::nnz() const {
    std::size_t total = 0;
    for (const auto& r : row_entries) total += r.size();
    return total;
}

LinearSystem build_system(const PolySystem& system, const BuildOptions& options) {
    std::vector<VarId> vars;
    for (const auto& [v, d] : system.domains) vars.push_back(v);
    return build_system(system.expanded_generators(), vars, options);
}

LinearSystem build_system(const std::vector<Polynomial>& generators, const std::vector<VarId>& variables,
                          const BuildOptions& options) {
    LinearSystem ls;
    const auto multipliers = monomials_up_to(variables, options.degree);
    const bool sparsify = options.keep_prob < 1.0;
    std::mt19937_64 rng(options.seed);
    const long double threshold =
        static_cast<long double>(options.keep_prob) * 18446744073709551616.0L;  // 2^64
    for (std::size_t g = 0; g < generators.size(); ++g)
        for (const auto& mu : multipliers) {
            if (options.support_filter && !options.support_filter(mu)) continue;
            if (sparsify && !(static_cast<long double>(rng()) < threshold)) continue;
            ls.columns.push_back(Column{g, mu});
        }

    // Per-column products; the column loop is the parallel kernel.
    const std::size_t C = ls.columns.size();
    std::vector<std::vector<std::pair<Monomial, const Rational*>>> products(C);
    auto fill = [&](std::size_t c) {
        const auto& col = ls.columns[c];
        auto& out = products[c];
        out.reserve(generators[col.generator].size());
        for (const auto& [m, coef] : generators[col.generator].terms()) out.emplace_back(col.multiplier * m, &coef);
    };
    if (options.exec == Exec::Parallel) {
#pragma omp parallel for schedule(dynamic, 64)
        for (std::size_t c = 0; c < C; ++c) fill(c);
    } else {
        for (std::size_t c = 0; c < C; ++c) fill(c);
    }

    std::vector<Monomial> monos{Monomial()};
    for (const auto& prods : products)
        for (const auto& [m, coef] : prods) monos.push_back(m);
    std::sort(monos.begin(), monos.end());
    monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
    std::unordered_map<Monomial, std::size_t, MonomialHash> row_of;
    row_of.reserve(monos.size());
    for (std::size_t r = 0; r < monos.size(); ++r) row_of.emplace(monos[r], r);
    ls.rows = std::move(monos);
    ls.row_entries.assign(ls.rows.size(), {});
    for (std::size_t c = 0; c < C; ++c)
        for (const auto& [m, coef] : products[c]) {
            auto& row = ls.row_entries[row_of.at(m)];
            // a column hits a given row at most once: multiplication by a monomial is injective
            row.emplace_back(c, *coef);
        }
    return ls;
}

namespace {

using SparseRow = std::vector<std::pair<std::size_t, Rational>>;

// row_target -= factor * row_pivot (both sorted by column), dropping cancellations.
void axpy(SparseRow& target, const Rational& factor, const SparseRow& pivot, std::vector<long>& col_count,
          std::vector<std::vector<std::size_t>>& col_rows, std::size_t target_index,
          const std::vector<char>& col_done) {
    SparseRow out;
    out.reserve(target.size() + pivot.size());
    std::size_t a = 0, b = 0;
    Rational tmp;
    while (a < target.size() || b < pivot.size()) {
        if (b == pivot.size() || (a < target.size() && target[a].first < pivot[b].first)) {
            out.push_back(std::move(target[a++]));
        } else if (a == target.size() || pivot[b].first < target[a].first) {
            tmp = -factor * pivot[b].second;
            std::size_t c = pivot[b].first;
            out.emplace_back(c, tmp);
            if (!col_done[c]) {
                ++col_count[c];
                col_rows[c].push_back(target_index);
            }
            ++b;
        } else {
            tmp = target[a].second - factor * pivot[b].second;
            std::size_t c = target[a].first;
            if (tmp != 0) {
                out.emplace_back(c, tmp);
            } else if (!col_done[c]) {
                --col_count[c];
            }
            ++a;
            ++b;
        }
    }
    target = std::move(out);
}

}  // namespace

std::optional<std::vector<Rational>> solve_exact(const LinearSystem& ls) {
    const std::size_t R = ls.rows.size();
    const std::size_t C = ls.columns.size();
    std::vector<SparseRow> rows = ls.row_entries;
    std::vector<Rational> rhs(R, 0);
    if (R > 0) rhs[ls.constant_row()] = 1;

    std::vector<long> col_count(C, 0);
    std::vector<std::vector<std::size_t>> col_rows(C);
    for (std::size_t r = 0; r < R; ++r)
        for (const auto& [c, v] : rows[r]) {
            ++col_count[c];
            col_rows[c].push_back(r);
        }
    std::vector<char> row_done(R, 0), col_done(C, 0);
    std::vector<std::pair<std::size_t, std::size_t>> pivots;  // (row, column)

    while (true) {
        // Markowitz search over the active submatrix.
        std::size_t best_r = R, best_c = C;
        unsigned long long best_cost = std::numeric_limits<unsigned long long>::max();
        for (std::size_t r = 0; r < R && best_cost > 0; ++r) {
            if (row_done[r] || rows[r].empty()) continue;
            const unsigned long long rl = rows[r].size() - 1;
            for (const auto& [c, v] : rows[r]) {
                unsigned long long cost = rl * static_cast<unsigned long long>(col_count[c] - 1);
                if (cost < best_cost) {
                    best_cost = cost;
                    best_r = r;
                    best_c = c;
                    if (cost == 0) break;
                }
            }
        }
        if (best_r == R) break;

        const std::size_t pr = best_r, pc = best_c;
        row_done[pr] = 1;
        col_done[pc] = 1;
        pivots.emplace_back(pr, pc);
        for (const auto& [c, v] : rows[pr]) --col_count[c];
        const Rational pivot_value = std::find_if(rows[pr].begin(), rows[pr].end(), [&](const auto& e) {
                                         return e.first == pc;
                                     })->second;

        std::vector<std::size_t> targets;
        for (std::size_t r : col_rows[pc])
            if (!row_done[r]) targets.push_back(r);
        std::sort(targets.begin(), targets.end());
        targets.erase(std::unique(targets.begin(), targets.end()), targets.end());
        for (std::size_t r : targets) {
            auto it = std::lower_bound(rows[r].begin(), rows[r].end(), pc,
                                       [](const auto& e, std::size_t c) { return e.first < c; });
            if (it == rows[r].end() || it->first != pc) continue;  // stale entry
            const Rational factor = it->second / pivot_value;
            axpy(rows[r], factor, rows[pr], col_count, col_rows, r, col_done);
            rhs[r] -= factor * rhs[pr];
        }
        col_rows[pc].clear();
        // keep column lists from growing without bound
        for (const auto& [c, v] : rows[pr])
            if (!col_done[c] && col_rows[c].size() > 4 * static_cast<std::size_t>(col_count[c]) + 16) {
                auto& list = col_rows[c];
                std::sort(list.begin(), list.end());
                list.erase(std::unique(list.begin(), list.end()), list.end());
                std::erase_if(list, [&](std::size_t r) {
                    if (row_done[r]) return true;
                    return !std::binary_search(rows[r].begin(), rows[r].end(), std::pair<std::size_t, Rational>(c, 0),
                                               [](const auto& x, const auto& y) { return x.first < y.first; });
                });
            }
    }

    for (std::size_t r = 0; r < R; ++r)
        if (!row_done[r] && rhs[r] != 0) return std::nullopt;

    std::vector<Rational> x(C, 0);
    for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
        auto [r, c] = *it;
        Rational acc = rhs[r];
        Rational diag;
        for (const auto& [cc, v] : rows[r]) {
            if (cc == c) diag = v;
            else if (x[cc] != 0) acc -= v * x[cc];
        }
        x[c] = acc / diag;
    }
    return x;
}

}  // namespace polycert
