#include "polycert/monomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace polycert {

Monomial::Monomial(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (const auto& [v, e] : entries) {
        if (e == 0) continue;
        if (!entries_.empty() && entries_.back().first == v)
            entries_.back().second += e;
        else
            entries_.emplace_back(v, e);
        degree_ += e;
    }
}

Monomial Monomial::var(VarId v, unsigned exp) { return Monomial({{v, exp}}); }

unsigned Monomial::exponent(VarId v) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), v,
                               [](const Entry& e, VarId key) { return e.first < key; });
    return (it != entries_.end() && it->first == v) ? it->second : 0;
}

bool Monomial::is_square_free() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Entry& e) { return e.second == 1; });
}

bool Monomial::divides(const Monomial& other) const {
    auto it = other.entries_.begin();
    for (const auto& [v, e] : entries_) {
        while (it != other.entries_.end() && it->first < v) ++it;
        if (it == other.entries_.end() || it->first != v || it->second < e) return false;
    }
    return true;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.entries_.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin(), b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
        if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
            out.entries_.push_back(*a++);
        } else if (a == entries_.end() || b->first < a->first) {
            out.entries_.push_back(*b++);
        } else {
            out.entries_.emplace_back(a->first, a->second + b->second);
            ++a;
            ++b;
        }
    }
    out.degree_ = degree_ + other.degree_;
    return out;
}

Monomial Monomial::operator/(const Monomial& other) const {
    Monomial out;
    auto b = other.entries_.begin();
    for (const auto& [v, e] : entries_) {
        unsigned sub = 0;
        if (b != other.entries_.end() && b->first == v) {
            sub = b->second;
            ++b;
        } else if (b != other.entries_.end() && b->first < v) {
            throw std::invalid_argument("monomial division: divisor does not divide");
        }
        if (sub > e) throw std::invalid_argument("monomial division: divisor does not divide");
        if (e > sub) out.entries_.emplace_back(v, e - sub);
    }
    if (b != other.entries_.end()) throw std::invalid_argument("monomial division: divisor does not divide");
    out.degree_ = degree_ - other.degree_;
    return out;
}

Monomial Monomial::reduce_exponents(unsigned d) const {
    if (d == 0) throw std::invalid_argument("reduce_exponents: d must be positive");
    Monomial out;
    for (const auto& [v, e] : entries_) {
        unsigned r = e % d;
        if (r != 0) {
            out.entries_.emplace_back(v, r);
            out.degree_ += r;
        }
    }
    return out;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    if (a.degree_ != b.degree_) return a.degree_ <=> b.degree_;
    auto ia = a.entries_.begin(), ib = b.entries_.begin();
    for (; ia != a.entries_.end() && ib != b.entries_.end(); ++ia, ++ib) {
        if (ia->first != ib->first)
            // the side holding the earlier variable has a positive exponent where the other has 0
            return ia->first < ib->first ? std::strong_ordering::greater : std::strong_ordering::less;
        if (ia->second != ib->second) return ia->second <=> ib->second;
    }
    // equal degree and a common prefix imply both are exhausted
    return std::strong_ordering::equal;
}

std::string Monomial::to_string() const {
    if (entries_.empty()) return "1";
    std::string out;
    for (const auto& [v, e] : entries_) {
        if (!out.empty()) out += '*';
        out += v.to_string();
        if (e != 1) {
            out += '^';
            out += std::to_string(e);
        }
    }
    return out;
}

std::size_t Monomial::hash() const {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (const auto& [v, e] : entries_) {
        h ^= v.key() + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        h ^= e + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return static_cast<std::size_t>(h);
}

namespace {

void enumerate(std::span<const VarId> vars, std::size_t pos, unsigned remaining,
               std::vector<Monomial::Entry>& current, std::vector<Monomial>& out) {
    if (pos == vars.size()) {
        out.emplace_back(current);
        return;
    }
    for (unsigned e = 0; e <= remaining; ++e) {
        if (e > 0) current.emplace_back(vars[pos], e);
        enumerate(vars, pos + 1, remaining - e, current, out);
        if (e > 0) current.pop_back();
    }
}

}  // namespace

std::vector<Monomial> monomials_up_to(std::span<const VarId> vars, unsigned max_degree) {
    std::vector<Monomial> out;
    std::vector<Monomial::Entry> current;
    enumerate(vars, 0, max_degree, current, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace polycert
