#include "polycert/polynomial.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

namespace polycert {

Polynomial::Polynomial(const Rational& c) {
    if (c != 0) terms_.emplace(Monomial(), c);
}

Polynomial::Polynomial(const Monomial& m, const Rational& c) {
    if (c != 0) terms_.emplace(m, c);
}

Polynomial Polynomial::from_terms(std::vector<std::pair<Monomial, Rational>> terms) {
    Polynomial out;
    for (auto& [m, c] : terms) {
        auto [it, inserted] = out.terms_.try_emplace(std::move(m), c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        } else if (c == 0) {
            out.terms_.erase(it);
        }
    }
    return out;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(terms_.rbegin()->first.degree());
}

Rational Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

std::vector<VarId> Polynomial::variables() const {
    std::set<VarId> vars;
    for (const auto& [m, c] : terms_)
        for (const auto& [v, e] : m.entries()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

Polynomial Polynomial::operator-() const {
    Polynomial out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    Polynomial out = a;
    for (const auto& [m, c] : b.terms_) {
        auto [it, inserted] = out.terms_.try_emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) out.terms_.erase(it);
        }
    }
    return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    Polynomial out;
    if (a.is_zero() || b.is_zero()) return out;
    Rational prod;
    for (const auto& [ma, ca] : a.terms_) {
        for (const auto& [mb, cb] : b.terms_) {
            prod = ca * cb;
            auto [it, inserted] = out.terms_.try_emplace(ma * mb, prod);
            if (!inserted) {
                it->second += prod;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    }
    return out;
}

Polynomial Polynomial::scaled(const Rational& c) const {
    if (c == 0) return {};
    Polynomial out = *this;
    for (auto& [m, coef] : out.terms_) coef *= c;
    return out;
}

Polynomial Polynomial::pow(unsigned e) const {
    Polynomial result(1);
    Polynomial base = *this;
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1;
        if (e > 0) base = base * base;
    }
    return result;
}

Polynomial Polynomial::substitute(const std::map<VarId, Polynomial>& images) const {
    Polynomial out;
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Entry> kept;
        Polynomial factor(c);
        for (const auto& [v, e] : m.entries()) {
            auto it = images.find(v);
            if (it == images.end())
                kept.emplace_back(v, e);
            else
                factor = factor * it->second.pow(e);
        }
        out += factor * Polynomial(Monomial(std::move(kept)));
    }
    return out;
}

Polynomial Polynomial::rename(const std::map<VarId, VarId>& renaming) const {
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(terms_.size());
    for (const auto& [m, c] : terms_) {
        std::vector<Monomial::Entry> entries;
        for (const auto& [v, e] : m.entries()) {
            auto it = renaming.find(v);
            entries.emplace_back(it == renaming.end() ? v : it->second, e);
        }
        terms.emplace_back(Monomial(std::move(entries)), c);
    }
    return from_terms(std::move(terms));
}

Polynomial Polynomial::filter(const std::function<bool(const Monomial&)>& keep) const {
    Polynomial out;
    for (const auto& [m, c] : terms_)
        if (keep(m)) out.terms_.emplace_hint(out.terms_.end(), m, c);
    return out;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        bool negative = c < 0;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        Rational mag = abs(c);
        if (m.is_one()) {
            out += mag.get_str();
        } else {
            if (mag != 1) {
                out += mag.get_str();
                out += '*';
            }
            out += m.to_string();
        }
    }
    return out;
}

namespace {

class PolyParser {
public:
    explicit PolyParser(std::string_view text) : s_(text) {}

    Polynomial parse() {
        std::vector<std::pair<Monomial, Rational>> terms;
        skip_ws();
        if (at_end()) fail("empty polynomial");
        bool negative = false;
        if (peek() == '-' || peek() == '+') {
            negative = get() == '-';
            skip_ws();
        }
        terms.push_back(term(negative));
        skip_ws();
        while (!at_end()) {
            char op = get();
            if (op != '+' && op != '-') fail("expected + or -");
            skip_ws();
            terms.push_back(term(op == '-'));
            skip_ws();
        }
        return Polynomial::from_terms(std::move(terms));
    }

private:
    std::pair<Monomial, Rational> term(bool negative) {
        Rational coef(1);
        std::vector<Monomial::Entry> entries;
        bool any = false;
        while (true) {
            skip_ws();
            if (at_end()) fail("truncated term");
            if (std::isdigit(static_cast<unsigned char>(peek()))) {
                coef *= number();
            } else if (std::isalpha(static_cast<unsigned char>(peek()))) {
                VarId v = variable();
                unsigned e = 1;
                skip_ws();
                if (!at_end() && peek() == '^') {
                    get();
                    skip_ws();
                    e = static_cast<unsigned>(integer());
                }
                entries.emplace_back(v, e);
            } else {
                fail("unexpected character");
            }
            any = true;
            skip_ws();
            if (!at_end() && peek() == '*') {
                get();
                continue;
            }
            // juxtaposition also multiplies: "2/9 x_1^3 x_0"
            if (!at_end() && std::isalnum(static_cast<unsigned char>(peek()))) continue;
            break;
        }
        if (!any) fail("empty term");
        if (negative) coef = -coef;
        return {Monomial(std::move(entries)), coef};
    }

    Rational number() {
        std::size_t start = pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '/')) ++pos_;
        return parse_rational(s_.substr(start, pos_ - start));
    }

    long integer() {
        std::size_t start = pos_;
        while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected integer");
        return std::stol(std::string(s_.substr(start, pos_ - start)));
    }

    VarId variable() {
        std::size_t start = pos_;
        ++pos_;
        while (!at_end() && (std::isdigit(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
        return VarId::parse(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
    }
    bool at_end() const { return pos_ >= s_.size(); }
    char peek() const { return s_[pos_]; }
    char get() { return s_[pos_++]; }
    [[noreturn]] void fail(const char* what) const {
        throw std::invalid_argument(std::string("polynomial parse error (") + what + ") at offset " +
                                    std::to_string(pos_) + " in: " + std::string(s_));
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

Polynomial Polynomial::parse(std::string_view text) { return PolyParser(text).parse(); }

Polynomial normal_form_mod_unity(const Polynomial& p, unsigned d) {
    std::vector<std::pair<Monomial, Rational>> terms;
    terms.reserve(p.size());
    for (const auto& [m, c] : p.terms()) terms.emplace_back(m.reduce_exponents(d), c);
    return Polynomial::from_terms(std::move(terms));
}

Rational eval_rational(const Polynomial& p, const std::map<VarId, Rational>& assignment) {
    Rational total(0), term;
    for (const auto& [m, c] : p.terms()) {
        term = c;
        for (const auto& [v, e] : m.entries()) {
            auto it = assignment.find(v);
            if (it == assignment.end())
                throw std::invalid_argument("eval_rational: unassigned variable " + v.to_string());
            Rational power(1);
            for (unsigned k = 0; k < e; ++k) power *= it->second;
            term *= power;
        }
        total += term;
    }
    return total;
}

}  // namespace polycert
