#include "polycert/system.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <stdexcept>

namespace polycert {

DomainSpec DomainSpec::range(long lo, long hi) {
    if (hi < lo) throw std::invalid_argument("empty integer range domain");
    return {Kind::Range, lo, hi, 0};
}

DomainSpec DomainSpec::roots(unsigned k) {
    if (k == 0) throw std::invalid_argument("roots-of-unity domain needs a positive order");
    return {Kind::RootsOfUnity, 0, 0, k};
}

std::size_t DomainSpec::size() const {
    switch (kind) {
        case Kind::Range: return static_cast<std::size_t>(hi - lo + 1);
        case Kind::RootsOfUnity: return order;
        case Kind::Boolean: return 2;
        case Kind::Witness: return 0;
    }
    return 0;
}

std::vector<long> DomainSpec::values() const {
    std::vector<long> out;
    switch (kind) {
        case Kind::Range:
            for (long v = lo; v <= hi; ++v) out.push_back(v);
            break;
        case Kind::RootsOfUnity:
            for (unsigned e = 0; e < order; ++e) out.push_back(e);
            break;
        case Kind::Boolean: out = {0, 1}; break;
        case Kind::Witness: break;
    }
    return out;
}

std::string DomainSpec::to_string() const {
    switch (kind) {
        case Kind::Range: return "range " + std::to_string(lo) + " " + std::to_string(hi);
        case Kind::RootsOfUnity: return "roots " + std::to_string(order);
        case Kind::Boolean: return "bool";
        case Kind::Witness: return "witness";
    }
    return {};
}

DomainSpec DomainSpec::parse(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string kind;
    in >> kind;
    DomainSpec d;
    if (kind == "range") {
        long lo, hi;
        if (!(in >> lo >> hi)) throw std::invalid_argument("bad range domain: " + std::string(text));
        d = range(lo, hi);
    } else if (kind == "roots") {
        long k;
        if (!(in >> k) || k <= 0) throw std::invalid_argument("bad roots domain: " + std::string(text));
        d = roots(static_cast<unsigned>(k));
    } else if (kind == "bool") {
        d = boolean();
    } else if (kind == "witness") {
        d = witness();
    } else {
        throw std::invalid_argument("unknown domain kind: " + std::string(text));
    }
    std::string extra;
    if (in >> extra) throw std::invalid_argument("trailing text in domain: " + std::string(text));
    return d;
}

Generator Generator::poly(Polynomial p) { return Generator{{std::move(p)}, Rational(0)}; }

Generator Generator::product(std::vector<Polynomial> factors, const Rational& c) {
    return Generator{std::move(factors), c};
}

Polynomial Generator::expand() const {
    Polynomial p(1);
    for (const auto& f : factors) p = p * f;
    return p - Polynomial(constant);
}

int Generator::degree() const {
    int d = 0;
    for (const auto& f : factors) {
        if (f.is_zero()) return constant == 0 ? -1 : 0;
        d += f.degree();
    }
    return d;
}

std::vector<VarId> Generator::variables() const {
    std::set<VarId> vars;
    for (const auto& f : factors)
        for (VarId v : f.variables()) vars.insert(v);
    return {vars.begin(), vars.end()};
}

std::string Generator::to_string() const {
    if (is_plain()) return factors[0].to_string();
    std::string out;
    if (factors.empty()) out = "1";
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) out += " * ";
        out += "(" + factors[i].to_string() + ")";
    }
    return out + " = " + constant.get_str();
}

Generator Generator::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    std::size_t eq = text.rfind('=');
    if (eq == std::string_view::npos) return poly(Polynomial::parse(text));
    std::string_view lhs = trim(text.substr(0, eq));
    Rational c = parse_rational(trim(text.substr(eq + 1)));
    std::vector<Polynomial> factors;
    if (lhs == "1") return product({}, c);
    std::size_t pos = 0;
    while (pos < lhs.size()) {
        if (lhs[pos] != '(') throw std::invalid_argument("generator parse error: expected '(' in: " + std::string(text));
        std::size_t close = lhs.find(')', pos);
        if (close == std::string_view::npos)
            throw std::invalid_argument("generator parse error: unbalanced '(' in: " + std::string(text));
        factors.push_back(Polynomial::parse(lhs.substr(pos + 1, close - pos - 1)));
        pos = close + 1;
        while (pos < lhs.size() && std::isspace(static_cast<unsigned char>(lhs[pos]))) ++pos;
        if (pos < lhs.size()) {
            if (lhs[pos] != '*')
                throw std::invalid_argument("generator parse error: expected '*' in: " + std::string(text));
            ++pos;
            while (pos < lhs.size() && std::isspace(static_cast<unsigned char>(lhs[pos]))) ++pos;
        }
    }
    if (factors.empty()) throw std::invalid_argument("generator parse error: no factors in: " + std::string(text));
    return product(std::move(factors), c);
}

void PolySystem::validate() const {
    for (std::size_t i = 0; i < generators.size(); ++i)
        for (VarId v : generators[i].variables())
            if (!domains.count(v))
                throw std::invalid_argument("generator " + std::to_string(i) + ": variable " + v.to_string() +
                                            " has no domain");
}

std::vector<Polynomial> PolySystem::expanded_generators() const {
    std::vector<Polynomial> out;
    out.reserve(generators.size());
    for (const auto& g : generators) out.push_back(g.expand());
    return out;
}

std::string PolySystem::param(const std::string& key) const {
    for (const auto& [k, v] : params)
        if (k == key) return v;
    return {};
}

namespace {
constexpr std::string_view kHeader = "# polycert system v1";
}

std::string PolySystem::to_text() const {
    std::ostringstream out;
    out << kHeader << '\n';
    out << "encoding " << encoding << '\n';
    for (const auto& [k, v] : params) out << "param " << k << ' ' << v << '\n';
    for (const auto& [var, dom] : domains) out << "domain " << var.to_string() << ' ' << dom.to_string() << '\n';
    out << "generators " << generators.size() << '\n';
    for (const auto& g : generators) out << g.to_string() << '\n';
    return out.str();
}

PolySystem PolySystem::parse(std::string_view text) {
    PolySystem sys;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::invalid_argument("system line " + std::to_string(line_no) + ": " + what);
    };
    if (!std::getline(in, line) || line != kHeader) {
        line_no = 1;
        fail("missing system header");
    }
    ++line_no;
    long expected = -1;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string word;
        ls >> word;
        if (word == "encoding") {
            ls >> sys.encoding;
        } else if (word == "param") {
            std::string k, v;
            if (!(ls >> k >> v)) fail("bad param line");
            sys.params.emplace_back(k, v);
        } else if (word == "domain") {
            std::string var, kind;
            if (!(ls >> var >> kind)) fail("bad domain line");
            std::string rest;
            std::getline(ls, rest);
            DomainSpec d;
            try {
                d = DomainSpec::parse(kind + rest);
            } catch (const std::invalid_argument& e) {
                fail(e.what());
            }
            sys.domains[VarId::parse(var)] = d;
        } else if (word == "generators") {
            if (!(ls >> expected) || expected < 0) fail("bad generator count");
            break;
        } else {
            fail("unexpected line");
        }
    }
    if (expected < 0) fail("missing generator block");
    for (long i = 0; i < expected; ++i) {
        if (!std::getline(in, line)) fail("truncated generator block");
        ++line_no;
        try {
            sys.generators.push_back(Generator::parse(line));
        } catch (const std::invalid_argument& e) {
            fail(e.what());
        }
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty()) fail("trailing content");
    }
    sys.validate();
    return sys;
}

}  // namespace polycert
