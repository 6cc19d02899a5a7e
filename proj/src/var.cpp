#include "polycert/var.hpp"
#include "polycert/rational.hpp"

#include <charconv>
#include <stdexcept>

namespace polycert {

namespace {

constexpr int kFieldBits = 20;
constexpr std::uint64_t kFieldMask = (std::uint64_t{1} << kFieldBits) - 1;

int field_shift(int slot) { return 60 - kFieldBits * (slot + 1); }

}  // namespace

VarId::VarId(Family family, std::initializer_list<int> indices) {
    if (indices.size() == 0 || indices.size() > kMaxArity)
        throw std::invalid_argument("VarId needs 1 to 3 indices");
    key_ = static_cast<std::uint64_t>(family) << 60;
    int slot = 0;
    for (int idx : indices) {
        if (idx < 0 || idx > kMaxIndex) throw std::invalid_argument("VarId index out of range");
        key_ |= (static_cast<std::uint64_t>(idx) + 1) << field_shift(slot);
        ++slot;
    }
}

int VarId::arity() const {
    int a = 0;
    while (a < kMaxArity && ((key_ >> field_shift(a)) & kFieldMask) != 0) ++a;
    return a;
}

int VarId::index(int slot) const {
    auto raw = (key_ >> field_shift(slot)) & kFieldMask;
    if (raw == 0) throw std::out_of_range("VarId index slot not present");
    return static_cast<int>(raw - 1);
}

char family_letter(VarId::Family f) {
    switch (f) {
        case VarId::Family::X: return 'x';
        case VarId::Family::Y: return 'y';
        case VarId::Family::Z: return 'z';
        case VarId::Family::S: return 's';
        case VarId::Family::Delta: return 'd';
    }
    return '?';
}

std::string VarId::to_string() const {
    std::string out(1, family_letter(family()));
    for (int s = 0; s < arity(); ++s) {
        out += '_';
        out += std::to_string(index(s));
    }
    return out;
}

VarId VarId::parse(std::string_view text) {
    if (text.size() < 3) throw std::invalid_argument("bad variable: " + std::string(text));
    Family fam;
    switch (text[0]) {
        case 'x': fam = Family::X; break;
        case 'y': fam = Family::Y; break;
        case 'z': fam = Family::Z; break;
        case 's': fam = Family::S; break;
        case 'd': fam = Family::Delta; break;
        default: throw std::invalid_argument("bad variable family: " + std::string(text));
    }
    int idx[kMaxArity] = {0, 0, 0};
    int count = 0;
    std::size_t pos = 1;
    while (pos < text.size()) {
        if (text[pos] != '_' || count == kMaxArity)
            throw std::invalid_argument("bad variable: " + std::string(text));
        ++pos;
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
        if (ec != std::errc() || ptr == text.data() + pos)
            throw std::invalid_argument("bad variable index: " + std::string(text));
        pos = static_cast<std::size_t>(ptr - text.data());
        idx[count++] = value;
    }
    switch (count) {
        case 1: return VarId(fam, {idx[0]});
        case 2: return VarId(fam, {idx[0], idx[1]});
        case 3: return VarId(fam, {idx[0], idx[1], idx[2]});
        default: throw std::invalid_argument("bad variable: " + std::string(text));
    }
}

Rational parse_rational(std::string_view text) {
    std::string s(text);
    if (s.empty()) throw std::invalid_argument("empty rational");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    bool seen_slash = false;
    bool digit_before = false, digit_after = false;
    for (std::size_t i = start; i < s.size(); ++i) {
        char c = s[i];
        if (c == '/') {
            if (seen_slash) throw std::invalid_argument("bad rational: " + s);
            seen_slash = true;
        } else if (c >= '0' && c <= '9') {
            (seen_slash ? digit_after : digit_before) = true;
        } else {
            throw std::invalid_argument("bad rational: " + s);
        }
    }
    if (!digit_before || (seen_slash && !digit_after)) throw std::invalid_argument("bad rational: " + s);
    if (s[0] == '+') s.erase(0, 1);
    Rational q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational: " + s);
    if (q.get_den() == 0) throw std::invalid_argument("zero denominator: " + s);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace polycert
