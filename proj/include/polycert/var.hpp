#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <string_view>

namespace polycert {

/// Variable identifier: a family tag plus up to three small indices.
///
/// Ordering is lexicographic on (family, indices), with a shorter index tuple
/// ordered before any of its extensions. The whole identifier is packed into a
/// single 64-bit key whose integer order is exactly that ordering.
class VarId {
public:
    enum class Family : std::uint8_t { X = 0, Y = 1, Z = 2, S = 3, Delta = 4 };

    static constexpr int kMaxArity = 3;
    static constexpr int kMaxIndex = (1 << 20) - 2;

    constexpr VarId() = default;
    VarId(Family family, std::initializer_list<int> indices);

    static VarId x(int i) { return VarId(Family::X, {i}); }
    static VarId x(int i, int j) { return VarId(Family::X, {i, j}); }
    static VarId y(int i) { return VarId(Family::Y, {i}); }
    static VarId y(int i, int j) { return VarId(Family::Y, {i, j}); }
    static VarId y(int i, int j, int k) { return VarId(Family::Y, {i, j, k}); }
    static VarId z(int i, int j) { return VarId(Family::Z, {i, j}); }
    static VarId s(int i) { return VarId(Family::S, {i}); }
    static VarId delta(int a, int b, int k) { return VarId(Family::Delta, {a, b, k}); }

    Family family() const { return static_cast<Family>(key_ >> 60); }
    int arity() const;
    int index(int slot) const;
    std::uint64_t key() const { return key_; }

    /// "x_1", "y_2_3", "d_4_1_2" (the Delta family prints as "d").
    std::string to_string() const;
    /// Inverse of to_string. Throws std::invalid_argument.
    static VarId parse(std::string_view text);

    friend constexpr auto operator<=>(const VarId&, const VarId&) = default;

private:
    std::uint64_t key_ = 0;
};

char family_letter(VarId::Family f);

}  // namespace polycert
