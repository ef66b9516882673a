#ifndef LCF_COLOR_SET_HPP
#define LCF_COLOR_SET_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace lcf {

/// A finite set of color labels drawn from {1, ..., 63}, stored as a bit mask.
class ColorSet {
public:
    static constexpr int kMaxLabel = 63;

    constexpr ColorSet() = default;

    ColorSet(std::initializer_list<int> labels) {
        for (int c : labels) insert(c);
    }

    static ColorSet from_labels(std::span<const int> labels) {
        ColorSet s;
        for (int c : labels) {
            if (s.contains(c)) throw std::invalid_argument("duplicate color label " + std::to_string(c));
            s.insert(c);
        }
        return s;
    }

    /// {first, first+1, ..., last}; empty when last < first.
    static ColorSet range(int first, int last) {
        ColorSet s;
        for (int c = first; c <= last; ++c) s.insert(c);
        return s;
    }

    static constexpr ColorSet from_bits(std::uint64_t bits) {
        ColorSet s;
        s.bits_ = bits & ~std::uint64_t{1};
        return s;
    }

    void insert(int c) {
        check_label(c);
        bits_ |= std::uint64_t{1} << c;
    }
    void erase(int c) {
        check_label(c);
        bits_ &= ~(std::uint64_t{1} << c);
    }

    [[nodiscard]] constexpr bool contains(int c) const noexcept {
        return c >= 1 && c <= kMaxLabel && ((bits_ >> c) & 1U) != 0;
    }
    [[nodiscard]] constexpr int size() const noexcept { return std::popcount(bits_); }
    [[nodiscard]] constexpr bool empty() const noexcept { return bits_ == 0; }
    [[nodiscard]] constexpr std::uint64_t bits() const noexcept { return bits_; }

    /// Smallest label, or 0 for the empty set.
    [[nodiscard]] constexpr int min() const noexcept { return empty() ? 0 : std::countr_zero(bits_); }
    [[nodiscard]] constexpr int max() const noexcept { return empty() ? 0 : 63 - std::countl_zero(bits_); }

    [[nodiscard]] constexpr bool is_subset_of(ColorSet other) const noexcept {
        return (bits_ & ~other.bits_) == 0;
    }

    [[nodiscard]] std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(size()));
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
        return out;
    }

    [[nodiscard]] std::string to_string() const;

    friend constexpr ColorSet operator|(ColorSet a, ColorSet b) noexcept { return from_bits(a.bits_ | b.bits_); }
    friend constexpr ColorSet operator&(ColorSet a, ColorSet b) noexcept { return from_bits(a.bits_ & b.bits_); }
    friend constexpr ColorSet operator-(ColorSet a, ColorSet b) noexcept { return from_bits(a.bits_ & ~b.bits_); }
    friend constexpr bool operator==(ColorSet a, ColorSet b) noexcept = default;

    /// Lexicographic order of the sorted member sequences.
    friend bool lex_less(ColorSet a, ColorSet b) {
        auto x = a.members();
        auto y = b.members();
        return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
    }

private:
    static void check_label(int c) {
        if (c < 1 || c > kMaxLabel)
            throw std::out_of_range("color label " + std::to_string(c) + " outside [1, 63]");
    }

    std::uint64_t bits_ = 0;
};

/// All k-element subsets of {1, ..., universe} in lexicographic order.
std::vector<ColorSet> k_subsets(int universe, int k);

} // namespace lcf

#endif // LCF_COLOR_SET_HPP
