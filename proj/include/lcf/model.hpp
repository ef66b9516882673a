#ifndef LCF_MODEL_HPP
#define LCF_MODEL_HPP

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

#include "lcf/color_set.hpp"

namespace lcf {

/// Exact nonnegative count of colorings. Never rounded.
using ExactCount = mpz_class;

/// base^exp with 0^0 = 1.
ExactCount ipow(long base, unsigned long exp);

std::string to_decimal(const ExactCount& value);

/// Sizes of the two partite sets of K_{l,n}.
struct GraphParams {
    int l = 2;
    int n = 1;
};

/// Per-vertex lists for K_{l,n}: `x` holds the l small-side lists, `y` the n large-side lists.
struct ListAssignment {
    std::vector<ColorSet> x;
    std::vector<ColorSet> y;

    [[nodiscard]] GraphParams params() const {
        return {static_cast<int>(x.size()), static_cast<int>(y.size())};
    }
    /// Common list size, or -1 when the lists are not all the same size.
    [[nodiscard]] int uniform_size() const;
    /// Union of the small-side lists.
    [[nodiscard]] ColorSet x_union() const;

    friend bool operator==(const ListAssignment&, const ListAssignment&) = default;
};

/// The C(2m-d, m) y-list types of a canonical m-assignment with |L(x1) ∩ L(x2)| = d,
/// in lexicographic subset order.
std::vector<ColorSet> canonical_types(int m, int d);

/// L(x1) = [m].
ColorSet canonical_x1(int m);
/// L(x2) = [d] ∪ {m+1, ..., 2m-d}.
ColorSet canonical_x2(int m, int d);

/// Symmetry-reduced m-assignment of K_{2,n}: the intersection size d of the two
/// small-side lists plus the multiplicity of every y-list type.
class CanonicalAssignment {
public:
    /// Validates 0 <= d <= m, |z| = C(2m-d, m), and sum(z) = n.
    CanonicalAssignment(int m, int d, std::vector<std::uint64_t> z);

    /// All n y-vertices carry the single type at `type_index`.
    static CanonicalAssignment constant(int m, int d, std::size_t type_index, std::uint64_t n);

    [[nodiscard]] int m() const noexcept { return m_; }
    [[nodiscard]] int d() const noexcept { return d_; }
    [[nodiscard]] std::uint64_t n() const noexcept { return n_; }
    [[nodiscard]] const std::vector<std::uint64_t>& z() const noexcept { return z_; }

    [[nodiscard]] ColorSet x1() const { return canonical_x1(m_); }
    [[nodiscard]] ColorSet x2() const { return canonical_x2(m_, d_); }
    [[nodiscard]] std::vector<ColorSet> types() const { return canonical_types(m_, d_); }

    /// Explicit lists, y-vertices listed type by type in rank order.
    [[nodiscard]] ListAssignment to_lists() const;

    friend bool operator==(const CanonicalAssignment&, const CanonicalAssignment&) = default;

private:
    int m_;
    int d_;
    std::uint64_t n_ = 0;
    std::vector<std::uint64_t> z_;
};

/// P(K_{2,n}, m) = m(m-1)^n + m(m-1)(m-2)^n, with 0^0 = 1.
ExactCount chromatic_poly_k2n(long n, long m);

enum class GraphFamily { complete, cycle, tree };

GraphFamily parse_family(std::string_view name);
std::string_view family_name(GraphFamily family);

/// Closed-form chromatic polynomials of K_n, C_n and n-vertex trees.
ExactCount chromatic_poly_reference(GraphFamily family, long n, long m);

/// Relabels a K_{2,n} assignment so that L(x1) = [m], L(x2) = [d] ∪ {m+1, ..., 2m-d}.
/// Colors of D, B = L(x1) - L(x2) and C = L(x2) - L(x1) keep their relative order.
/// Throws std::invalid_argument if list sizes differ or a y-list leaves L(x1) ∪ L(x2).
CanonicalAssignment canonicalize(const ListAssignment& lists);

/// Replaces, one color at a time, every y-color outside Q = ∪ L(x_i) by the smallest
/// color of Q - L(y_k). The number of proper colorings never increases.
ListAssignment push_into_union(const ListAssignment& lists);

} // namespace lcf

#endif // LCF_MODEL_HPP
