#include "lcf/constructions.hpp"

#include <stdexcept>

namespace lcf {

namespace {

ExactCount binom(unsigned long n, unsigned long k) {
    ExactCount r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

unsigned long exponent(const ExactCount& e) {
    if (!e.fits_ulong_p()) throw std::overflow_error("general_formula: exponent too large");
    return e.get_ui();
}

void check_general(int n, int m, int t) {
    if (n < 2 || m < n + 1 || t < 1) throw std::invalid_argument("general construction needs n >= 2, m >= n+1, t >= 1");
    if (m + n * (n - 1) > ColorSet::kMaxLabel) throw std::invalid_argument("general construction: too many colors");
    long double size = t;
    for (int i = 0; i < n; ++i) size *= n;
    if (size > 5e6L) throw std::invalid_argument("general construction: n^n t too large");
}

void check_extension(int m, int t, int c) {
    if (m < 3 || t < 1 || c < 0 || c > 3) throw std::invalid_argument("extension needs m >= 3, t >= 1, c in 0..3");
    if (m + 2 > ColorSet::kMaxLabel) throw std::invalid_argument("extension: m too large");
}

} // namespace

std::string_view construction_family_name(ConstructionFamily family) {
    switch (family) {
    case ConstructionFamily::general_knt: return "general-knt";
    case ConstructionFamily::balanced_extension: return "balanced-extension";
    case ConstructionFamily::exhaustive_search: return "exhaustive-search";
    }
    return "unknown";
}

std::string Provenance::describe() const {
    std::string s(construction_family_name(family));
    s += " m=" + std::to_string(m);
    if (family == ConstructionFamily::general_knt) s += " n=" + std::to_string(n);
    if (family != ConstructionFamily::exhaustive_search) s += " t=" + std::to_string(t);
    if (family == ConstructionFamily::balanced_extension) s += " c=" + std::to_string(c);
    return s;
}

ListAssignment build_general(int n, int m, int t) {
    check_general(n, m, t);
    const ColorSet base = m - n >= 1 ? ColorSet::range(1, m - n) : ColorSet{};
    std::vector<ColorSet> blocks;
    for (int k = 1; k <= n; ++k) blocks.push_back(ColorSet::range(m + n * (k - 2) + 1, m + n * (k - 2) + n));

    ListAssignment lists;
    for (ColorSet s : blocks) lists.x.push_back(base | s);

    // Odometer over (s_1, ..., s_n), last coordinate fastest: lexicographic order.
    std::vector<int> idx(static_cast<std::size_t>(n), 0);
    while (true) {
        ColorSet a = base;
        for (int k = 0; k < n; ++k) a.insert(blocks[static_cast<std::size_t>(k)].members()[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])]);
        for (int r = 0; r < t; ++r) lists.y.push_back(a);
        int k = n - 1;
        while (k >= 0 && ++idx[static_cast<std::size_t>(k)] == n) idx[static_cast<std::size_t>(k--)] = 0;
        if (k < 0) break;
    }
    return lists;
}

ExactCount general_formula(int n, int m, int t) {
    check_general(n, m, t);
    const auto un = static_cast<unsigned long>(n);
    const auto ut = static_cast<unsigned long>(t);
    ExactCount nn = ipow(n, un);

    ExactCount first = nn;
    for (int i = 0; i <= n; ++i) {
        const ExactCount e = ut * binom(un, static_cast<unsigned long>(i)) * ipow(n - 1, un - static_cast<unsigned long>(i));
        first *= ipow(m - i, exponent(e));
    }

    ExactCount rest = 0;
    for (int big_n = 1; big_n <= n; ++big_n) {
        if (big_n > m - n) break; // C(m-n, N) = 0
        for (int s = 0; s <= n - big_n; ++s) {
            ExactCount surj = 0;
            for (int i = 0; i <= big_n - 1; ++i) {
                ExactCount term = binom(static_cast<unsigned long>(big_n), static_cast<unsigned long>(i)) *
                                  ipow(big_n - i, static_cast<unsigned long>(n - s));
                if (i % 2 == 0)
                    surj += term;
                else
                    surj -= term;
            }
            ExactCount term = ipow(n, static_cast<unsigned long>(s)) * binom(un, static_cast<unsigned long>(s)) *
                              binom(static_cast<unsigned long>(m - n), static_cast<unsigned long>(big_n)) * surj;
            for (int i = 0; i <= s; ++i) {
                const ExactCount e = ut * binom(static_cast<unsigned long>(s), static_cast<unsigned long>(i)) *
                                     ipow(n - 1, static_cast<unsigned long>(s - i)) * ipow(n, un - static_cast<unsigned long>(s));
                term *= ipow(m - big_n - i, exponent(e));
            }
            rest += term;
        }
    }
    return first + rest;
}

ListAssignment build_extension(int m, int t, int c) {
    check_extension(m, t, c);
    ListAssignment lists = build_general(2, m, t);
    const ColorSet base = m - 2 >= 1 ? ColorSet::range(1, m - 2) : ColorSet{};
    const ColorSet extra[3] = {base | ColorSet{m - 1, m + 1}, base | ColorSet{m, m + 2}, base | ColorSet{m - 1, m + 2}};
    for (int k = 0; k < c; ++k) lists.y.push_back(extra[k]);
    return lists;
}

ExactCount extension_formula(int m, int t, int c) {
    check_extension(m, t, c);
    const auto ut = static_cast<unsigned long>(t);
    auto p = [](long b, unsigned long e) { return ipow(b, e); };
    const ExactCount mm = m;
    switch (c) {
    case 0:
        return (mm - 2) * p(m - 1, 4 * ut) + (mm - 3) * p(m - 2, 4 * ut + 1) + 4 * p(m - 2, 2 * ut + 1) * p(m - 1, 2 * ut) +
               4 * p(m - 2, ut) * p(m - 1, 2 * ut) * p(m, ut);
    case 1:
        return (mm - 2) * p(m - 1, 4 * ut + 1) + (mm - 3) * p(m - 2, 4 * ut + 2) +
               2 * (2 * mm - 3) * p(m - 2, 2 * ut + 1) * p(m - 1, 2 * ut) + 4 * p(m - 2, ut) * p(m - 1, 2 * ut + 1) * p(m, ut);
    case 2:
        return (mm - 2) * p(m - 1, 4 * ut + 2) + (mm - 3) * p(m - 2, 4 * ut + 3) + 4 * p(m - 2, 2 * ut + 2) * p(m - 1, 2 * ut + 1) +
               2 * (2 * mm * mm - 4 * mm + 1) * p(m - 2, ut) * p(m - 1, 2 * ut) * p(m, ut);
    default:
        return (mm - 2) * p(m - 1, 4 * ut + 3) + (mm - 3) * p(m - 2, 4 * ut + 4) +
               2 * (2 * mm - 3) * p(m - 2, 2 * ut + 2) * p(m - 1, 2 * ut + 1) +
               2 * (2 * mm * mm - 4 * mm + 1) * p(m - 2, ut) * p(m - 1, 2 * ut + 1) * p(m, ut);
    }
}

std::optional<Witness> construction_witness(int n, int m) {
    if (m < 3 || n < 4 || m + 2 > ColorSet::kMaxLabel) return std::nullopt;
    const int t = n / 4;
    const int c = n % 4;
    const ExactCount formula = extension_formula(m, t, c);
    if (formula >= chromatic_poly_k2n(n, m)) return std::nullopt;
    Witness w;
    w.lists = build_extension(m, t, c);
    w.assignment = canonicalize(w.lists);
    w.count = evaluate_pair_product(*w.assignment);
    if (w.count != formula) throw std::logic_error("extension formula disagrees with direct evaluation");
    w.provenance = {ConstructionFamily::balanced_extension, m, t, c, 2};
    return w;
}

std::optional<Witness> witness_search(int n, int m, const SearchBudget& budget) {
    if (auto w = construction_witness(n, m)) return w;
    const Verdict v = m == 2 ? min_list_count_two(n, std::nullopt, budget.max_states) : min_list_count(n, m, budget);
    if (v.relation != Relation::less) return std::nullopt;
    Witness w;
    w.count = *v.min_value;
    if (v.witness) {
        w.assignment = v.witness;
        w.lists = v.witness->to_lists();
    } else {
        w.lists = *v.explicit_witness;
    }
    w.provenance = {ConstructionFamily::exhaustive_search, m, 0, 0, 2};
    return w;
}

} // namespace lcf
