#include "lcf/model.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <stdexcept>
#include <unordered_map>

namespace lcf {

std::string ColorSet::to_string() const {
    std::string out = "{";
    bool first = true;
    for (int c : members()) {
        if (!first) out += ",";
        out += std::to_string(c);
        first = false;
    }
    return out + "}";
}

std::vector<ColorSet> k_subsets(int universe, int k) {
    if (universe < 0 || k < 0 || universe > ColorSet::kMaxLabel)
        throw std::invalid_argument("k_subsets: bad universe/size");
    std::vector<ColorSet> out;
    if (k > universe) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    std::iota(idx.begin(), idx.end(), 1);
    while (true) {
        out.push_back(ColorSet::from_labels(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == universe - k + i + 1) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

ExactCount ipow(long base, unsigned long exp) {
    ExactCount b = base;
    ExactCount r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), exp);
    return r;
}

std::string to_decimal(const ExactCount& value) { return value.get_str(10); }

int ListAssignment::uniform_size() const {
    int size = -1;
    auto check = [&size](ColorSet s) {
        if (size < 0) size = s.size();
        return s.size() == size;
    };
    for (ColorSet s : x)
        if (!check(s)) return -1;
    for (ColorSet s : y)
        if (!check(s)) return -1;
    return size;
}

ColorSet ListAssignment::x_union() const {
    ColorSet u;
    for (ColorSet s : x) u = u | s;
    return u;
}

ColorSet canonical_x1(int m) { return ColorSet::range(1, m); }

ColorSet canonical_x2(int m, int d) { return ColorSet::range(1, d) | ColorSet::range(m + 1, 2 * m - d); }

std::vector<ColorSet> canonical_types(int m, int d) {
    if (m < 1 || d < 0 || d > m) throw std::invalid_argument("canonical_types: need 0 <= d <= m, m >= 1");
    return k_subsets(2 * m - d, m);
}

namespace {

std::uint64_t binomial_u64(int n, int k) {
    if (k < 0 || k > n) return 0;
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / static_cast<std::uint64_t>(i);
    return r;
}

} // namespace

CanonicalAssignment::CanonicalAssignment(int m, int d, std::vector<std::uint64_t> z) : m_(m), d_(d), z_(std::move(z)) {
    if (m < 1 || 2 * m > ColorSet::kMaxLabel) throw std::invalid_argument("CanonicalAssignment: m out of range");
    if (d < 0 || d > m) throw std::invalid_argument("CanonicalAssignment: need 0 <= d <= m");
    if (z_.size() != binomial_u64(2 * m - d, m))
        throw std::invalid_argument("CanonicalAssignment: z must have C(2m-d, m) entries");
    n_ = std::accumulate(z_.begin(), z_.end(), std::uint64_t{0});
}

CanonicalAssignment CanonicalAssignment::constant(int m, int d, std::size_t type_index, std::uint64_t n) {
    std::vector<std::uint64_t> z(binomial_u64(2 * m - d, m), 0);
    z.at(type_index) = n;
    return {m, d, std::move(z)};
}

ListAssignment CanonicalAssignment::to_lists() const {
    ListAssignment out;
    out.x = {x1(), x2()};
    const auto t = types();
    for (std::size_t i = 0; i < t.size(); ++i)
        for (std::uint64_t k = 0; k < z_[i]; ++k) out.y.push_back(t[i]);
    return out;
}

ExactCount chromatic_poly_k2n(long n, long m) {
    if (n < 1 || m < 0) throw std::invalid_argument("chromatic_poly_k2n: need n >= 1, m >= 0");
    const auto un = static_cast<unsigned long>(n);
    return ExactCount(m) * ipow(m - 1, un) + ExactCount(m) * (m - 1) * ipow(m - 2, un);
}

GraphFamily parse_family(std::string_view name) {
    if (name == "complete") return GraphFamily::complete;
    if (name == "cycle") return GraphFamily::cycle;
    if (name == "tree") return GraphFamily::tree;
    throw std::invalid_argument("unknown graph family '" + std::string(name) + "'");
}

std::string_view family_name(GraphFamily family) {
    switch (family) {
    case GraphFamily::complete: return "complete";
    case GraphFamily::cycle: return "cycle";
    case GraphFamily::tree: return "tree";
    }
    return "?";
}

ExactCount chromatic_poly_reference(GraphFamily family, long n, long m) {
    if (m < 0) throw std::invalid_argument("chromatic_poly_reference: m must be >= 0");
    switch (family) {
    case GraphFamily::complete: {
        if (n < 1) throw std::invalid_argument("complete graph needs n >= 1");
        ExactCount r = 1;
        for (long i = 0; i < n; ++i) r *= (m - i);
        return r;
    }
    case GraphFamily::cycle: {
        if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
        // (m-1)^n + (-1)^n (m-1); at m = 0 this is (-1)^n - (-1)^n = 0.
        ExactCount r = ipow(m - 1, static_cast<unsigned long>(n));
        r += (n % 2 == 0 ? 1 : -1) * ExactCount(m - 1);
        return r;
    }
    case GraphFamily::tree:
        if (n < 1) throw std::invalid_argument("tree needs n >= 1");
        return ExactCount(m) * ipow(m - 1, static_cast<unsigned long>(n - 1));
    }
    throw std::invalid_argument("invalid graph family");
}

CanonicalAssignment canonicalize(const ListAssignment& lists) {
    if (lists.x.size() != 2) throw std::invalid_argument("canonicalize: K_{2,n} assignments only");
    if (lists.y.empty()) throw std::invalid_argument("canonicalize: need n >= 1");
    const int m = lists.uniform_size();
    if (m < 1) throw std::invalid_argument("canonicalize: all lists must have the same positive size");

    const ColorSet both = lists.x[0] & lists.x[1];
    const ColorSet only1 = lists.x[0] - lists.x[1];
    const ColorSet only2 = lists.x[1] - lists.x[0];
    const ColorSet all = lists.x[0] | lists.x[1];
    const int d = both.size();

    std::array<int, ColorSet::kMaxLabel + 1> relabel{};
    int next = 1;
    for (int c : both.members()) relabel[static_cast<std::size_t>(c)] = next++;
    for (int c : only1.members()) relabel[static_cast<std::size_t>(c)] = next++;
    for (int c : only2.members()) relabel[static_cast<std::size_t>(c)] = next++;

    const auto types = canonical_types(m, d);
    std::unordered_map<std::uint64_t, std::size_t> rank;
    for (std::size_t i = 0; i < types.size(); ++i) rank.emplace(types[i].bits(), i);

    std::vector<std::uint64_t> z(types.size(), 0);
    for (ColorSet y : lists.y) {
        if (!y.is_subset_of(all))
            throw std::invalid_argument("canonicalize: y-list " + y.to_string() +
                                        " is not contained in L(x1) ∪ L(x2); apply push_into_union first");
        ColorSet mapped;
        for (int c : y.members()) mapped.insert(relabel[static_cast<std::size_t>(c)]);
        ++z[rank.at(mapped.bits())];
    }
    return {m, d, std::move(z)};
}

ListAssignment push_into_union(const ListAssignment& lists) {
    ListAssignment out = lists;
    const ColorSet q = lists.x_union();
    for (ColorSet& y : out.y) {
        while (true) {
            const ColorSet outside = y - q;
            if (outside.empty()) break;
            const ColorSet eligible = q - y;
            if (eligible.empty()) throw std::invalid_argument("push_into_union: |Q| smaller than a y-list");
            y.erase(outside.min());
            y.insert(eligible.min());
        }
    }
    return out;
}

} // namespace lcf
