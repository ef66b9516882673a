#ifndef LCF_TEST_SUPPORT_HPP
#define LCF_TEST_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <vector>

#include "lcf/bounds.hpp"
#include "lcf/exact.hpp"
#include "lcf/model.hpp"

namespace testing_support {

using lcf::CanonicalAssignment;
using lcf::ColorSet;

inline std::mt19937_64& rng() {
    static std::mt19937_64 gen(20240611);
    return gen;
}

inline int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng()); }

/// Random composition of n into k parts (stars and bars).
inline std::vector<std::uint64_t> random_composition(std::uint64_t n, std::size_t k) {
    std::vector<std::uint64_t> cuts;
    for (std::size_t i = 0; i + 1 < k; ++i) cuts.push_back(std::uniform_int_distribution<std::uint64_t>(0, n)(rng()));
    std::sort(cuts.begin(), cuts.end());
    std::vector<std::uint64_t> parts;
    std::uint64_t prev = 0;
    for (auto c : cuts) {
        parts.push_back(c - prev);
        prev = c;
    }
    parts.push_back(n - prev);
    return parts;
}

inline CanonicalAssignment random_canonical(int m, int d, int n) {
    const auto types = lcf::canonical_types(m, d);
    std::vector<std::uint64_t> z(types.size(), 0);
    for (int k = 0; k < n; ++k) ++z[static_cast<std::size_t>(uniform(0, static_cast<int>(types.size()) - 1))];
    return CanonicalAssignment(m, d, z);
}

/// Every multiplicity vector of n over `types` entries.
inline void for_each_multiset(std::size_t types, std::uint64_t n, const std::function<void(const std::vector<std::uint64_t>&)>& fn) {
    std::vector<std::uint64_t> z(types, 0);
    std::function<void(std::size_t, std::uint64_t)> rec = [&](std::size_t t, std::uint64_t left) {
        if (t + 1 == types) {
            z[t] = left;
            fn(z);
            z[t] = 0;
            return;
        }
        for (std::uint64_t v = 0; v <= left; ++v) {
            z[t] = v;
            rec(t + 1, left - v);
        }
        z[t] = 0;
    };
    rec(0, n);
}

/// Exact P(G, L) of every canonical assignment for (m, d, n), computed with per-pair running
/// products along the enumeration (doubles are exact below 2^53, checked by the caller's sizes).
inline void for_each_evaluated(int m, int d, int n, const std::function<void(const std::vector<std::uint64_t>&, double)>& fn) {
    const auto types = lcf::canonical_types(m, d);
    const auto l1 = lcf::canonical_x1(m).members();
    const auto l2 = lcf::canonical_x2(m, d).members();
    std::vector<std::vector<double>> f(types.size());
    for (std::size_t t = 0; t < types.size(); ++t)
        for (int i : l1)
            for (int j : l2) {
                ColorSet rest = types[t];
                rest.erase(i);
                rest.erase(j);
                f[t].push_back(rest.size());
            }
    const std::size_t pairs = l1.size() * l2.size();
    std::vector<std::uint64_t> z(types.size(), 0);
    std::vector<std::vector<double>> prod(types.size() + 1, std::vector<double>(pairs, 1.0));
    std::function<void(std::size_t, int)> rec = [&](std::size_t t, int left) {
        if (t + 1 == types.size()) {
            z[t] = static_cast<std::uint64_t>(left);
            double total = 0;
            for (std::size_t p = 0; p < pairs; ++p) total += prod[t][p] * std::pow(f[t][p], left);
            fn(z, total);
            z[t] = 0;
            return;
        }
        prod[t + 1] = prod[t];
        for (int v = 0; v <= left; ++v) {
            z[t] = static_cast<std::uint64_t>(v);
            rec(t + 1, left - v);
            for (std::size_t p = 0; p < pairs; ++p) prod[t + 1][p] *= f[t][p];
        }
        z[t] = 0;
    };
    rec(0, n);
}

/// Pair groups used by the AM-GM bounds: E/F/H/J around D, or everything for d = 0.
inline std::map<char, std::vector<std::pair<int, int>>> pair_groups(int m, int d) {
    std::map<char, std::vector<std::pair<int, int>>> g;
    const ColorSet dblock = d >= 1 ? ColorSet::range(1, d) : ColorSet{};
    for (int i : lcf::canonical_x1(m).members())
        for (int j : lcf::canonical_x2(m, d).members()) {
            char key = 'A';
            if (d > 0) {
                const bool di = dblock.contains(i);
                const bool dj = dblock.contains(j);
                if (di && dj)
                    key = (i == j) ? 'E' : 'F';
                else if (di || dj)
                    key = 'H';
                else
                    key = 'J';
            }
            g[key].push_back({i, j});
        }
    return g;
}

/// AM-GM bound derived mechanically: for every pair group G the per-class product of q-values
/// must be the same for all types in the class; the bound is sum_G |G| prod_c (prod_G q)^{a_c/|G|}.
/// Returns NaN if some class is not homogeneous on some group.
inline double mechanical_bound(int m, int d, const std::vector<std::uint64_t>& a, const std::function<int(ColorSet)>& cls) {
    const auto types = lcf::canonical_types(m, d);
    double total = 0;
    for (const auto& [key, pairs] : pair_groups(m, d)) {
        double log_sum = 0;
        for (std::size_t c = 0; c < a.size(); ++c) {
            double sig = NAN;
            for (ColorSet t : types) {
                if (cls(t) != static_cast<int>(c)) continue;
                double s = 0;
                for (auto [i, j] : pairs) {
                    ColorSet rest = t;
                    rest.erase(i);
                    rest.erase(j);
                    s += rest.size() > 0 ? std::log(static_cast<double>(rest.size())) : -INFINITY;
                }
                if (std::isnan(sig))
                    sig = s;
                else if (std::fabs(sig - s) > 1e-12)
                    return NAN;
            }
            if (a[c] > 0) log_sum += static_cast<double>(a[c]) * (std::isnan(sig) ? 0.0 : sig);
        }
        total += static_cast<double>(pairs.size()) * std::exp(log_sum / static_cast<double>(pairs.size()));
    }
    return total;
}

} // namespace testing_support

#endif
