#include "lcf/bounds.hpp"

#include <cmath>
#include <functional>
#include <numeric>
#include <stdexcept>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace lcf {

namespace {

using HighReal = boost::multiprecision::cpp_bin_float_100;

template <class Real>
Real pw(double base, const Real& e) {
    using std::pow;
    using boost::multiprecision::pow;
    return pow(Real(base), e);
}

template <class Real>
Real dm2_impl(int m, const std::vector<std::uint64_t>& a) {
    const Real x(a[0]), y(a[1]), z(a[2]), w(a[3]);
    const Real mm(m);
    const Real t1 = (mm - 2) * pw<Real>(m - 1, x + y + z * (mm - 3) / (mm - 2) + w * (mm - 4) / (mm - 2)) *
                    pw<Real>(m, (z + 2 * w) / (mm - 2));
    Real t2 = 0;
    if (m > 3)
        t2 = (mm - 2) * (mm - 3) *
             pw<Real>(m - 2, x + y + z * (mm - 4) / (mm - 2) + w * (mm - 4) * (mm - 5) / ((mm - 2) * (mm - 3))) *
             pw<Real>(m - 1, z * 2 / (mm - 2) + w * 4 * (mm - 4) / ((mm - 2) * (mm - 3))) *
             pw<Real>(m, w * 2 / ((mm - 2) * (mm - 3)));
    const Real t3 = 4 * (mm - 2) *
                    pw<Real>(m - 2, x / 2 + y / 2 + z * 3 * (mm - 3) / (4 * (mm - 2)) + w * (mm - 4) / (mm - 2)) *
                    pw<Real>(m - 1, x / 2 + y / 2 + z * mm / (4 * (mm - 2)) + w * 2 / (mm - 2)) *
                    pw<Real>(m, z / (4 * (mm - 2)));
    const Real t4 = 4 * pw<Real>(m - 2, y / 4 + z / 2 + w) * pw<Real>(m - 1, x + y / 2 + z / 2) * pw<Real>(m, y / 4);
    return t1 + t2 + t3 + t4;
}

template <class Real>
Real appendix_impl(int m, int d, const std::vector<std::uint64_t>& parts, AppendixVariant variant) {
    std::vector<Real> a(parts.begin(), parts.end());
    Real n = 0;
    for (const auto& p : a) n += p;
    const std::size_t k = a.size();
    if (m == 3 && d == 1 && k == 3) {
        return pw<Real>(2, a[0]) * pw<Real>(2, a[1]) * pw<Real>(3, a[2]) +
               4 * pw<Real>(2, a[0] / 2) * pw<Real>(2, a[1] / 2) * pw<Real>(24, a[2] / 4) +
               4 * pw<Real>(2, a[0]) * pw<Real>(12, a[1] / 4) * pw<Real>(2, a[2] / 2);
    }
    if (m == 3 && d == 0 && k == 1) return 9 * pw<Real>(288, n / 9);
    if (m == 3 && d == 0 && k == 2) return 9 * pw<Real>(2, a[0]) * pw<Real>(288, a[1] / 9);
    if (m == 4 && d == 1 && k == 2) {
        const Real& x = a[0];
        return pw<Real>(3, x) * pw<Real>(4, n - x) + 6 * pw<Real>(6, x / 2) * pw<Real>(36, (n - x) / 3) +
               9 * pw<Real>(15552, x / 9) * pw<Real>(5184, (n - x) / 9);
    }
    if (m == 4 && d == 1 && k == 4) {
        return pw<Real>(3, a[0]) * pw<Real>(3, a[1]) * pw<Real>(4, a[2]) * pw<Real>(4, a[3]) +
               6 * pw<Real>(6, a[0] / 2) * pw<Real>(6, a[1] / 2) * pw<Real>(36, a[2] / 3) * pw<Real>(36, a[3] / 3) +
               9 * pw<Real>(3, a[0]) * pw<Real>(15552, a[1] / 9) * pw<Real>(18, a[2] / 3) * pw<Real>(5184, a[3] / 9);
    }
    if (m == 4 && d == 0 && k == 1) return 16 * pw<Real>(3, n / 2) * pw<Real>(4096, n / 16);
    if (m == 4 && d == 0 && k == 3)
        return 16 * pw<Real>(3, n / 2) * pw<Real>(6561, a[0] / 16) * pw<Real>(4608, a[1] / 16) * pw<Real>(4096, a[2] / 16);
    if (m == 5 && d == 2 && k == 5) {
        const Real e = pw<Real>(4, a[0]) * pw<Real>(4, a[1]) * pw<Real>(20, a[2] / 2) * pw<Real>(20, a[3] / 2) * pw<Real>(5, a[4]);
        const Real h = 12 * pw<Real>(12, a[0] / 2) * pw<Real>(12, a[1] / 2) * pw<Real>(2880, a[2] / 6) *
                       pw<Real>(2880, a[3] / 6) * pw<Real>(5120, a[4] / 6);
        const Real j = 9 * pw<Real>(4, a[0]) * pw<Real>(230400, a[1] / 9) * pw<Real>(48, a[2] / 3) *
                       pw<Real>(103680, a[3] / 9) * pw<Real>(36, a[4] / 3);
        if (variant == AppendixVariant::as_printed) return 4 * e + h + j;
        const Real f = 2 * pw<Real>(3, a[0] + a[1]) * pw<Real>(4, a[2] + a[3]) * pw<Real>(5, a[4]);
        return 2 * e + f + h + j;
    }
    if (m == 5 && d == 1 && k == 5) {
        return pw<Real>(4, a[0]) * pw<Real>(4, a[1]) * pw<Real>(4, a[2]) * pw<Real>(5, a[3]) * pw<Real>(5, a[4]) +
               8 * pw<Real>(12, a[0] / 2) * pw<Real>(12, a[1] / 2) * pw<Real>(12, a[2] / 2) * pw<Real>(128000, a[3] / 8) *
                   pw<Real>(128000, a[4] / 8) +
               16 * pw<Real>(4, a[0]) * pw<Real>(3538944000.0, a[1] / 16) * pw<Real>(240, a[2] / 4) *
                   pw<Real>(192, a[3] / 4) * pw<Real>(34560, a[4] / 8);
    }
    if (m == 5 && d == 0 && k == 3) {
        return 25 * pw<Real>(4, a[0]) * pw<Real>(3, a[1] * 4 / 25) * pw<Real>(4, a[1] * 17 / 25) * pw<Real>(5, a[1] * 4 / 25) *
               pw<Real>(3, a[2] * 6 / 25) * pw<Real>(4, a[2] * 13 / 25) * pw<Real>(5, a[2] * 6 / 25);
    }
    throw std::invalid_argument("appendix_bound: unsupported (m, d) = (" + std::to_string(m) + ", " + std::to_string(d) +
                                ") with " + std::to_string(k) + " parts");
}

HighReal to_high(const ExactCount& v) { return HighReal(v.get_str()); }

template <class Fn>
Comparison compare_with(Fn&& fn, const ExactCount& comparand) {
    Comparison c;
    c.bound.value = fn(double{});
    const double p = comparand.get_d();
    if (std::fabs(c.bound.value - p) < 1e-9 * std::max(1.0, p)) {
        c.bound.precision = Precision::near_tie;
        c.at_least = fn(HighReal{}) >= to_high(comparand);
    } else {
        c.at_least = c.bound.value >= p;
    }
    return c;
}

void check_dm2(int m, const CompositionVector& a) {
    if (m < 3) throw std::invalid_argument("dm2_lower_bound: m >= 3 required");
    if (a.parts.size() != 4) throw std::invalid_argument("dm2_lower_bound: four class counts required");
    if (m == 3 && a.parts[3] != 0) throw std::invalid_argument("dm2_lower_bound: m = 3 requires a4 = 0");
}

bool supported_arity(int m, int d, std::size_t k) {
    if (m == 3 && d == 1) return k == 3;
    if (m == 3 && d == 0) return k == 1 || k == 2;
    if (m == 4 && d == 1) return k == 2 || k == 4;
    if (m == 4 && d == 0) return k == 1 || k == 3;
    if (m == 5 && (d == 2 || d == 1)) return k == 5;
    if (m == 5 && d == 0) return k == 3;
    return false;
}

void check_appendix(int m, int d, const CompositionVector& a) {
    if (!has_appendix_bound(m, d))
        throw std::invalid_argument("appendix_bound: unsupported (m, d) = (" + std::to_string(m) + ", " + std::to_string(d) + ")");
    if (!supported_arity(m, d, a.parts.size()))
        throw std::invalid_argument("appendix_bound: wrong number of parts for (" + std::to_string(m) + ", " + std::to_string(d) + ")");
}

} // namespace

std::uint64_t QDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto& [q, c] : counts) t += c;
    return t;
}

std::uint64_t QDistribution::at(int q) const {
    auto it = counts.find(q);
    return it == counts.end() ? 0 : it->second;
}

QDistribution counting_distribution(int statement, int a1, int a2, int a3, int k1, int k2, int k3, int m) {
    if (statement < 1 || statement > 5) throw std::invalid_argument("counting_distribution: statement must be 1..5");
    if (a1 < 0 || a2 < 0 || a3 < 0 || k1 < 0 || k2 < 0 || k3 < 0 || k1 > a1 || k2 > a2 || k3 > a3)
        throw std::invalid_argument("counting_distribution: need 0 <= k_i <= a_i");
    if (a2 != a3 || a1 + a2 != m) throw std::invalid_argument("counting_distribution: need a1 + a2 = a1 + a3 = m");
    if (k1 + k2 + k3 > m) throw std::invalid_argument("counting_distribution: |K| exceeds m");

    // Statements 3-5 share one shape over A_p x A_q.
    auto cross = [m](std::int64_t ap, std::int64_t kp, std::int64_t aq, std::int64_t kq) {
        QDistribution d;
        d.counts[m - 2] = static_cast<std::uint64_t>(kp * kq);
        d.counts[m - 1] = static_cast<std::uint64_t>(kp * aq + kq * ap - 2 * kp * kq);
        d.counts[m] = static_cast<std::uint64_t>((ap - kp) * (aq - kq));
        return d;
    };
    QDistribution d;
    switch (statement) {
    case 1:
        d.counts[m - 2] = 0;
        d.counts[m - 1] = static_cast<std::uint64_t>(k1);
        d.counts[m] = static_cast<std::uint64_t>(a1 - k1);
        return d;
    case 2:
        d.counts[m - 2] = static_cast<std::uint64_t>(k1 * (k1 - 1));
        d.counts[m - 1] = static_cast<std::uint64_t>(2 * k1 * (a1 - k1));
        d.counts[m] = static_cast<std::uint64_t>((a1 - k1) * std::max(a1 - k1 - 1, 0));
        return d;
    case 3: return cross(a1, k1, a3, k3);
    case 4: return cross(a1, k1, a2, k2);
    default: return cross(a2, k2, a3, k3);
    }
}

std::uint64_t CompositionVector::n() const { return std::accumulate(parts.begin(), parts.end(), std::uint64_t{0}); }

std::string CompositionVector::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i) s += ", ";
        s += std::to_string(parts[i]);
    }
    return s + ")";
}

BoundValue dm2_lower_bound(int m, const CompositionVector& a) {
    check_dm2(m, a);
    return {dm2_impl<double>(m, a.parts), Precision::confident};
}

Comparison dm2_compare(int m, const CompositionVector& a, const ExactCount& comparand) {
    check_dm2(m, a);
    return compare_with([&](auto tag) { return dm2_impl<decltype(tag)>(m, a.parts); }, comparand);
}

bool has_appendix_bound(int m, int d) {
    return (m == 3 && (d == 0 || d == 1)) || (m == 4 && (d == 0 || d == 1)) || (m == 5 && d >= 0 && d <= 2);
}

BoundValue appendix_bound(int m, int d, const CompositionVector& a, AppendixVariant variant) {
    check_appendix(m, d, a);
    return {appendix_impl<double>(m, d, a.parts, variant), Precision::confident};
}

Comparison appendix_compare(int m, int d, const CompositionVector& a, const ExactCount& comparand, AppendixVariant variant) {
    check_appendix(m, d, a);
    return compare_with([&](auto tag) { return appendix_impl<decltype(tag)>(m, d, a.parts, variant); }, comparand);
}

int dm2_class(int m, ColorSet type) {
    const int d = m - 2;
    const ColorSet dblock = d >= 1 ? ColorSet::range(1, d) : ColorSet{};
    const int in_d = (type & dblock).size();
    const int in_b = (type & ColorSet{m - 1, m}).size();
    if (in_d == d) return in_b == 1 ? 1 : 0;
    return in_d == d - 1 ? 2 : 3;
}

int appendix_class(int m, int d, ColorSet type) {
    if (d == m - 2 && m == 3) return dm2_class(m, type);
    const ColorSet dblock = d >= 1 ? ColorSet::range(1, d) : ColorSet{};
    const ColorSet bblock = ColorSet::range(d + 1, m);
    const int a = (type & dblock).size();
    const int k = (type & bblock).size();
    if (d == 0) {
        const int lo = std::min(k, m - k);
        return lo; // (3,0): {3,0} -> 0, {2,1} -> 1; (4,0): 0,1,2; (5,0): 0,1,2
    }
    if (m == 4 && d == 1) {
        if (a == 1) return (k == 0 || k == 3) ? 0 : 1;
        return (k == 1 || k == 3) ? 2 : 3;
    }
    if (m == 5 && d == 1) {
        if (a == 1) return std::min(k, 4 - k);
        return (k == 4 || k == 1) ? 3 : 4;
    }
    if (m == 5 && d == 2) {
        if (a == 2) return (k == 0 || k == 3) ? 0 : 1;
        if (a == 1) return (k == 3 || k == 1) ? 2 : 3;
        return 4;
    }
    throw std::invalid_argument("appendix_class: unsupported (m, d)");
}

namespace {

CompositionVector aggregate(const CanonicalAssignment& a, std::size_t arity, int (*cls)(int, int, ColorSet)) {
    CompositionVector out;
    out.parts.assign(arity, 0);
    const auto types = a.types();
    for (std::size_t t = 0; t < types.size(); ++t)
        out.parts[static_cast<std::size_t>(cls(a.m(), a.d(), types[t]))] += a.z()[t];
    return out;
}

int dm2_class_adapter(int m, int, ColorSet type) { return dm2_class(m, type); }

std::size_t appendix_arity(int m, int d) {
    if (m == 3) return d == 1 ? 3 : 2;
    if (m == 4) return d == 1 ? 4 : 3;
    return d == 0 ? 3 : 5;
}

} // namespace

CompositionVector dm2_class_counts(const CanonicalAssignment& a) {
    if (a.d() != a.m() - 2 || a.m() < 3) throw std::invalid_argument("dm2_class_counts: needs d = m - 2");
    return aggregate(a, 4, &dm2_class_adapter);
}

CompositionVector appendix_class_counts(const CanonicalAssignment& a) {
    if (!has_appendix_bound(a.m(), a.d())) throw std::invalid_argument("appendix_class_counts: unsupported (m, d)");
    return aggregate(a, appendix_arity(a.m(), a.d()), &appendix_class);
}

namespace {

/// Calls fn on every composition of n into k parts, first part outermost, last part the remainder.
template <class Fn>
bool for_each_composition(std::uint64_t n, std::size_t k, Fn&& fn) {
    std::vector<std::uint64_t> parts(k, 0);
    auto rec = [&](auto&& self, std::size_t i, std::uint64_t left) -> bool {
        if (i + 1 == k) {
            parts[i] = left;
            return fn(parts);
        }
        for (std::uint64_t v = 0; v <= left; ++v) {
            parts[i] = v;
            if (!self(self, i + 1, left - v)) return false;
        }
        return true;
    };
    return rec(rec, 0, n);
}

struct Family {
    std::string name;
    std::size_t arity;
    std::function<Comparison(const CompositionVector&, const ExactCount&)> check;
};

} // namespace

std::vector<ScanLine> scan_first_bad_n(int m, int n_max, const ScanOptions& options) {
    if (m < 3 || m > 5) throw std::invalid_argument("scan_first_bad_n: m must be 3, 4 or 5");
    if (options.n_min < 1 || n_max < options.n_min) throw std::invalid_argument("scan_first_bad_n: bad n range");

    std::vector<Family> families;
    if (m == 3) {
        families.push_back({"d=1 lemma (w=0)", 3, [](const CompositionVector& a, const ExactCount& p) {
                                CompositionVector full{{a.parts[0], a.parts[1], a.parts[2], 0}};
                                return dm2_compare(3, full, p);
                            }});
        families.push_back({"d=0", 1, [](const CompositionVector& a, const ExactCount& p) { return appendix_compare(3, 0, a, p); }});
    } else {
        families.push_back({"d=" + std::to_string(m - 2) + " lemma", 4,
                            [m](const CompositionVector& a, const ExactCount& p) { return dm2_compare(m, a, p); }});
        if (m == 4) {
            families.push_back({"d=1", 2, [](const CompositionVector& a, const ExactCount& p) { return appendix_compare(4, 1, a, p); }});
            families.push_back({"d=0", 1, [](const CompositionVector& a, const ExactCount& p) { return appendix_compare(4, 0, a, p); }});
        } else {
            const auto variant = options.variant;
            families.push_back({"d=2", 5, [variant](const CompositionVector& a, const ExactCount& p) {
                                    return appendix_compare(5, 2, a, p, variant);
                                }});
            families.push_back({"d=1", 5, [](const CompositionVector& a, const ExactCount& p) { return appendix_compare(5, 1, a, p); }});
            families.push_back({"d=0", 3, [](const CompositionVector& a, const ExactCount& p) { return appendix_compare(5, 0, a, p); }});
        }
    }

    std::vector<ScanLine> lines;
    for (int n = options.n_min; n <= n_max; ++n) {
        const ExactCount p = chromatic_poly_k2n(n, m);
        ScanLine line;
        line.m = m;
        line.n = n;
        for (const auto& fam : families) {
            for_each_composition(static_cast<std::uint64_t>(n), fam.arity, [&](const std::vector<std::uint64_t>& parts) {
                CompositionVector a{parts};
                ++line.compositions;
                const Comparison c = fam.check(a, p);
                if (c.bound.precision == Precision::near_tie) line.near_tie = true;
                if (!c.at_least) {
                    line.good = false;
                    line.failing_family = fam.name;
                    line.failing_composition = a;
                    return false;
                }
                return true;
            });
            if (!line.good) break;
        }
        lines.push_back(line);
        if (!line.good) break;
    }
    return lines;
}

std::string scan_line_text(const ScanLine& line) {
    return "n = " + std::to_string(line.n) + (line.good ? " is good" : " is the first bad n");
}

Verdict dm1_inequality_check(int m, int n, const SearchBudget& budget) {
    if (m < 3 || n < 3) throw std::invalid_argument("dm1_inequality_check: need m >= 3, n >= 3");
    SearchOptions options;
    options.bound_pruning = false;
    const DMinimum dm = minimize_for_d(n, m, m - 1, budget, options);
    Verdict v;
    v.n = n;
    v.m = m;
    v.chromatic = chromatic_poly_k2n(n, m);
    v.states = dm.states;
    v.complete = dm.complete;
    v.per_d.push_back(dm);
    v.source = "exhaustive d = m-1";
    if (dm.found) {
        v.min_value = dm.value;
        v.witness = CanonicalAssignment(m, m - 1, dm.z);
    }
    if (dm.found && dm.value < v.chromatic)
        v.relation = Relation::less;
    else
        v.relation = dm.complete ? Relation::greater_or_equal_proven : Relation::unknown;
    return v;
}

bool threshold_condition(int n, int m) {
    if (n < 1 || m < 1) throw std::invalid_argument("threshold_condition: need n, m >= 1");
    const long double rhs = static_cast<long double>(m - 1) * (m - 1) * std::log(16.0L / 7.0L);
    return static_cast<long double>(n / 4) >= rhs;
}

namespace {

void check_analytic_m(int m) {
    if (m < 4) throw std::invalid_argument("analytic functions need m >= 4");
}

void check_eps(int m, double eps) {
    check_analytic_m(m);
    if (!(eps > 0.0 && eps < 1.0 - 1.0 / m)) throw std::invalid_argument("eps must lie in (0, 1 - 1/m)");
}

} // namespace

std::pair<double, double> f_functions(int m) {
    check_analytic_m(m);
    const double md = m;
    const double common = (2 * (md - 1) * std::log1p(-1 / md) + (md - 1) * (md - 1) * std::log1p(-2 / md)) / (md * md);
    return {std::log1p(-1 / md) - common, std::log1p(-2 / md) - common};
}

std::pair<double, double> lemma_interval(int m, double eps) {
    check_eps(m, eps);
    const auto [f1, f2] = f_functions(m);
    return {(std::log(eps) + std::log(static_cast<double>(m)) - std::log(m - 1.0)) / f2,
            (std::log1p(-eps) + std::log(static_cast<double>(m))) / f1};
}

std::pair<double, double> corollary_interval(int m, double eps) {
    check_eps(m, eps);
    return {lower_g(m, eps), upper_f(m, eps)};
}

double upper_f(int m, double x) { return (m + 0.5) * std::log(m * (1.0 - x)); }

double lower_g(int m, double x) { return -(static_cast<double>(m) * m / 2.0) * std::log(m * x / (m - 1.0)); }

double RolleSuite::h(double x) const {
    if (!(x > 0.0 && x < 1.0)) throw std::invalid_argument("h: x must lie in (0, 1)");
    return upper_f(m, x) - lower_g(m, x);
}

RolleSuite rolle_suite(int m) {
    check_analytic_m(m);
    RolleSuite s;
    s.m = m;
    const double md = m;
    s.x_b = 1.0 - 1.0 / md;
    s.x_s = s.x_b * std::exp(2.0 * (-AnalyticParams::c1 * md + AnalyticParams::c2) / (md * md));
    s.a = q_coefficients();
    return s;
}

std::array<double, 7> q_coefficients() {
    const double c1 = AnalyticParams::c1;
    const double c2 = AnalyticParams::c2;
    const double e = std::exp(c1);
    return {2 * c2 * c2,
            -2 * c2 * c2 - 4 * c1 * c2,
            4 * c1 * c2 + 2 * c2 + 2 * c1 * c1,
            -2 * c2 - 2 * c1 * c1 - 2 * c1,
            2 * c1 + 1 - e,
            e * (2 * c2 + c1),
            -e * (2 * c2 * c2 + 2 * c1 * c2 + c1 * c1 / 2)};
}

std::array<double, 7> q_monomial_coefficients() {
    const auto a = q_coefficients();
    return {a[0],
            4 * a[0] + a[1],
            4 * a[0] + 4 * a[1] + a[2],
            4 * a[1] + 4 * a[2] + a[3],
            4 * a[2] + 4 * a[3] + a[4] + a[5] + a[6],
            4 * a[3] + 4 * a[4] + 2 * a[5],
            4 * a[4]};
}

double rolle_p(double y) {
    const double c1 = AnalyticParams::c1;
    const double c2 = AnalyticParams::c2;
    return y - (y - 1) * std::exp(2 * (-c1 * y + c2) / (y * y)) - std::exp(c1) * std::exp(-(c1 + 2 * c2) / (2 * y + 1));
}

double rolle_q(double y) {
    const auto a = q_coefficients();
    const double s = (2 * y + 1) * (2 * y + 1);
    const double y2 = y * y;
    const double y4 = y2 * y2;
    return a[0] * s + a[1] * y * s + a[2] * y2 * s + a[3] * y2 * y * s + a[4] * y4 * s + a[5] * (2 * y + 1) * y4 + a[6] * y4;
}

double epsilon_solve(int m, double n) {
    const RolleSuite s = rolle_suite(m);
    const double ceiling = AnalyticParams::c1 * m - AnalyticParams::c2;
    if (!(n > 0.0) || n > ceiling * (1 + 1e-12)) throw std::invalid_argument("epsilon_solve: n outside (0, 1.24m - 2.05]");
    double lo = s.x_s * (1 + 1e-15); // g(lo) >= n
    double hi = s.x_b * (1 - 1e-15); // g(hi) <  n
    if (lower_g(m, lo) < n) lo = s.x_s;
    if (lower_g(m, hi) >= n) throw std::runtime_error("epsilon_solve: n below g near x_b");
    for (int it = 0; it < 200 && hi - lo > 0; ++it) {
        const double mid = lo + (hi - lo) / 2;
        if (mid <= lo || mid >= hi) break;
        if (lower_g(m, mid) >= n)
            lo = mid;
        else
            hi = mid;
        if (n - lower_g(m, hi) <= 1e-9 && hi - lo < 1e-15) break;
    }
    if (!(n - lower_g(m, hi) <= 1e-9)) throw std::runtime_error("epsilon_solve: bisection did not converge");
    if (!(upper_f(m, hi) > n)) throw std::runtime_error("epsilon_solve: f(eps) <= n");
    return hi;
}

long tau_upper_bound(long n) {
    if (n < 2) throw std::invalid_argument("tau_upper_bound: n >= 2 required");
    return (100 * n + 205 + 123) / 124;
}

double wqy_bound(long edge_count) {
    if (edge_count < 1) throw std::invalid_argument("wqy_bound: edge_count >= 1 required");
    return static_cast<double>(edge_count - 1) / std::log1p(std::sqrt(2.0)) + 1.0;
}

} // namespace lcf
