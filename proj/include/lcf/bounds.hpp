#ifndef LCF_BOUNDS_HPP
#define LCF_BOUNDS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lcf/exact.hpp"
#include "lcf/model.hpp"

namespace lcf {

/// How many pairs (i, j) of one pair class B_s have q = |K - {i, j}| equal to m-2, m-1, m.
struct QDistribution {
    std::map<int, std::uint64_t> counts;

    [[nodiscard]] std::uint64_t total() const;
    [[nodiscard]] std::uint64_t at(int q) const;
};

/// Pair classes of the counting lemma for L1, L2 with A1 = L1 ∩ L2, A2 = L1 - L2, A3 = L2 - L1:
/// 1 diagonal of A1 x A1, 2 off-diagonal of A1 x A1, 3 A1 x A3, 4 A1 x A2, 5 A2 x A3.
/// Requires 0 <= k_i <= a_i, a2 = a3, a1 + a2 = m and k1 + k2 + k3 <= m.
QDistribution counting_distribution(int statement, int a1, int a2, int a3, int k1, int k2, int k3, int m);

/// Nonnegative parts summing to n.
struct CompositionVector {
    std::vector<std::uint64_t> parts;

    [[nodiscard]] std::uint64_t n() const;
    [[nodiscard]] std::string to_string() const;
};

enum class Precision { confident, near_tie };

struct BoundValue {
    double value = 0;
    Precision precision = Precision::confident;
};

/// A bound evaluated against an exact comparand. `at_least` is bound >= comparand; when the two
/// agree to 1e-9 relative the decision is re-made at 100 significant digits and flagged.
struct Comparison {
    BoundValue bound;
    bool at_least = false;
};

/// Lower bound for |L(x1) ∩ L(x2)| = m-2 with class counts (X, Y, Z, W); m = 3 needs W = 0.
BoundValue dm2_lower_bound(int m, const CompositionVector& a);
Comparison dm2_compare(int m, const CompositionVector& a, const ExactCount& comparand);

enum class AppendixVariant { as_printed, corrected };

/// Case lower bounds for (m, d) in {(3,1), (3,0), (4,1), (4,0), (5,2), (5,1), (5,0)}.
/// Arity: (3,1) 3; (3,0) 1 or 2; (4,1) 2 (x, n-x) or 4; (4,0) 1 or 3; (5,2) 5; (5,1) 5; (5,0) 3.
/// One-part and (x, n-x) forms are the already-minimized expressions the verification loops use.
/// `corrected` only changes (5,2): its pair class F gets 2·3^{a1+a2}4^{a3+a4}5^{a5}.
BoundValue appendix_bound(int m, int d, const CompositionVector& a, AppendixVariant variant = AppendixVariant::as_printed);
Comparison appendix_compare(int m, int d, const CompositionVector& a, const ExactCount& comparand,
                            AppendixVariant variant = AppendixVariant::as_printed);

bool has_appendix_bound(int m, int d);

/// Class index of a canonical y-list type in the partition behind the bound for (m, d):
/// the d = m-2 lemma when d = m-2 (and m != 3 or the caller asks for it), else the per-d case bound.
int dm2_class(int m, ColorSet type);
int appendix_class(int m, int d, ColorSet type);

/// Aggregated class counts of an assignment, in the full arity of the matching bound.
CompositionVector dm2_class_counts(const CanonicalAssignment& a);
CompositionVector appendix_class_counts(const CanonicalAssignment& a);

struct ScanOptions {
    int n_min = 3;
    AppendixVariant variant = AppendixVariant::as_printed;
};

struct ScanLine {
    int m = 0;
    int n = 0;
    bool good = true;
    /// Name of the first failing bound family and its composition, when not good.
    std::string failing_family;
    std::optional<CompositionVector> failing_composition;
    bool near_tie = false;
    std::uint64_t compositions = 0;
};

/// Replays the verification loops for m in {3, 4, 5}: every composition of every applicable case
/// bound must reach P(K_{2,n}, m). Stops after the first bad n.
std::vector<ScanLine> scan_first_bad_n(int m, int n_max, const ScanOptions& options = {});

/// "n = K is good" / "n = K is the first bad n".
std::string scan_line_text(const ScanLine& line);

/// Exhaustive check that every canonical assignment with d = m-1 has P(G, L) >= P(G, m).
/// Relation::greater_or_equal_proven on success, less with a witness on failure.
Verdict dm1_inequality_check(int m, int n, const SearchBudget& budget = {});

/// floor(n/4) >= (m-1)^2 ln(16/7).
bool threshold_condition(int n, int m);

struct AnalyticParams {
    static constexpr double c1 = 1.24;
    static constexpr double c2 = 2.05;
    int m = 4;
};

std::pair<double, double> f_functions(int m);

/// Endpoints (lower, upper) for 0 < eps < 1 - 1/m.
std::pair<double, double> lemma_interval(int m, double eps);
std::pair<double, double> corollary_interval(int m, double eps);

/// f(x) = (m + 1/2) ln(m(1-x)), g(x) = -(m^2/2) ln(mx/(m-1)), h = f - g.
double upper_f(int m, double x);
double lower_g(int m, double x);

struct RolleSuite {
    int m = 4;
    double x_s = 0;
    double x_b = 0;
    /// A1..A7 of q.
    std::array<double, 7> a{};

    [[nodiscard]] double h(double x) const;
};

RolleSuite rolle_suite(int m);
std::array<double, 7> q_coefficients();
/// q expanded in powers of y, constant term first.
std::array<double, 7> q_monomial_coefficients();
double rolle_p(double y);
double rolle_q(double y);

/// eps in (x_s, x_b) with g(eps) <= n and n - g(eps) <= 1e-9; throws if n is out of range or f(eps) <= n.
double epsilon_solve(int m, double n);

/// ceil((n + 2.05) / 1.24) in integer arithmetic.
long tau_upper_bound(long n);

/// (|E| - 1)/ln(1 + sqrt 2) + 1.
double wqy_bound(long edge_count);

} // namespace lcf

#endif // LCF_BOUNDS_HPP
