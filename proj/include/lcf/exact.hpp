#ifndef LCF_EXACT_HPP
#define LCF_EXACT_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lcf/model.hpp"

namespace lcf {

/// Thrown when an enumeration would exceed its configured size limit.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SearchBudget {
    /// Cap on leaf multisets visited by the minimizer. The default covers P_l(K_{2,n}, 3) for
    /// n <= 10 (396,504 leaves at n = 10) and stops short of n = 11 (1,056,184).
    std::uint64_t max_states = 500'000;
    double max_seconds = 1800.0;
    int parallel_width = 1;

    void validate() const;
};

struct SearchOptions {
    /// Skip subtrees whose sum of per-pair minimum-factor products already exceeds the incumbent.
    bool bound_pruning = true;
    /// Evaluate only multiplicity vectors that are lexicographically least in their orbit
    /// under the B/C/D block stabilizer.
    bool symmetry_pruning = false;
};

/// One y-list type and how many y-vertices carry it.
struct TypeCount {
    ColorSet list;
    std::uint64_t count = 0;
};

/// Sum over (i, j) in L(x1) x L(x2) of prod_A |A - {i, j}|^{z_A}. Pairs with i = j are included.
ExactCount evaluate_pair_product(const CanonicalAssignment& a);

/// Same decomposition for K_{l,n}: sum over color tuples of the small side.
/// Throws BudgetExceeded when prod |L(x_i)| > max_tuples.
ExactCount evaluate_general_l(const std::vector<ColorSet>& x_lists, const std::vector<TypeCount>& types,
                              std::uint64_t max_tuples = 50'000'000);

/// Groups equal y-lists of an explicit assignment.
std::vector<TypeCount> y_type_counts(const ListAssignment& lists);

/// Undirected simple graph on vertices 0..vertices-1.
struct SmallGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;

    /// x_i = i, y_k = l + k.
    static SmallGraph complete_bipartite(int l, int n);
    static SmallGraph complete(int n);
    static SmallGraph cycle(int n);
    static SmallGraph path(int n);
};

enum class VisitOrder { forward, reverse };

/// Counts proper list colorings by backtracking over every vertex. Throws BudgetExceeded
/// when prod |L(v)| exceeds max_product.
ExactCount brute_force_count(const SmallGraph& graph, const std::vector<ColorSet>& lists,
                             std::uint64_t max_product = 100'000'000, VisitOrder order = VisitOrder::forward);

/// K_{l,n} convenience: vertex lists are x followed by y.
ExactCount brute_force_count(const ListAssignment& lists, std::uint64_t max_product = 100'000'000,
                             VisitOrder order = VisitOrder::forward);

enum class Relation { equal, less, greater_or_equal_proven, unknown };

std::string_view relation_name(Relation r);
Relation parse_relation(std::string_view name);

/// Search outcome for one intersection size d.
struct DMinimum {
    int d = 0;
    /// True when some multiset in this d reached a value <= P(G, m); `value`/`z` then hold the
    /// least such value and its lexicographically smallest multiplicity vector.
    bool found = false;
    ExactCount value;
    std::vector<std::uint64_t> z;
    std::uint64_t states = 0;
    bool complete = false;
};

struct Verdict {
    int n = 0;
    int m = 0;
    Relation relation = Relation::unknown;
    /// P(K_{2,n}, m).
    ExactCount chromatic;
    std::optional<ExactCount> min_value;
    std::optional<CanonicalAssignment> witness;
    /// Used when the witness is not a canonical m-assignment (m = 2 search with fresh colors).
    std::optional<ListAssignment> explicit_witness;
    bool complete = false;
    std::uint64_t states = 0;
    std::vector<DMinimum> per_d;
    std::string source;
};

/// Least value <= P(K_{2,n}, m) over canonical assignments with intersection size d.
DMinimum minimize_for_d(int n, int m, int d, const SearchBudget& budget = {}, const SearchOptions& options = {});

/// Exact P_l(K_{2,n}, m) for m >= 3 by enumeration of canonical assignments (d = m down to 0).
/// m = 2 is routed to min_list_count_two. Budget exhaustion yields Relation::unknown with the
/// best value found so far.
Verdict min_list_count(int n, int m, const SearchBudget& budget = {}, const SearchOptions& options = {});

/// Exact P_l(K_{2,n}, 2). x-lists are canonical, y-lists range over the 2-subsets of the x-union
/// plus fresh colors; `universe` (default |x-union| + 2) caps the total number of colors.
Verdict min_list_count_two(int n, std::optional<int> universe = std::nullopt,
                           std::uint64_t max_states = 50'000'000);

/// Relation between P_l(K_{2,n}, m) and P(K_{2,n}, m): construction witnesses first,
/// exhaustive search second.
Verdict compare_with_chromatic(int n, int m, const SearchBudget& budget = {}, const SearchOptions& options = {});

} // namespace lcf

#endif // LCF_EXACT_HPP
