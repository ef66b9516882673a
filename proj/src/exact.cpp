#include "lcf/exact.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <thread>

#include "lcf/constructions.hpp"

namespace lcf {

using u128 = unsigned __int128;

void SearchBudget::validate() const {
    if (max_states == 0) throw std::invalid_argument("max_states must be positive");
    if (!(max_seconds > 0.0)) throw std::invalid_argument("max_seconds must be positive");
    if (parallel_width < 1) throw std::invalid_argument("parallel_width must be positive");
}

namespace {

ExactCount to_exact(u128 v) {
    ExactCount hi = static_cast<unsigned long>(static_cast<std::uint64_t>(v >> 64));
    ExactCount lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
    return (hi << 64) + lo;
}
const ExactCount& to_exact(const ExactCount& v) { return v; }

template <class Int>
Int from_exact(const ExactCount& v);

template <>
ExactCount from_exact<ExactCount>(const ExactCount& v) {
    return v;
}

template <>
u128 from_exact<u128>(const ExactCount& v) {
    ExactCount hi = v >> 64;
    ExactCount lo = v - (hi << 64);
    return (static_cast<u128>(hi.get_ui()) << 64) | static_cast<u128>(lo.get_ui());
}

/// Pair table for a K_{2,n} multiset search: factor(t, p) = |type_t - {i_p, j_p}|.
struct PairTable {
    int pairs = 0;
    int types = 0;
    std::vector<int> factor;     // types * pairs
    std::vector<int> suffix_min; // min over types t..T-1

    PairTable(ColorSet x1, ColorSet x2, const std::vector<ColorSet>& type_lists) {
        const auto l1 = x1.members();
        const auto l2 = x2.members();
        pairs = static_cast<int>(l1.size() * l2.size());
        types = static_cast<int>(type_lists.size());
        factor.resize(static_cast<std::size_t>(pairs * types));
        for (int t = 0; t < types; ++t) {
            int p = 0;
            for (int i : l1)
                for (int j : l2) {
                    ColorSet removed;
                    removed.insert(i);
                    removed.insert(j);
                    factor[static_cast<std::size_t>(t * pairs + p++)] = (type_lists[static_cast<std::size_t>(t)] - removed).size();
                }
        }
        suffix_min = factor;
        for (int t = types - 2; t >= 0; --t)
            for (int p = 0; p < pairs; ++p) {
                auto& cur = suffix_min[static_cast<std::size_t>(t * pairs + p)];
                cur = std::min(cur, suffix_min[static_cast<std::size_t>((t + 1) * pairs + p)]);
            }
    }

    [[nodiscard]] int f(int t, int p) const { return factor[static_cast<std::size_t>(t * pairs + p)]; }
};

struct Control {
    std::atomic<std::uint64_t> states{0};
    std::atomic<bool> abort{false};
    std::uint64_t max_states = 0;
    double max_seconds = 0;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
};

/// Permutations of type indices induced by the block stabilizer.
using OrbitGroup = std::vector<std::vector<std::uint32_t>>;

bool orbit_least(const std::vector<std::uint64_t>& z, const OrbitGroup& group, std::vector<std::uint64_t>& scratch) {
    for (const auto& perm : group) {
        for (std::size_t i = 0; i < z.size(); ++i) scratch[perm[i]] = z[i];
        for (std::size_t i = 0; i < z.size(); ++i) {
            if (scratch[i] < z[i]) return false;
            if (scratch[i] > z[i]) break;
        }
    }
    return true;
}

struct TaskResult {
    bool found = false;
    ExactCount value;
    std::vector<std::uint64_t> z;
};

template <class Int>
class MultisetSearch {
public:
    MultisetSearch(const PairTable& table, std::uint64_t n, const ExactCount& ceiling, const SearchOptions& options,
                   const OrbitGroup* group, Control& control)
        : table_(table), n_(n), ceiling_(from_exact<Int>(ceiling)), options_(options), group_(group), ctl_(control) {
        const auto width = static_cast<std::size_t>(n_ + 1);
        fpow_.resize(static_cast<std::size_t>(table_.types * table_.pairs) * width);
        mpow_.resize(fpow_.size());
        for (int t = 0; t < table_.types; ++t)
            for (int p = 0; p < table_.pairs; ++p) {
                const std::size_t base = static_cast<std::size_t>(t * table_.pairs + p) * width;
                const Int f = static_cast<Int>(table_.f(t, p));
                const Int g = static_cast<Int>(table_.suffix_min[static_cast<std::size_t>(t * table_.pairs + p)]);
                fpow_[base] = 1;
                mpow_[base] = 1;
                for (std::size_t e = 1; e < width; ++e) {
                    fpow_[base + e] = fpow_[base + e - 1] * f;
                    mpow_[base + e] = mpow_[base + e - 1] * g;
                }
            }
        buf_.assign(static_cast<std::size_t>(table_.types + 1), std::vector<Int>(static_cast<std::size_t>(table_.pairs)));
        z_.assign(static_cast<std::size_t>(table_.types), 0);
        full_z_.assign(z_.size(), 0);
        scratch_.assign(z_.size(), 0);
    }

    /// Enumerates every multiset whose first multiplicity is z0.
    TaskResult run(std::uint64_t z0) {
        found_ = false;
        z_[0] = z0;
        if (table_.types == 1) {
            leaf(0, n_, nullptr);
        } else {
            auto& cur = buf_[1];
            for (int p = 0; p < table_.pairs; ++p) cur[static_cast<std::size_t>(p)] = pw(0, p, z0);
            dfs(1, n_ - z0);
        }
        flush();
        TaskResult r;
        r.found = found_;
        if (found_) {
            r.value = to_exact(best_);
            r.z = best_z_;
        }
        return r;
    }

private:
    [[nodiscard]] const Int& pw(int t, int p, std::uint64_t e) const {
        return fpow_[static_cast<std::size_t>(t * table_.pairs + p) * (n_ + 1) + e];
    }
    [[nodiscard]] const Int& mpw(int t, int p, std::uint64_t e) const {
        return mpow_[static_cast<std::size_t>(t * table_.pairs + p) * (n_ + 1) + e];
    }

    void dfs(int t, std::uint64_t r) {
        if (aborted_) return;
        auto& cur = buf_[static_cast<std::size_t>(t)];
        if (r == 0 || t == table_.types - 1) {
            leaf(t, r, &cur);
            return;
        }
        if (options_.bound_pruning) {
            Int lb = 0;
            for (int p = 0; p < table_.pairs; ++p) lb += cur[static_cast<std::size_t>(p)] * mpw(t, p, r);
            if (found_ ? lb >= best_ : lb > ceiling_) return;
        }
        auto& next = buf_[static_cast<std::size_t>(t + 1)];
        next = cur;
        for (std::uint64_t z = 0; z <= r; ++z) {
            z_[static_cast<std::size_t>(t)] = z;
            dfs(t + 1, r - z);
            if (aborted_) return;
            if (z < r)
                for (int p = 0; p < table_.pairs; ++p) next[static_cast<std::size_t>(p)] *= table_.f(t, p);
        }
    }

    void leaf(int t, std::uint64_t r, const std::vector<Int>* cur) {
        if (seen_states_ + local_states_ >= ctl_.max_states) {
            aborted_ = true;
            ctl_.abort = true;
            return;
        }
        if (++local_states_ >= 4096) flush();
        Int value = 0;
        for (int p = 0; p < table_.pairs; ++p)
            value += (cur ? (*cur)[static_cast<std::size_t>(p)] : Int(1)) * pw(t, p, r);
        const bool accept = found_ ? value < best_ : value <= ceiling_;
        if (!accept) return;
        std::copy(z_.begin(), z_.begin() + t, full_z_.begin());
        full_z_[static_cast<std::size_t>(t)] = r;
        std::fill(full_z_.begin() + t + 1, full_z_.end(), 0);
        if (group_ != nullptr && !orbit_least(full_z_, *group_, scratch_)) return;
        found_ = true;
        best_ = value;
        best_z_ = full_z_;
    }

    void flush() {
        seen_states_ = ctl_.states.fetch_add(local_states_) + local_states_;
        local_states_ = 0;
        if (ctl_.abort) aborted_ = true;
        const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - ctl_.start;
        if (elapsed.count() > ctl_.max_seconds) {
            aborted_ = true;
            ctl_.abort = true;
        }
    }

    const PairTable& table_;
    std::uint64_t n_;
    Int ceiling_;
    SearchOptions options_;
    const OrbitGroup* group_;
    Control& ctl_;

    std::vector<Int> fpow_;
    std::vector<Int> mpow_;
    std::vector<std::vector<Int>> buf_;
    std::vector<std::uint64_t> z_;
    std::vector<std::uint64_t> full_z_;
    std::vector<std::uint64_t> scratch_;

    bool found_ = false;
    bool aborted_ = false;
    Int best_{};
    std::vector<std::uint64_t> best_z_;
    std::uint64_t local_states_ = 0;
    std::uint64_t seen_states_ = 0;
};

struct SearchOutcome {
    TaskResult best;
    std::uint64_t states = 0;
    bool complete = true;
};

template <class Int>
SearchOutcome run_search(const PairTable& table, std::uint64_t n, const ExactCount& ceiling, const SearchBudget& budget,
                         const SearchOptions& options, const OrbitGroup* group, std::uint64_t states_before) {
    Control ctl;
    ctl.max_states = budget.max_states > states_before ? budget.max_states - states_before : 0;
    ctl.max_seconds = budget.max_seconds;

    const std::uint64_t tasks = table.types == 1 ? 1 : n + 1;
    std::vector<TaskResult> results(tasks);
    std::atomic<std::uint64_t> next_task{0};

    auto worker = [&] {
        MultisetSearch<Int> search(table, n, ceiling, options, group, ctl);
        for (std::uint64_t task = next_task++; task < tasks; task = next_task++) {
            if (ctl.abort) break;
            results[task] = search.run(table.types == 1 ? n : task);
        }
    };
    const auto width = static_cast<std::uint64_t>(budget.parallel_width);
    if (width <= 1 || tasks == 1) {
        worker();
    } else {
        std::vector<std::jthread> threads;
        for (std::uint64_t i = 0; i < std::min(width, tasks); ++i) threads.emplace_back(worker);
    }

    SearchOutcome out;
    out.states = ctl.states;
    out.complete = !ctl.abort;
    for (auto& r : results) {
        if (!r.found) continue;
        if (!out.best.found || r.value < out.best.value) out.best = std::move(r);
    }
    return out;
}

bool fits_u128(int pairs, int max_factor, std::uint64_t n) {
    if (max_factor <= 1) return true;
    const double bits = std::log2(static_cast<double>(std::max(pairs, 1))) +
                        static_cast<double>(n) * std::log2(static_cast<double>(max_factor));
    return bits < 124.0;
}

SearchOutcome search_dispatch(ColorSet x1, ColorSet x2, const std::vector<ColorSet>& types, std::uint64_t n,
                              const ExactCount& ceiling, const SearchBudget& budget, const SearchOptions& options,
                              const OrbitGroup* group, std::uint64_t states_before) {
    PairTable table(x1, x2, types);
    const int max_factor = *std::max_element(table.factor.begin(), table.factor.end());
    if (fits_u128(table.pairs, max_factor, n))
        return run_search<u128>(table, n, ceiling, budget, options, group, states_before);
    return run_search<ExactCount>(table, n, ceiling, budget, options, group, states_before);
}

OrbitGroup block_stabilizer(int m, int d) {
    const auto types = canonical_types(m, d);
    std::map<std::uint64_t, std::uint32_t> rank;
    for (std::size_t i = 0; i < types.size(); ++i) rank.emplace(types[i].bits(), static_cast<std::uint32_t>(i));

    std::vector<int> dperm(static_cast<std::size_t>(d));
    std::vector<int> bperm(static_cast<std::size_t>(m - d));
    std::vector<int> cperm(static_cast<std::size_t>(m - d));
    std::iota(dperm.begin(), dperm.end(), 1);
    OrbitGroup group;
    do {
        std::iota(bperm.begin(), bperm.end(), d + 1);
        do {
            std::iota(cperm.begin(), cperm.end(), m + 1);
            do {
                for (int swap = 0; swap < 2; ++swap) {
                    // color c -> image[c]; B and C exchange blockwise when swap = 1.
                    std::vector<int> image(static_cast<std::size_t>(2 * m - d + 1));
                    for (int i = 0; i < d; ++i) image[static_cast<std::size_t>(i + 1)] = dperm[static_cast<std::size_t>(i)];
                    for (int i = 0; i < m - d; ++i) {
                        const int b = bperm[static_cast<std::size_t>(i)];
                        const int c = cperm[static_cast<std::size_t>(i)];
                        image[static_cast<std::size_t>(d + 1 + i)] = swap ? c : b;
                        image[static_cast<std::size_t>(m + 1 + i)] = swap ? b : c;
                    }
                    std::vector<std::uint32_t> perm(types.size());
                    for (std::size_t t = 0; t < types.size(); ++t) {
                        ColorSet mapped;
                        for (int c : types[t].members()) mapped.insert(image[static_cast<std::size_t>(c)]);
                        perm[t] = rank.at(mapped.bits());
                    }
                    group.push_back(std::move(perm));
                }
            } while (std::next_permutation(cperm.begin(), cperm.end()));
        } while (std::next_permutation(bperm.begin(), bperm.end()));
    } while (std::next_permutation(dperm.begin(), dperm.end()));
    return group;
}

} // namespace

ExactCount evaluate_pair_product(const CanonicalAssignment& a) {
    const auto types = a.types();
    const ColorSet x1 = a.x1();
    const ColorSet x2 = a.x2();
    ExactCount total = 0;
    for (int i : x1.members())
        for (int j : x2.members()) {
            ExactCount term = 1;
            for (std::size_t t = 0; t < types.size(); ++t) {
                if (a.z()[t] == 0) continue;
                ColorSet rest = types[t];
                rest.erase(i);
                rest.erase(j);
                term *= ipow(rest.size(), a.z()[t]);
            }
            total += term;
        }
    return total;
}

ExactCount evaluate_general_l(const std::vector<ColorSet>& x_lists, const std::vector<TypeCount>& types,
                              std::uint64_t max_tuples) {
    if (x_lists.empty()) throw std::invalid_argument("evaluate_general_l: need l >= 1");
    u128 tuples = 1;
    for (ColorSet s : x_lists) {
        tuples *= static_cast<u128>(s.size());
        if (tuples > max_tuples) throw BudgetExceeded("evaluate_general_l: color tuple space exceeds budget");
    }
    // Tuples with the same color set contribute identical products.
    std::map<std::uint64_t, std::uint64_t> by_set;
    std::vector<std::vector<int>> lists;
    for (ColorSet s : x_lists) lists.push_back(s.members());
    std::vector<std::size_t> idx(lists.size(), 0);
    if (std::any_of(lists.begin(), lists.end(), [](const auto& l) { return l.empty(); })) return 0;
    while (true) {
        std::uint64_t bits = 0;
        for (std::size_t k = 0; k < lists.size(); ++k) bits |= std::uint64_t{1} << lists[k][idx[k]];
        ++by_set[bits];
        std::size_t k = lists.size();
        while (k > 0) {
            --k;
            if (++idx[k] < lists[k].size()) break;
            idx[k] = 0;
            if (k == 0) goto done;
        }
    }
done:
    ExactCount total = 0;
    for (const auto& [bits, mult] : by_set) {
        const ColorSet used = ColorSet::from_bits(bits);
        ExactCount term = static_cast<unsigned long>(mult);
        for (const auto& tc : types) {
            if (tc.count == 0) continue;
            term *= ipow((tc.list - used).size(), tc.count);
        }
        total += term;
    }
    return total;
}

std::vector<TypeCount> y_type_counts(const ListAssignment& lists) {
    std::vector<TypeCount> out;
    for (ColorSet y : lists.y) {
        auto it = std::find_if(out.begin(), out.end(), [y](const TypeCount& tc) { return tc.list == y; });
        if (it == out.end())
            out.push_back({y, 1});
        else
            ++it->count;
    }
    return out;
}

SmallGraph SmallGraph::complete_bipartite(int l, int n) {
    SmallGraph g;
    g.vertices = l + n;
    for (int i = 0; i < l; ++i)
        for (int k = 0; k < n; ++k) g.edges.emplace_back(i, l + k);
    return g;
}

SmallGraph SmallGraph::complete(int n) {
    SmallGraph g;
    g.vertices = n;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.edges.emplace_back(i, j);
    return g;
}

SmallGraph SmallGraph::cycle(int n) {
    SmallGraph g = path(n);
    if (n >= 3) g.edges.emplace_back(n - 1, 0);
    return g;
}

SmallGraph SmallGraph::path(int n) {
    SmallGraph g;
    g.vertices = n;
    for (int i = 0; i + 1 < n; ++i) g.edges.emplace_back(i, i + 1);
    return g;
}

namespace {

struct Backtracker {
    std::vector<std::vector<int>> earlier; // neighbours already colored when v is visited
    std::vector<std::vector<int>> colors;
    std::vector<int> order;
    std::vector<int> assigned;
    std::uint64_t count = 0;

    void go(std::size_t pos) {
        if (pos == order.size()) {
            ++count;
            return;
        }
        const int v = order[pos];
        for (int c : colors[static_cast<std::size_t>(v)]) {
            bool ok = true;
            for (int u : earlier[static_cast<std::size_t>(v)])
                if (assigned[static_cast<std::size_t>(u)] == c) {
                    ok = false;
                    break;
                }
            if (!ok) continue;
            assigned[static_cast<std::size_t>(v)] = c;
            go(pos + 1);
            assigned[static_cast<std::size_t>(v)] = 0;
        }
    }
};

} // namespace

ExactCount brute_force_count(const SmallGraph& graph, const std::vector<ColorSet>& lists, std::uint64_t max_product,
                             VisitOrder order) {
    if (static_cast<int>(lists.size()) != graph.vertices)
        throw std::invalid_argument("brute_force_count: one list per vertex required");
    u128 product = 1;
    for (ColorSet s : lists) {
        product *= static_cast<u128>(std::max(s.size(), 1));
        if (product > max_product) throw BudgetExceeded("brute_force_count: coloring space exceeds budget");
    }
    Backtracker bt;
    bt.order.resize(static_cast<std::size_t>(graph.vertices));
    std::iota(bt.order.begin(), bt.order.end(), 0);
    if (order == VisitOrder::reverse) std::reverse(bt.order.begin(), bt.order.end());
    std::vector<int> position(bt.order.size());
    for (std::size_t i = 0; i < bt.order.size(); ++i) position[static_cast<std::size_t>(bt.order[i])] = static_cast<int>(i);
    bt.earlier.resize(bt.order.size());
    for (auto [u, v] : graph.edges) {
        if (position[static_cast<std::size_t>(u)] < position[static_cast<std::size_t>(v)])
            bt.earlier[static_cast<std::size_t>(v)].push_back(u);
        else
            bt.earlier[static_cast<std::size_t>(u)].push_back(v);
    }
    for (ColorSet s : lists) bt.colors.push_back(s.members());
    bt.assigned.assign(bt.order.size(), 0);
    bt.go(0);
    return static_cast<unsigned long>(bt.count);
}

ExactCount brute_force_count(const ListAssignment& lists, std::uint64_t max_product, VisitOrder order) {
    const auto [l, n] = lists.params();
    std::vector<ColorSet> all = lists.x;
    all.insert(all.end(), lists.y.begin(), lists.y.end());
    return brute_force_count(SmallGraph::complete_bipartite(l, n), all, max_product, order);
}

std::string_view relation_name(Relation r) {
    switch (r) {
    case Relation::equal: return "equal";
    case Relation::less: return "less";
    case Relation::greater_or_equal_proven: return "greater-or-equal-proven";
    case Relation::unknown: return "unknown";
    }
    return "unknown";
}

Relation parse_relation(std::string_view name) {
    for (Relation r : {Relation::equal, Relation::less, Relation::greater_or_equal_proven, Relation::unknown})
        if (relation_name(r) == name) return r;
    throw std::invalid_argument("unknown relation '" + std::string(name) + "'");
}

DMinimum minimize_for_d(int n, int m, int d, const SearchBudget& budget, const SearchOptions& options) {
    if (n < 1 || m < 2 || d < 0 || d > m) throw std::invalid_argument("minimize_for_d: need n >= 1, m >= 2, 0 <= d <= m");
    if (2 * m > ColorSet::kMaxLabel) throw std::invalid_argument("minimize_for_d: m too large");
    budget.validate();
    OrbitGroup group;
    if (options.symmetry_pruning) group = block_stabilizer(m, d);
    const auto out = search_dispatch(canonical_x1(m), canonical_x2(m, d), canonical_types(m, d),
                                     static_cast<std::uint64_t>(n), chromatic_poly_k2n(n, m), budget, options,
                                     options.symmetry_pruning ? &group : nullptr, 0);
    DMinimum dm;
    dm.d = d;
    dm.states = out.states;
    dm.complete = out.complete;
    dm.found = out.best.found;
    if (dm.found) {
        dm.value = out.best.value;
        dm.z = out.best.z;
    }
    return dm;
}

Verdict min_list_count(int n, int m, const SearchBudget& budget, const SearchOptions& options) {
    if (m == 2) return min_list_count_two(n, std::nullopt, budget.max_states);
    if (n < 1 || m < 3) throw std::invalid_argument("min_list_count: need n >= 1 and m >= 2");
    if (2 * m > ColorSet::kMaxLabel) throw std::invalid_argument("min_list_count: m too large");
    budget.validate();

    Verdict v;
    v.n = n;
    v.m = m;
    v.chromatic = chromatic_poly_k2n(n, m);
    v.source = "exhaustive search";
    v.complete = true;

    std::optional<DMinimum> best;
    for (int d = m; d >= 0; --d) {
        SearchBudget remaining = budget;
        remaining.max_states = budget.max_states > v.states ? budget.max_states - v.states : 0;
        if (remaining.max_states == 0) {
            v.complete = false;
            break;
        }
        DMinimum dm = minimize_for_d(n, m, d, remaining, options);
        v.states += dm.states;
        v.per_d.push_back(dm);
        if (dm.found && (!best || dm.value < best->value)) best = dm;
        if (!dm.complete) {
            v.complete = false;
            break;
        }
    }

    if (best) {
        v.min_value = best->value;
        v.witness = CanonicalAssignment(m, best->d, best->z);
    }
    if (best && best->value < v.chromatic)
        v.relation = Relation::less;
    else if (v.complete)
        v.relation = Relation::equal;
    else
        v.relation = Relation::unknown;
    return v;
}

Verdict min_list_count_two(int n, std::optional<int> universe, std::uint64_t max_states) {
    if (n < 2) throw std::invalid_argument("min_list_count_two: need n >= 2");
    if (n > 60) throw std::invalid_argument("min_list_count_two: n > 60 not supported");
    Verdict v;
    v.n = n;
    v.m = 2;
    v.chromatic = chromatic_poly_k2n(n, 2);
    v.source = "exhaustive search over 2-assignments";
    v.complete = true;

    SearchBudget budget;
    budget.max_states = max_states;
    SearchOptions options;
    std::optional<std::pair<DMinimum, std::vector<ColorSet>>> best;
    ColorSet best_x2;
    for (int d = 2; d >= 0; --d) {
        const ColorSet x1 = ColorSet::range(1, 2);
        const ColorSet x2 = d == 2 ? ColorSet{1, 2} : d == 1 ? ColorSet{1, 3} : ColorSet{3, 4};
        const int union_size = (x1 | x2).size();
        const int colors = universe.value_or(union_size + 2);
        if (colors < union_size) throw std::invalid_argument("min_list_count_two: universe smaller than x-union");
        const auto types = k_subsets(colors, 2);
        const auto out = search_dispatch(x1, x2, types, static_cast<std::uint64_t>(n), v.chromatic, budget, options,
                                         nullptr, v.states);
        DMinimum dm;
        dm.d = d;
        dm.states = out.states;
        dm.complete = out.complete;
        dm.found = out.best.found;
        if (dm.found) {
            dm.value = out.best.value;
            dm.z = out.best.z;
        }
        v.states += out.states;
        v.per_d.push_back(dm);
        if (dm.found && (!best || dm.value < best->first.value)) {
            best.emplace(dm, types);
            best_x2 = x2;
        }
        if (!out.complete) {
            v.complete = false;
            break;
        }
    }
    if (best) {
        v.min_value = best->first.value;
        ListAssignment lists;
        lists.x = {ColorSet::range(1, 2), best_x2};
        for (std::size_t t = 0; t < best->second.size(); ++t)
            for (std::uint64_t k = 0; k < best->first.z[t]; ++k) lists.y.push_back(best->second[t]);
        v.explicit_witness = std::move(lists);
    }
    if (best && best->first.value < v.chromatic)
        v.relation = Relation::less;
    else
        v.relation = v.complete ? Relation::equal : Relation::unknown;
    return v;
}

Verdict compare_with_chromatic(int n, int m, const SearchBudget& budget, const SearchOptions& options) {
    if (m == 2) return min_list_count_two(n, std::nullopt, budget.max_states);
    if (auto w = construction_witness(n, m)) {
        Verdict v;
        v.n = n;
        v.m = m;
        v.chromatic = chromatic_poly_k2n(n, m);
        v.relation = Relation::less;
        v.min_value = w->count;
        v.witness = w->assignment;
        v.complete = false;
        v.source = w->provenance.describe();
        return v;
    }
    return min_list_count(n, m, budget, options);
}

} // namespace lcf
