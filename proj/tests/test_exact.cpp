#include <doctest.h>

#include "lcf/bounds.hpp"
#include "lcf/constructions.hpp"
#include "lcf/exact.hpp"
#include "support.hpp"

using namespace lcf;
namespace ts = testing_support;

TEST_CASE("pair product examples") {
    CHECK(evaluate_pair_product(CanonicalAssignment::constant(3, 3, 0, 4)) == chromatic_poly_k2n(4, 3));
    // m = 3, d = 2, every y-list {1,2,4}
    const auto types = canonical_types(3, 2);
    const auto it = std::find(types.begin(), types.end(), ColorSet{1, 2, 4});
    const auto idx = static_cast<std::size_t>(it - types.begin());
    const auto a = CanonicalAssignment::constant(3, 2, idx, 3);
    CHECK(evaluate_pair_product(a) == 44);
    CHECK(brute_force_count(a.to_lists()) == 44);
    CHECK(evaluate_pair_product(canonicalize(build_extension(3, 3, 0))) == 11264);
}

TEST_CASE("brute force examples") {
    ListAssignment l;
    l.x = {ColorSet{1, 2}, ColorSet{1, 2}};
    l.y = {ColorSet{1, 2}, ColorSet{1, 2}};
    CHECK(brute_force_count(l) == 2);

    l.x = {ColorSet{1, 2, 3}, ColorSet{1, 2, 3}};
    l.y.assign(3, ColorSet{1, 2, 3});
    CHECK(brute_force_count(l) == 30);

    l.x = {ColorSet{1, 2}, ColorSet{3, 4}};
    l.y = {ColorSet{1, 3}, ColorSet{2, 3}, ColorSet{1, 4}};
    CHECK(brute_force_count(l) == 2);
    CHECK(brute_force_count(l, 100'000'000, VisitOrder::reverse) == 2);

    CHECK(brute_force_count(SmallGraph::cycle(4), std::vector<ColorSet>(4, ColorSet{1, 2, 3})) == 18);
    CHECK_THROWS_AS(brute_force_count(SmallGraph::complete(3), {ColorSet{1}}), std::invalid_argument);
    CHECK_THROWS_AS(brute_force_count(SmallGraph::path(12), std::vector<ColorSet>(12, ColorSet::range(1, 9)), 1000),
                    BudgetExceeded);
}

TEST_CASE("pair product agrees with brute force on random assignments") {
    for (int round = 0; round < 150; ++round) {
        const int m = ts::uniform(2, 4);
        const int d = ts::uniform(0, m);
        const auto a = ts::random_canonical(m, d, ts::uniform(1, 6));
        const auto lists = a.to_lists();
        const auto bf = brute_force_count(lists);
        CHECK(evaluate_pair_product(a) == bf);
        CHECK(brute_force_count(lists, 100'000'000, VisitOrder::reverse) == bf);
        CHECK(evaluate_general_l(lists.x, y_type_counts(lists)) == bf);
    }
}

TEST_CASE("general-l evaluation") {
    // l = 1: prod over y of |L(y) - {c}| summed over c
    std::vector<ColorSet> x{ColorSet{1, 2}};
    std::vector<TypeCount> y{{ColorSet{1, 3}, 2}, {ColorSet{2, 3}, 1}};
    CHECK(evaluate_general_l(x, y) == 1 * 1 * 2 + 2 * 2 * 1);
    // l = 3 against brute force on K_{3,2}
    ListAssignment l;
    l.x = {ColorSet{1, 2}, ColorSet{2, 3}, ColorSet{1, 3}};
    l.y = {ColorSet{1, 2}, ColorSet{3, 4}};
    CHECK(evaluate_general_l(l.x, y_type_counts(l)) == brute_force_count(l));
    CHECK_THROWS_AS(evaluate_general_l(std::vector<ColorSet>(6, ColorSet::range(1, 40)), y, 1000), BudgetExceeded);
}

TEST_CASE("min_list_count small cases") {
    auto v = min_list_count(3, 3);
    CHECK(v.relation == Relation::equal);
    CHECK(v.complete);
    CHECK(*v.min_value == 30);
    CHECK(v.chromatic == 30);

    v = min_list_count(10, 3);
    CHECK(v.relation == Relation::equal);
    CHECK(*v.min_value == 3078);
    CHECK(v.states <= SearchBudget{}.max_states);

    SearchBudget big;
    big.max_states = 10'000'000;
    v = min_list_count(12, 3, big);
    CHECK(v.relation == Relation::less);
    CHECK(v.complete);
    CHECK(*v.min_value == 11264);
    REQUIRE(v.witness);
    CHECK(evaluate_pair_product(*v.witness) == 11264);
    CHECK(brute_force_count(v.witness->to_lists(), 2'000'000'000) == 11264);

    CHECK_THROWS_AS(min_list_count(0, 3), std::invalid_argument);
    SearchBudget bad;
    bad.max_states = 0;
    CHECK_THROWS_AS(min_list_count(3, 3, bad), std::invalid_argument);
}

TEST_CASE("minimum is a true minimum on small exhaustive cases") {
    for (int m : {3, 4})
        for (int n = 1; n <= (m == 3 ? 5 : 3); ++n) {
            const auto v = min_list_count(n, m);
            REQUIRE(v.complete);
            ExactCount least = -1;
            for (int d = 0; d <= m; ++d)
                ts::for_each_multiset(canonical_types(m, d).size(), static_cast<std::uint64_t>(n), [&](const auto& z) {
                    const auto val = evaluate_pair_product(CanonicalAssignment(m, d, z));
                    if (least < 0 || val < least) least = val;
                });
            CHECK(*v.min_value == least);
            CHECK(*v.min_value <= v.chromatic);
            CHECK(evaluate_pair_product(*v.witness) == *v.min_value);
        }
}

TEST_CASE("pruning options do not change the answer") {
    for (int n = 1; n <= 6; ++n) {
        const auto base = min_list_count(n, 3);
        SearchOptions sym;
        sym.symmetry_pruning = true;
        SearchOptions plain;
        plain.bound_pruning = false;
        for (const auto& opt : {sym, plain}) {
            const auto v = min_list_count(n, 3, {}, opt);
            CHECK(v.relation == base.relation);
            CHECK(*v.min_value == *base.min_value);
        }
        CHECK(min_list_count(n, 3, {}, sym).witness == base.witness);
    }
}

TEST_CASE("parallel width does not change the result") {
    for (int n : {7, 9}) {
        SearchBudget one, three;
        three.parallel_width = 3;
        const auto a = min_list_count(n, 3, one);
        const auto b = min_list_count(n, 3, three);
        CHECK(a.relation == b.relation);
        CHECK(*a.min_value == *b.min_value);
        CHECK(a.witness == b.witness);
        CHECK(a.states == b.states);
    }
    SearchBudget big, big3;
    big.max_states = big3.max_states = 10'000'000;
    big3.parallel_width = 3;
    const auto a = min_list_count(12, 3, big);
    const auto b = min_list_count(12, 3, big3);
    CHECK(a.witness == b.witness);
    CHECK(*a.min_value == *b.min_value);
}

TEST_CASE("block relabelings preserve the count") {
    // permuting colors inside D, B or C, or swapping the two x-lists, is a symmetry
    for (int round = 0; round < 100; ++round) {
        const int m = ts::uniform(2, 4);
        const int d = ts::uniform(0, m);
        const auto a = ts::random_canonical(m, d, ts::uniform(1, 5));
        auto lists = a.to_lists();
        std::vector<int> perm(2 * m - d + 1);
        std::iota(perm.begin(), perm.end(), 0);
        auto& gen = ts::rng();
        std::shuffle(perm.begin() + 1, perm.begin() + 1 + d, gen);
        std::shuffle(perm.begin() + 1 + d, perm.begin() + 1 + m, gen);
        std::shuffle(perm.begin() + 1 + m, perm.end(), gen);
        auto relabel = [&](ColorSet s) {
            ColorSet out;
            for (int c : s.members()) out.insert(perm[static_cast<std::size_t>(c)]);
            return out;
        };
        ListAssignment moved;
        moved.x = {relabel(lists.x[0]), relabel(lists.x[1])};
        for (auto y : lists.y) moved.y.push_back(relabel(y));
        CHECK(evaluate_pair_product(canonicalize(moved)) == evaluate_pair_product(a));
        std::swap(moved.x[0], moved.x[1]);
        CHECK(brute_force_count(moved) == evaluate_pair_product(a));
    }
}

TEST_CASE("m = 2 search") {
    auto v = min_list_count_two(2);
    CHECK(v.relation == Relation::equal);
    CHECK(*v.min_value == 2);
    v = min_list_count_two(3);
    CHECK(v.relation == Relation::equal);
    CHECK(*v.min_value == 2);
    // six colors overall is the uncapped case for n = 3: every list touches at most 2 fresh colors
    CHECK(*min_list_count_two(3, 6).min_value == 2);
    for (int n : {4, 5}) {
        v = min_list_count_two(n);
        CHECK(v.relation == Relation::less);
        CHECK(*v.min_value == 0);
        REQUIRE(v.explicit_witness);
        CHECK(brute_force_count(*v.explicit_witness) == 0);
    }
    CHECK(min_list_count(4, 2).relation == Relation::less);
}

TEST_CASE("compare_with_chromatic") {
    auto v = compare_with_chromatic(5, 4);
    CHECK(v.relation == Relation::equal);
    v = compare_with_chromatic(44, 5);
    CHECK(v.relation == Relation::less);
    CHECK(*v.min_value < v.chromatic);
    CHECK(v.source.find("t=11") != std::string::npos);
    v = compare_with_chromatic(11, 3);
    CHECK(v.relation == Relation::unknown);
    CHECK(!v.complete);
    CHECK(v.states <= SearchBudget{}.max_states);
}

TEST_CASE("budget exhaustion is reported, not guessed") {
    SearchBudget tiny;
    tiny.max_states = 50;
    const auto v = min_list_count(8, 3, tiny);
    CHECK(v.relation == Relation::unknown);
    CHECK(!v.complete);
    CHECK(v.states <= 50 + 4096);
}

TEST_CASE("relation names round-trip") {
    for (auto r : {Relation::equal, Relation::less, Relation::greater_or_equal_proven, Relation::unknown})
        CHECK(parse_relation(relation_name(r)) == r);
    CHECK_THROWS_AS(parse_relation("bigger"), std::invalid_argument);
}
