#include <algorithm>
#include <set>

#include "doctest.h"
#include "permutevo/crossover.hpp"
#include "permutevo/distances.hpp"
#include "permutevo/registry.hpp"
#include "support/crossover_fixtures.hpp"
#include "support/oracles.hpp"

using namespace permutevo;

namespace {

Permutation random_near(const Permutation& base, std::size_t swaps, RandomSource& rng) {
    Permutation p = base;
    for (std::size_t s = 0; s < swaps; ++s) {
        const std::size_t i = rng.next_index(p.size());
        const std::size_t j = rng.next_index(p.size());
        std::swap(p.raw()[i], p.raw()[j]);
    }
    return p;
}

}  // namespace

TEST_SUITE("crossover") {

TEST_CASE("prescribed-draw fixtures reproduce the expected children") {
    for (const auto& fixture : fixtures::crossover_fixtures()) {
        CAPTURE(fixture.operator_id);
        const auto outcome = fixtures::run_crossover_fixture(fixture);
        CHECK(outcome.c1.raw() == fixture.expected_c1);
        CHECK(outcome.c2.raw() == fixture.expected_c2);
        CHECK(outcome.draws_consumed);
    }
}

TEST_CASE("cx exchanges the cycle through the drawn index") {
    // any start index inside the same cycle gives the same children
    for (const std::uint64_t start : {0ull, 2ull, 4ull}) {
        Permutation p1({0, 1, 2, 3, 4, 5});
        Permutation p2({2, 1, 4, 5, 0, 3});
        ScriptedSource rng({start});
        cx(p1, p2, rng);
        CHECK(p1 == Permutation({2, 1, 4, 3, 0, 5}));
        CHECK(p2 == Permutation({0, 1, 2, 5, 4, 3}));
    }
    // a singleton cycle leaves the parents unchanged
    Permutation p1({0, 1, 2, 3, 4, 5});
    Permutation p2({2, 1, 4, 5, 0, 3});
    cx_with_start(p1, p2, 1);
    CHECK(p1 == Permutation({0, 1, 2, 3, 4, 5}));
}

TEST_CASE("cx on the two-element transposition") {
    Permutation p1({1, 0});
    Permutation p2({0, 1});
    for (std::size_t start = 0; start < 2; ++start) {
        Permutation a = p1;
        Permutation b = p2;
        cx_with_start(a, b, start);
        CHECK(a == Permutation({0, 1}));
        CHECK(b == Permutation({1, 0}));
    }
}

TEST_CASE("cx inherits every position from a parent") {
    SeededSource rng(41);
    for (int trial = 0; trial < 2000; ++trial) {
        const Permutation a = random_permutation(10, rng);
        const Permutation b = random_permutation(10, rng);
        Permutation c1 = a;
        Permutation c2 = b;
        cx(c1, c2, rng);
        REQUIRE(oracle::positions_inherited(c1, a, b));
        REQUIRE(oracle::positions_inherited(c2, a, b));
    }
}

TEST_CASE("identical parents are a fixed point") {
    SeededSource rng(42);
    for (const char* id : {"cx", "nwox", "uobx", "ox2", "ppx", "uppx", "pmx", "upmx", "pbx"}) {
        CAPTURE(id);
        const CrossoverFn fn = make_crossover(id);
        for (int trial = 0; trial < 200; ++trial) {
            const Permutation parent = random_permutation(9, rng);
            Permutation c1 = parent;
            Permutation c2 = parent;
            fn(c1, c2, rng);
            REQUIRE(c1 == parent);
            REQUIRE(c2 == parent);
        }
    }
    // er and eer keep the parent's cyclic edge set rather than the array
    for (const char* id : {"er", "eer"}) {
        CAPTURE(id);
        const CrossoverFn fn = make_crossover(id);
        for (int trial = 0; trial < 200; ++trial) {
            const Permutation parent = random_permutation(9, rng);
            Permutation c1 = parent;
            Permutation c2 = parent;
            fn(c1, c2, rng);
            REQUIRE(cyclic_edge_distance(c1, parent) == 0);
            REQUIRE(cyclic_edge_distance(c2, parent) == 0);
        }
    }
}

TEST_CASE("er and eer children stay inside an all-shared edge set") {
    // a rotated parent shares every cyclic edge, so children can only
    // reproduce that edge set
    SeededSource rng(46);
    for (const char* id : {"er", "eer"}) {
        CAPTURE(id);
        const CrossoverFn fn = make_crossover(id);
        for (int trial = 0; trial < 200; ++trial) {
            const Permutation base = random_permutation(9, rng);
            std::vector<int> shifted = base.raw();
            std::rotate(shifted.begin(), shifted.begin() + 1 + rng.next_index(8), shifted.end());
            Permutation c1 = base;
            Permutation c2 = Permutation(shifted);
            fn(c1, c2, rng);
            REQUIRE(cyclic_edge_distance(c1, base) == 0);
            REQUIRE(cyclic_edge_distance(c2, base) == 0);
        }
    }
}

TEST_CASE("all operators produce valid children over many random pairs") {
    for (const std::string& id : crossover_ids()) {
        if (id == "none") {
            continue;
        }
        CAPTURE(id);
        const CrossoverFn fn = make_crossover(id);
        SeededSource rng(43);
        Permutation p1 = random_permutation(10, rng);
        Permutation p2 = random_permutation(10, rng);
        for (int trial = 0; trial < 100000; ++trial) {
            fn(p1, p2, rng);
            REQUIRE(is_valid_permutation(p1.elements()));
            REQUIRE(is_valid_permutation(p2.elements()));
        }
    }
}

TEST_CASE("ppx and uppx inherit every pairwise precedence from a parent") {
    // each append takes the earliest unused element of one parent, so any
    // later element of the child sits after it in that parent
    for (const char* id : {"ppx", "uppx"}) {
        CAPTURE(id);
        const CrossoverFn fn = make_crossover(id);
        SeededSource rng(44);
        for (int trial = 0; trial < 1000; ++trial) {
            const Permutation a = random_permutation(8, rng);
            const Permutation b = random_permutation(8, rng);
            Permutation c1 = a;
            Permutation c2 = b;
            fn(c1, c2, rng);
            REQUIRE(oracle::precedences_inherited(c1, a, b));
            REQUIRE(oracle::precedences_inherited(c2, a, b));
        }
    }
}

TEST_CASE("nwox, uobx and ox2 preserve relative order within each source group") {
    SeededSource rng(44);
    for (int trial = 0; trial < 1000; ++trial) {
        const Permutation a = random_permutation(8, rng);
        const Permutation b = random_permutation(8, rng);

        const CrossRegion region = draw_cross_region(8, rng);
        std::set<int> region_values_a;
        std::set<int> region_values_b;
        std::set<int> fill_values_a;
        std::set<int> fill_values_b;
        for (std::size_t i = 0; i < 8; ++i) {
            (i >= region.lo && i <= region.hi ? region_values_a : fill_values_a).insert(a[i]);
            (i >= region.lo && i <= region.hi ? region_values_b : fill_values_b).insert(b[i]);
        }
        Permutation n1 = a;
        Permutation n2 = b;
        nwox_with_region(n1, n2, region);
        REQUIRE(oracle::group_order_preserved(n1, region_values_a, a));
        REQUIRE(oracle::group_order_preserved(n1, fill_values_a, b));
        REQUIRE(oracle::group_order_preserved(n2, region_values_b, b));
        REQUIRE(oracle::group_order_preserved(n2, fill_values_b, a));

        std::vector<bool> mask(8);
        for (std::size_t i = 0; i < 8; ++i) {
            mask[i] = rng.next_chance(0.5);
        }
        std::set<int> fixed_a;
        std::set<int> open_a;
        for (std::size_t i = 0; i < 8; ++i) {
            (mask[i] ? fixed_a : open_a).insert(a[i]);
        }
        Permutation u1 = a;
        Permutation u2 = b;
        uobx_with_mask(u1, u2, mask);
        REQUIRE(oracle::group_order_preserved(u1, fixed_a, a));
        REQUIRE(oracle::group_order_preserved(u1, open_a, b));

        std::set<int> moved;
        std::set<int> untouched;
        for (std::size_t i = 0; i < 8; ++i) {
            if (mask[i]) {
                moved.insert(b[i]);
            }
        }
        for (int e = 0; e < 8; ++e) {
            if (!moved.contains(e)) {
                untouched.insert(e);
            }
        }
        Permutation o1 = a;
        Permutation o2 = b;
        ox2_with_mask(o1, o2, mask);
        REQUIRE(oracle::group_order_preserved(o1, moved, b));
        REQUIRE(oracle::group_order_preserved(o1, untouched, a));
    }
}

TEST_CASE("scattered-fill operators can invert precedences across groups") {
    // nwox: fill element 1 lands before region element 2, though 2
    // precedes 1 in both parents
    const Permutation a({3, 2, 7, 1, 5, 6, 4, 0});
    const Permutation b({3, 5, 4, 6, 2, 0, 7, 1});
    Permutation n1 = a;
    Permutation n2 = b;
    nwox_with_region(n1, n2, CrossRegion{2, 6});
    CHECK(n2 == Permutation({3, 1, 4, 6, 2, 0, 7, 5}));
    CHECK_FALSE(oracle::precedences_inherited(n2, a, b));

    // uobx: fill element 3 lands before the fixed point 0, though 0
    // precedes 3 in both parents
    Permutation u1({2, 0, 3, 1});
    Permutation u2({0, 3, 2, 1});
    uobx_with_mask(u1, u2, {false, true, false, false});
    CHECK(u1 == Permutation({3, 0, 2, 1}));
    CHECK_FALSE(oracle::precedences_inherited(u1, Permutation({2, 0, 3, 1}),
                                              Permutation({0, 3, 2, 1})));
}

TEST_CASE("cx preserves precedences within each source group but not across") {
    // cross-source pairs can order like neither parent: exchanging the
    // {0, 2, 4} cycle below puts 3 before 0 although 0 precedes 3 in both
    // parents
    const Permutation a({0, 1, 2, 3, 4, 5});
    const Permutation b({2, 1, 4, 5, 0, 3});
    Permutation c1 = a;
    Permutation c2 = b;
    cx_with_start(c1, c2, 0);
    CHECK(c1 == Permutation({2, 1, 4, 3, 0, 5}));
    CHECK_FALSE(oracle::precedences_inherited(c1, a, b));

    // pairs drawn from the same parent keep that parent's order, which
    // position inheritance already implies
    SeededSource rng(44);
    for (int trial = 0; trial < 1000; ++trial) {
        const Permutation p1 = random_permutation(8, rng);
        const Permutation p2 = random_permutation(8, rng);
        Permutation k1 = p1;
        Permutation k2 = p2;
        cx(k1, k2, rng);
        REQUIRE(oracle::positions_inherited(k1, p1, p2));
        REQUIRE(oracle::positions_inherited(k2, p1, p2));
    }
}

TEST_CASE("er and eer follow only parental edges absent dead ends") {
    // every step absent a dead end walks a union edge; the closing edge
    // from last back to first is outside the construction's control and is
    // not guaranteed (see the pinned counterexample below)
    SeededSource rng(45);
    int clean_runs = 0;
    for (int trial = 0; trial < 2000; ++trial) {
        const std::size_t n = 5 + rng.next_index(6);
        const Permutation a = random_permutation(n, rng);
        const Permutation b = random_permutation(n, rng);
        auto union_edges = oracle::undirected_edge_set(a);
        union_edges.merge(oracle::undirected_edge_set(b));
        for (const bool prefer_shared : {false, true}) {
            const auto result = detail::build_edge_child(a, b, a[0], prefer_shared, rng);
            if (result.fallbacks > 0) {
                continue;
            }
            ++clean_runs;
            const auto& child = result.child;
            for (std::size_t i = 0; i + 1 < child.size(); ++i) {
                const auto [x, y] = std::minmax(child[i], child[i + 1]);
                REQUIRE(union_edges.contains({x, y}));
            }
        }
    }
    CHECK(clean_runs > 500);  // the check must not be vacuous

    // dead-end-free construction whose closing edge (8, 6) is parental in
    // neither parent
    const Permutation a({6, 4, 5, 0, 2, 7, 8, 1, 3});
    const Permutation b({0, 3, 8, 4, 2, 6, 5, 1, 7});
    SeededSource replay(1);
    const auto result = detail::build_edge_child(a, b, a[0], false, replay);
    CHECK(result.fallbacks == 0);
    CHECK(result.child == std::vector<int>{6, 2, 4, 5, 0, 3, 1, 7, 8});
    auto union_edges = oracle::undirected_edge_set(a);
    union_edges.merge(oracle::undirected_edge_set(b));
    CHECK_FALSE(union_edges.contains({std::min(result.child.back(), result.child.front()),
                                      std::max(result.child.back(), result.child.front())}));
}

TEST_CASE("eer keeps at least as many shared edges as er") {
    SeededSource setup(46);
    double er_total = 0.0;
    double eer_total = 0.0;
    const int trials = 1000;
    for (int trial = 0; trial < trials; ++trial) {
        const Permutation a = random_permutation(20, setup);
        const Permutation b = random_near(a, 3, setup);
        auto shared = oracle::undirected_edge_set(a);
        std::set<std::pair<int, int>> both;
        for (const auto& edge : oracle::undirected_edge_set(b)) {
            if (shared.contains(edge)) {
                both.insert(edge);
            }
        }
        auto shared_fraction = [&both](const Permutation& child) {
            const auto edges = oracle::undirected_edge_set(child);
            std::size_t hits = 0;
            for (const auto& edge : edges) {
                hits += both.contains(edge);
            }
            return static_cast<double>(hits) / static_cast<double>(edges.size());
        };
        SeededSource rng_er(1000 + trial);
        SeededSource rng_eer(1000 + trial);
        Permutation er1 = a;
        Permutation er2 = b;
        er(er1, er2, rng_er);
        Permutation eer1 = a;
        Permutation eer2 = b;
        eer(eer1, eer2, rng_eer);
        er_total += shared_fraction(er1);
        eer_total += shared_fraction(eer1);
    }
    CHECK(eer_total / trials >= er_total / trials);
}

TEST_CASE("ox with the full region returns the parents") {
    Permutation p1({4, 2, 0, 1, 3});
    Permutation p2({3, 0, 1, 2, 4});
    ScriptedSource rng({0, 4});
    ox(p1, p2, rng);
    CHECK(p1 == Permutation({4, 2, 0, 1, 3}));
    CHECK(p2 == Permutation({3, 0, 1, 2, 4}));
}

TEST_CASE("ox reorders even identical parents outside the region") {
    // the fill scans the other parent from its start, so a partial region
    // shifts the remaining elements cyclically even when the parents match
    Permutation p1({0, 1, 2, 3, 4, 5, 6, 7});
    Permutation p2({0, 1, 2, 3, 4, 5, 6, 7});
    ScriptedSource rng({2, 4});
    ox(p1, p2, rng);
    CHECK(p1 == Permutation({6, 7, 2, 3, 4, 0, 1, 5}));
    CHECK(p2 == Permutation({6, 7, 2, 3, 4, 0, 1, 5}));
}

TEST_CASE("uobx with u = 1 returns the parents") {
    SeededSource rng(47);
    const Permutation a = random_permutation(12, rng);
    const Permutation b = random_permutation(12, rng);
    Permutation c1 = a;
    Permutation c2 = b;
    uobx(c1, c2, rng, 1.0);
    CHECK(c1 == a);
    CHECK(c2 == b);
}

TEST_CASE("ox2 with no chosen indexes returns the parents") {
    SeededSource rng(48);
    const Permutation a = random_permutation(12, rng);
    const Permutation b = random_permutation(12, rng);
    Permutation c1 = a;
    Permutation c2 = b;
    ox2(c1, c2, rng, 0.0);
    CHECK(c1 == a);
    CHECK(c2 == b);
}

TEST_CASE("each ox2 child is a uobx child with the complementary fixed points") {
    SeededSource rng(49);
    for (int trial = 0; trial < 1000; ++trial) {
        const std::size_t n = 8;
        const Permutation a = random_permutation(n, rng);
        const Permutation b = random_permutation(n, rng);
        std::vector<bool> chosen(n);
        for (std::size_t i = 0; i < n; ++i) {
            chosen[i] = rng.next_chance(0.5);
        }
        // fixed points of uobx: the positions of a holding elements ox2
        // does not move
        std::vector<bool> moved(n, false);
        for (std::size_t i = 0; i < n; ++i) {
            if (chosen[i]) {
                moved[b[i]] = true;
            }
        }
        std::vector<bool> fixed(n);
        for (std::size_t i = 0; i < n; ++i) {
            fixed[i] = !moved[a[i]];
        }
        Permutation ox2_c1 = a;
        Permutation ox2_c2 = b;
        ox2_with_mask(ox2_c1, ox2_c2, chosen);
        Permutation uobx_c1 = a;
        Permutation uobx_c2 = b;
        uobx_with_mask(uobx_c1, uobx_c2, fixed);
        REQUIRE(ox2_c1 == uobx_c1);
    }
}

TEST_CASE("uppx boolean extremes copy whole parents") {
    SeededSource rng(50);
    const Permutation a = random_permutation(10, rng);
    const Permutation b = random_permutation(10, rng);

    Permutation c1 = a;
    Permutation c2 = b;
    uppx(c1, c2, rng, 1.0);  // always take from own parent
    CHECK(c1 == a);
    CHECK(c2 == b);

    c1 = a;
    c2 = b;
    uppx(c1, c2, rng, 0.0);  // always take from the other parent
    CHECK(c1 == b);
    CHECK(c2 == a);
}

TEST_CASE("pmx writes the opposite parent's cross region into each child") {
    Permutation p1({0, 1, 2, 3, 4, 5, 6, 7});
    Permutation p2({1, 2, 0, 5, 6, 7, 4, 3});
    pmx_with_region(p1, p2, CrossRegion{2, 4});
    CHECK(std::vector<int>(p1.raw().begin() + 2, p1.raw().begin() + 5) ==
          std::vector<int>{0, 5, 6});
    CHECK(std::vector<int>(p2.raw().begin() + 2, p2.raw().begin() + 5) ==
          std::vector<int>{2, 3, 4});

    SeededSource rng(51);
    for (int trial = 0; trial < 500; ++trial) {
        const Permutation a = random_permutation(9, rng);
        const Permutation b = random_permutation(9, rng);
        const CrossRegion region = draw_cross_region(9, rng);
        Permutation c1 = a;
        Permutation c2 = b;
        pmx_with_region(c1, c2, region);
        for (std::size_t i = region.lo; i <= region.hi; ++i) {
            REQUIRE(c1[i] == b[i]);
            REQUIRE(c2[i] == a[i]);
        }
    }
}

TEST_CASE("upmx over every index equals pmx over the full region") {
    SeededSource rng(52);
    for (int trial = 0; trial < 500; ++trial) {
        const Permutation a = random_permutation(10, rng);
        const Permutation b = random_permutation(10, rng);
        Permutation u1 = a;
        Permutation u2 = b;
        upmx_with_mask(u1, u2, std::vector<bool>(10, true));
        Permutation m1 = a;
        Permutation m2 = b;
        pmx_with_region(m1, m2, CrossRegion{0, 9});
        REQUIRE(u1 == m1);
        REQUIRE(u2 == m2);
    }
    // no chosen indexes: children equal parents
    Permutation c1({2, 0, 1});
    Permutation c2({1, 2, 0});
    upmx_with_mask(c1, c2, std::vector<bool>(3, false));
    CHECK(c1 == Permutation({2, 0, 1}));
    CHECK(c2 == Permutation({1, 2, 0}));
}

TEST_CASE("pbx children inherit similar position counts from both parents") {
    SeededSource rng(53);
    double from_p1 = 0.0;
    double from_p2 = 0.0;
    for (int trial = 0; trial < 10000; ++trial) {
        const Permutation a = random_permutation(20, rng);
        const Permutation b = random_permutation(20, rng);
        Permutation c1 = a;
        Permutation c2 = b;
        pbx(c1, c2, rng);
        for (std::size_t i = 0; i < 20; ++i) {
            from_p1 += c1[i] == a[i];
            from_p2 += c1[i] == b[i];
        }
    }
    CHECK(from_p1 / from_p2 == doctest::Approx(1.0).epsilon(0.1));
}

TEST_CASE("operators reject mismatched parent lengths") {
    SeededSource rng(54);
    for (const std::string& id : crossover_ids()) {
        if (id == "none") {
            continue;
        }
        CAPTURE(id);
        Permutation a({0, 1, 2});
        Permutation b({0, 1, 2, 3});
        CHECK_THROWS_AS(make_crossover(id)(a, b, rng), std::invalid_argument);
    }
}

TEST_CASE("crossover registry resolves ids, parameters and overrides") {
    CHECK_FALSE(make_crossover("none"));
    CHECK(make_crossover("cx"));
    CHECK_THROWS_AS(make_crossover("exotic"), std::invalid_argument);
    CHECK_THROWS_AS(make_crossover("cx:0.5"), std::invalid_argument);
    CHECK_THROWS_AS(make_crossover("uobx:1.5"), std::invalid_argument);
    CHECK_THROWS_AS(make_crossover("uobx:zz"), std::invalid_argument);

    // an explicit suffix beats the override; the override beats the default
    const Permutation a = Permutation::identity(16);
    const Permutation b = Permutation::identity(16);
    auto first_mask_size = [&](const CrossoverFn& fn) {
        // count unit draws consumed by running against a finite script
        for (std::size_t units = 0; units <= 16; ++units) {
            Permutation c1 = a;
            Permutation c2 = b;
            ScriptedSource rng({}, std::vector<double>(units, 0.9));
            try {
                fn(c1, c2, rng);
                return units;
            } catch (const std::logic_error&) {
            }
        }
        return std::size_t{17};
    };
    CHECK(first_mask_size(make_crossover("uobx")) == 16);  // sanity: mask draws happen

    Permutation c1({0, 1}), c2({1, 0});
    ScriptedSource all_low({}, {0.4, 0.4});
    make_crossover("uppx:0.5")(c1, c2, all_low);  // 0.4 < 0.5: both slots from own parent
    CHECK(c1 == Permutation({0, 1}));
    CHECK(c2 == Permutation({1, 0}));

    c1 = Permutation({0, 1});
    c2 = Permutation({1, 0});
    ScriptedSource all_low2({}, {0.4, 0.4});
    make_crossover("uppx", 0.3)(c1, c2, all_low2);  // 0.4 >= 0.3: both from the other
    CHECK(c1 == Permutation({1, 0}));
    CHECK(c2 == Permutation({0, 1}));
}

}  // TEST_SUITE
