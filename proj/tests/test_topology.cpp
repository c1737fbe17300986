#include "cotop/oracle.hpp"
#include "cotop/topology.hpp"
#include "support/brute.hpp"
#include "support/random_sets.hpp"

#include <doctest.h>

using namespace cotop;
using namespace cotop::topo;

namespace {

EPSet periodic(u64 m, std::initializer_list<u64> r) { return EPSet::periodic(m, std::vector<u64>(r)); }
EPSet finite(std::initializer_list<u64> e) { return EPSet::explicit_set(std::vector<u64>(e)); }

const EPSet kN = EPSet::naturals();

}  // namespace

TEST_CASE("sigma examples") {
    CHECK(sigma(1) == kN);
    CHECK(sigma(2) == periodic(2, {1}));
    // gcd scan over residues 0..5 keeps 1 and 5.
    CHECK(test::coprime_scan(6, 5) == std::vector<u64>{1, 5});
    CHECK(sigma(6) == periodic(6, {1, 5}));
    CHECK(sigma(4) == sigma(2));
}

TEST_CASE("sigma decomposition examples") {
    CHECK(sigma_decomposition(4).progressions == std::vector<Progression>{{1, 4}, {3, 4}});
    CHECK(sigma_decomposition(6).progressions == std::vector<Progression>{{1, 6}, {5, 6}});
    CHECK(sigma_decomposition(2).progressions == std::vector<Progression>{{1, 2}});
    const auto whole = sigma_decomposition(1);
    CHECK(whole.whole_space);
    CHECK(whole.progressions.empty());
}

TEST_CASE("singleton closure examples") {
    CHECK(closure_singleton(1) == kN);
    CHECK(closure_singleton(5) == EPSet::multiples(5));
    CHECK(closure_singleton(12) == EPSet::multiples(6));
    CHECK(closure_singleton(12) == intersect(EPSet::multiples(2), EPSet::multiples(3)));
}

TEST_CASE("closure examples") {
    CHECK(closure(finite({12})) == EPSet::multiples(6));
    CHECK(closure(EPSet::multiples(6)) == EPSet::multiples(6));
    CHECK(closure(sigma(2)) == kN);
    CHECK(closure(EPSet()).empty());
    CHECK(closure(finite({6, 10, 15})) == unite(unite(EPSet::multiples(6), EPSet::multiples(10)), EPSet::multiples(15)));
    // Removed points never matter.
    CHECK(closure(difference(EPSet::multiples(4), finite({4, 8}))) == EPSet::multiples(2));
}

TEST_CASE("oracle confirms the M_6 fixpoint") {
    const auto window = oracle::oracle_closure_window(EPSet::multiples(6), 100, 31, 3);
    std::vector<u64> expected;
    for (u64 x = 6; x <= 100; x += 6) expected.push_back(x);
    CHECK(window == expected);
}

TEST_CASE("interior and boundary examples") {
    CHECK(interior(sigma(6)) == sigma(6));
    CHECK(interior(periodic(4, {1})).empty());
    CHECK(boundary(sigma(2)) == EPSet::multiples(2));
}

TEST_CASE("predicate examples") {
    CHECK(is_dense(finite({1})));
    for (u64 p : {2, 3, 5, 7}) {
        CHECK_FALSE(is_dense(EPSet::multiples(p)));
        CHECK(is_closed(EPSet::multiples(p)));
    }
    CHECK_FALSE(is_open(periodic(4, {1})));
}

TEST_CASE("classify examples") {
    const auto n = classify(kN);
    CHECK(n.is_open);
    CHECK(n.is_closed);
    CHECK(n.is_dense);
    CHECK_FALSE(n.is_nowhere_dense);

    const auto m5 = classify(EPSet::multiples(5));
    CHECK(m5.is_closed);
    CHECK_FALSE(m5.is_open);
    CHECK_FALSE(m5.is_dense);
    CHECK(m5.is_nowhere_dense);
    CHECK(m5.interior.empty());

    const auto s6 = classify(sigma(6));
    CHECK(s6.is_open);
    CHECK_FALSE(s6.is_closed);
    CHECK(s6.is_dense);
    CHECK(s6.boundary == complement(sigma(6)));
}

TEST_CASE("base law for n, m <= 60") {
    for (u64 n = 1; n <= 60; ++n) {
        for (u64 m = 1; m <= 60; ++m) REQUIRE(sigma(n * m) == intersect(sigma(n), sigma(m)));
    }
}

TEST_CASE("1 in every sigma(n), n in sigma(n) only for n = 1") {
    for (u64 n = 1; n <= 10'000; ++n) {
        const EPSet s = sigma(n);
        REQUIRE(s.contains(1));
        REQUIRE(s.contains(n) == (n == 1));
    }
}

TEST_CASE("singleton closure matches the intersection of prime multiples") {
    for (u64 n = 2; n <= 500; ++n) {
        EPSet expected = kN;
        for (u64 p : test::trial_factor(n)) expected = intersect(expected, EPSet::multiples(p));
        REQUIRE(closure(finite({n})) == expected);
        REQUIRE(closure_singleton(n) == expected);
    }
}

TEST_CASE("Kuratowski axioms on random sets") {
    std::mt19937_64 rng(314);
    CHECK(closure(EPSet()).empty());
    for (int i = 0; i < 150; ++i) {
        const EPSet s = test::random_set(rng);
        const EPSet t = test::random_set(rng);
        const EPSet cs = closure(s);
        REQUIRE(is_subset(s, cs));
        REQUIRE(closure(cs) == cs);
        REQUIRE(closure(unite(s, t)) == unite(cs, closure(t)));
        REQUIRE(is_subset(closure(intersect(s, t)), cs));
        REQUIRE(is_subset(interior(s), s));
    }
}

TEST_CASE("duality between interior and closure") {
    std::mt19937_64 rng(2718);
    for (int i = 0; i < 150; ++i) {
        const EPSet s = test::random_set(rng);
        REQUIRE(is_open(s) == is_closed(complement(s)));
        const EPSet via_closure = complement(closure(complement(s)));
        REQUIRE(test::window_equal(interior(s), via_closure));
        REQUIRE(boundary(s) == difference(closure(s), interior(s)));
    }
}

TEST_CASE("dense or nowhere dense, never both") {
    std::mt19937_64 rng(4242);
    for (int i = 0; i < 200; ++i) {
        const EPSet s = test::random_nonempty_set(rng);
        REQUIRE(is_dense(s) != is_nowhere_dense(s));
        REQUIRE(is_dense(s) == (closure(s) == kN));
    }
}

TEST_CASE("nonempty unions of basic opens are dense") {
    std::mt19937_64 rng(8);
    std::uniform_int_distribution<u64> pick(1, 100);
    for (int i = 0; i < 100; ++i) {
        EPSet u;
        for (int k = 0; k < 1 + i % 4; ++k) u = unite(u, sigma(pick(rng)));
        REQUIRE(is_open(u));
        REQUIRE(is_dense(u));
    }
}

TEST_CASE("closures of nonempty sets always meet") {
    std::mt19937_64 rng(1618);
    for (int i = 0; i < 150; ++i) {
        const EPSet s = test::random_nonempty_set(rng);
        const EPSet t = test::random_nonempty_set(rng);
        REQUIRE_FALSE(intersect(closure(s), closure(t)).empty());
    }
}

TEST_CASE("general closure agrees with the brute-force oracle on random sets") {
    test::RandomSetShape shape;
    shape.max_added = 2;
    shape.exception_range = 30;
    std::mt19937_64 rng(55);
    for (int i = 0; i < 40; ++i) {
        const EPSet s = test::random_set(rng, shape);
        const auto v = oracle::oracle_closure_check(s, 120, 31, 5);
        INFO(s.to_string());
        REQUIRE(v.discrepancies.empty());
    }
}
