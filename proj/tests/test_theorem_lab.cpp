#include <catch2/catch_amalgamated.hpp>

#include "irrtop/theorem_lab.hpp"
#include "support/oracles.hpp"

using namespace irrtop;

TEST_CASE("labeled poset counts against the brute-force oracle") {
    REQUIRE(enumerate_posets(1).size() == 1);
    REQUIRE(enumerate_posets(2).size() == 3);
    REQUIRE(enumerate_posets(3).size() == 19);
    REQUIRE(enumerate_posets(4).size() == 219);
    for (unsigned n = 1; n <= 4; ++n)
        REQUIRE(enumerate_posets(n).size() == test_oracles::count_posets_bruteforce(n));
    REQUIRE_THROWS_AS(enumerate_posets(0), TooLargeError);
    REQUIRE_THROWS_AS(enumerate_posets(7), TooLargeError);
}

TEST_CASE("enumeration is deterministic and valid") {
    auto a = enumerate_posets(3);
    auto b = enumerate_posets(3);
    for (size_t i = 0; i < a.size(); ++i) REQUIRE(a[i] == b[i]);
    for (const Poset& p : a) REQUIRE_NOTHROW(validate_poset(p));
}

TEST_CASE("canonical representatives") {
    REQUIRE(enumerate_posets(1, true).size() == 1);
    REQUIRE(enumerate_posets(2, true).size() == 2);
    REQUIRE(enumerate_posets(3, true).size() == 5);
    REQUIRE(enumerate_posets(4, true).size() == 16);
    REQUIRE(enumerate_posets(5, true).size() == 63);
}

TEST_CASE("query parsing") {
    PropertyReport r;
    r.sup_sober = true;
    r.c_space = false;
    r.star = true;
    REQUIRE(parse_query("sup_sober & !c_space").eval(r));
    REQUIRE(parse_query("sup_sober ∧ ¬c_space").eval(r));
    REQUIRE(parse_query("sup_sober and not c_space").eval(r));
    REQUIRE(parse_query("(c_space || star) && sup_sober").eval(r));
    REQUIRE_FALSE(parse_query("c_space | sober").eval(r));
    REQUIRE_THROWS_AS(parse_query("!t0"), BadQueryError);
    REQUIRE_THROWS_AS(parse_query("sup_sober &"), BadQueryError);
    REQUIRE_THROWS_AS(parse_query("(sup_sober"), BadQueryError);
    REQUIRE_THROWS_AS(parse_query("sup_sober extra"), BadQueryError);
}

TEST_CASE("the implication suite is clean at three points") {
    SuiteResult r = run_implication_suite(3);
    REQUIRE(r.spaces_checked == 23);
    REQUIRE(r.passed());
    REQUIRE_THROWS_AS(run_implication_suite(6), TooLargeError);
}

TEST_CASE("counterexample searches") {
    REQUIRE_FALSE(find_counterexample("sup_sober & !c_space", 5).has_value());
    auto first = find_counterexample("irr_continuous", 2);
    REQUIRE(first);
    REQUIRE(first->n == 1);
    REQUIRE_THROWS_AS(find_counterexample("!t0", 3), BadQueryError);
    // Determinism: the same query returns the same space.
    auto again = find_counterexample("irr_continuous", 2);
    REQUIRE(*first == *again);
}

TEST_CASE("the catalog suite is clean") {
    SuiteResult r = catalog_suite(8);
    REQUIRE(r.spaces_checked == 4);
    for (const auto& v : r.violations)
        INFO(v.space << " " << v.implication << " " << v.witness);
    REQUIRE(r.passed());
}

TEST_CASE("space labels are stable") {
    REQUIRE(space_label(chain_space(3)) == "n=3;a<b,b<c");
    REQUIRE(space_label(alexandroff(poset_from_pairs(2, {}))) == "n=2;antichain");
}
