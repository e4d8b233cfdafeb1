#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "irrtop/json_io.hpp"

using namespace irrtop;

TEST_CASE("the documented finite-space schema parses bit-exactly") {
    auto j = json::parse(
        R"({"points":["a","b","c"],"opens":[[],["c"],["b","c"],["a","b","c"]]})");
    FiniteSpace s = space_from_json(j);
    REQUIRE(s == chain_space(3));
    // Serialization reproduces the same shape.
    REQUIRE(space_to_json(s) == j);
}

TEST_CASE("poset schema") {
    auto j = json::parse(R"({"points":["a","b"],"le":[["a","b"]]})");
    Poset p = poset_from_json(j);
    REQUIRE(p.le(0, 1));
    REQUIRE(poset_to_json(p) == j);
    // Covering pairs close transitively on input.
    auto chain = poset_from_json(
        json::parse(R"({"points":["a","b","c"],"le":[["a","b"],["b","c"]]})"));
    REQUIRE(chain.le(0, 2));
    REQUIRE_THROWS_AS(poset_from_json(json::parse(R"({"points":["a"],"le":[["a"]]})")),
                      FormatError);
    REQUIRE_THROWS_AS(space_from_json(json::parse(R"({"points":["a"]})")), FormatError);
}

TEST_CASE("spaces round-trip through JSON") {
    std::mt19937 rng(11);
    auto posets = enumerate_posets(4, false);
    std::uniform_int_distribution<size_t> pick(0, posets.size() - 1);
    for (int i = 0; i < 40; ++i) {
        FiniteSpace s = alexandroff(posets[pick(rng)]);
        REQUIRE(space_from_json(space_to_json(s)) == s);
        Poset p = specialization(s);
        REQUIRE(poset_from_json(poset_to_json(p)) == p);
    }
}

TEST_CASE("property reports expose the exact flag names") {
    json j = report_to_json(check_properties(chain_space(3)));
    for (const char* key :
         {"sober", "bounded_sober", "sup_sober", "irr_continuous", "si_minus_continuous",
          "si_continuous", "irr_plus_continuous", "oplus", "star", "c_space", "si_infty"})
        REQUIRE(j.contains(key));
    REQUIRE(j["sober"].is_boolean());
    json cat = report_to_json(catalog_get("cofinite-nat").properties());
    REQUIRE(cat["oplus"] == false);
    REQUIRE(cat["witnesses"].contains("oplus"));
}

TEST_CASE("the documented net schemas parse") {
    auto constant = json::parse(
        R"({"index":"nat","prefix":["c","c"],"tail":{"kind":"constant","value":"a"}})");
    NatNet net = nat_net_from_json(constant, chain_space(3));
    REQUIRE(net.prefix == std::vector<unsigned>{2, 2});
    REQUIRE(net.period == std::vector<unsigned>{0});

    auto mono = json::parse(
        R"({"index":"nat","prefix":[],"tail":{"kind":"monotone","values":"1-1/n","limit":"1"}})");
    const auto& rs = catalog_get("rational-scott");
    CatalogNetSpec cnet = catalog_net_from_json(mono, rs);
    REQUIRE(cnet.kind == TailKind::monotone);
    REQUIRE(cnet.gen == MonotoneGen::one_minus_one_over_n);
    REQUIRE(cnet.declared_limit);

    auto mono_named = json::parse(
        R"({"index":"nat","tail":{"kind":"monotone","values":"one-minus-one-over-n"}})");
    REQUIRE(catalog_net_from_json(mono_named, rs).kind == TailKind::monotone);

    // The "constant" named generator folds into a constant tail.
    auto gen_const = json::parse(
        R"({"index":"nat","tail":{"kind":"monotone","values":"constant","value":"1/2"}})");
    REQUIRE(catalog_net_from_json(gen_const, rs).kind == TailKind::constant);
    REQUIRE(nat_net_from_json(
                json::parse(
                    R"({"index":"nat","tail":{"kind":"monotone","values":"constant","value":"a"}})"),
                chain_space(3))
                .period == std::vector<unsigned>{0});

    auto periodic = json::parse(
        R"({"index":"nat","tail":{"kind":"periodic","values":["0","1"]}})");
    REQUIRE(catalog_net_from_json(periodic, catalog_get("cofinite-nat")).values.size() == 2);

    REQUIRE_THROWS_AS(nat_net_from_json(mono, chain_space(3)), UndecidableTailError);
    REQUIRE_THROWS_AS(nat_net_from_json(json::parse(R"({"index":"seq","tail":{}})"),
                                        chain_space(3)),
                      FormatError);
    auto bad_limit = json::parse(
        R"({"index":"nat","tail":{"kind":"monotone","values":"n","limit":"4"}})");
    REQUIRE_THROWS_AS(catalog_net_from_json(bad_limit, catalog_get("omega-plus-one")),
                      UndecidableTailError);
}

TEST_CASE("traces and suite results serialize") {
    json t = trace_to_json(si_iterate(chain_space(3), 2));
    REQUIRE(t["gamma"] == 0);
    REQUIRE(t["fixpoint_reached"] == true);
    REQUIRE(t["stages"].size() == 2);

    json ct = trace_to_json(catalog_get("omega-plus-one").si_iterate(3));
    REQUIRE(ct["gamma"] == 1);
    REQUIRE(ct["stages"] == json::array({"alexandroff", "scott", "scott"}));

    SuiteResult r = run_implication_suite(2);
    json sj = suite_to_json(r);
    REQUIRE(sj["spaces_checked"] == 4);
    REQUIRE(sj["violations"].is_array());
    REQUIRE(sj["violations"].empty());
}
