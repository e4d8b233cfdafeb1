#include <catch2/catch_amalgamated.hpp>

#include "irrtop/catalog.hpp"
#include "irrtop/convergence.hpp"
#include "irrtop/theorem_lab.hpp"
#include "support/oracles.hpp"

using namespace irrtop;

TEST_CASE("tail classes of nat-indexed nets") {
    auto chain = chain_space(3);
    auto v = v_space();
    REQUIRE(tail_class_of(chain, NatNet::constant(1)).cofinal == PointSet::singleton(1));
    REQUIRE(tail_class_of(v, NatNet::make({}, {1, 2})).cofinal == PointSet{0b110});
    REQUIRE(tail_class_of(chain, NatNet::make({2, 2}, {0})).cofinal == PointSet::singleton(0));
}

TEST_CASE("tail classes of finite-index nets use the cone above an upper bound") {
    auto v = v_space();
    auto chainidx = FiniteIndexNet::make(PreorderIndex::chain(3), {1, 2, 0});
    REQUIRE(tail_class_of(v, chainidx).cofinal == PointSet::singleton(0));
    auto allrel = FiniteIndexNet::make(PreorderIndex::all_related(3), {1, 2, 0});
    REQUIRE(tail_class_of(v, allrel).cofinal == PointSet{0b111});
}

TEST_CASE("tail-class soundness against direct simulation") {
    std::mt19937 rng(42);
    auto posets = enumerate_posets(4, false);
    std::uniform_int_distribution<size_t> pick(0, posets.size() - 1);
    for (int round = 0; round < 60; ++round) {
        FiniteSpace s = alexandroff(posets[pick(rng)]);
        std::uniform_int_distribution<unsigned> val(0, s.n - 1);
        std::uniform_int_distribution<int> len(1, 4);
        std::vector<unsigned> prefix, period;
        for (int i = len(rng); i > 1; --i) prefix.push_back(val(rng));
        for (int i = len(rng); i > 0; --i) period.push_back(val(rng));
        NatNet net = NatNet::make(prefix, period);
        PointSet tc = tail_class_of(s, net).cofinal;
        REQUIRE(tc == test_oracles::sim_cofinal_points(net, s.n));
        for (std::uint32_t m = 0; m < (1u << s.n); ++m)
            REQUIRE(test_oracles::sim_eventually_in(net, PointSet{m}) ==
                    tc.subset_of(PointSet{m}));
    }
}

TEST_CASE("convergence verdicts on finite spaces") {
    auto chain = chain_space(3);
    auto v = v_space();
    auto ip_chain = irr_plus(chain);
    auto ip_v = irr_plus(v);

    REQUIRE(topological_converges(chain, TailClass{PointSet::singleton(1)}, 0));
    REQUIRE_FALSE(topological_converges(chain, TailClass{PointSet::singleton(0)}, 2));
    REQUIRE(irr_converges(chain, ip_chain, TailClass{PointSet::singleton(2)}, 0));
    REQUIRE_FALSE(irr_converges(v, ip_v, TailClass{PointSet{0b110}}, 1));

    // The two verdicts and the closed form coincide on every pair.
    for (unsigned n = 1; n <= 4; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            auto ip = irr_plus(s);
            for (std::uint32_t m = 1; m < (1u << n); ++m)
                for (unsigned y = 0; y < n; ++y) {
                    TailClass tc{PointSet{m}};
                    bool irr = irr_converges(s, ip, tc, y);
                    REQUIRE(irr == topological_converges(s, tc, y));
                    REQUIRE(irr == irr_converges_shortcut(s, tc, y));
                }
        }
}

TEST_CASE("subnets") {
    auto v = v_space();
    auto parent = FiniteIndexNet::make(PreorderIndex::all_related(4), {1, 2, 1, 2});
    auto sub = subnet_by_subset(parent, {1, 3});
    REQUIRE(tail_class_of(v, sub).cofinal == PointSet::singleton(2));
    REQUIRE_THROWS_AS(subnet_by_subset(parent, std::vector<unsigned>{}), NotCofinalError);

    // A constant selector into a chain-indexed parent is not cofinal.  (Over
    // an all-related parent index it would be: every index dominates every
    // other there.)
    auto chain_parent = FiniteIndexNet::make(PreorderIndex::chain(4), {1, 2, 1, 2});
    REQUIRE_THROWS_AS(subnet(chain_parent, PreorderIndex::chain(3), {0, 0, 0}), NotCofinalError);
    REQUIRE_NOTHROW(subnet(parent, PreorderIndex::chain(3), {0, 0, 0}));
    // Affine selectors on nat nets.
    NatNet alt = NatNet::make({}, {0, 1});
    NatNet even = subnet_affine(alt, 2, 0);
    REQUIRE(tail_class_of(chain_space(3), even).cofinal == PointSet::singleton(0));
    REQUIRE_THROWS_AS(subnet_affine(alt, 0, 5), NotCofinalError);

    // Subnets keep convergence targets on instances.
    auto chain = chain_space(3);
    auto ip = irr_plus(chain);
    auto par = FiniteIndexNet::make(PreorderIndex::all_related(3), {1, 2, 1});
    auto sn = subnet_by_subset(par, {1});
    for (unsigned y = 0; y < 3; ++y)
        if (irr_converges(chain, ip, par, y)) REQUIRE(irr_converges(chain, ip, sn, y));
}

TEST_CASE("the divergence construction replays on a four-point space") {
    // Diamond: bot < a, b < top.
    Poset diamond = poset_from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                     {"bot", "a", "b", "top"});
    FiniteSpace s = alexandroff(diamond);
    auto ip = irr_plus(s);
    auto parent = FiniteIndexNet::make(PreorderIndex::all_related(4), {1, 2, 1, 2});
    REQUIRE_FALSE(irr_converges(s, ip, parent, 3));
    // Indices whose value fails to dominate a witness below top.
    std::vector<unsigned> bad;
    for (unsigned j = 0; j < 4; ++j)
        if (!s.leq(1, parent.values[j])) bad.push_back(j);
    REQUIRE(bad == std::vector<unsigned>{1, 3});
    auto sub = subnet_by_subset(parent, bad);
    REQUIRE(tail_class_of(s, sub).cofinal == PointSet::singleton(2));
    // No subnet of the subnet converges to top: its tail classes are the
    // nonempty subsets of {b}.
    REQUIRE_FALSE(irr_converges(s, ip, TailClass{PointSet::singleton(2)}, 3));
    // Verdicts match between concrete nets and their tail classes.
    REQUIRE(irr_converges(s, ip, sub, 3) ==
            irr_converges(s, ip, tail_class_of(s, sub), 3));
}

TEST_CASE("kelley axioms on small spaces") {
    auto chain = chain_space(3);
    REQUIRE(kelley_check(chain, KelleyAxiom::constants, 3).passed);
    auto v = v_space();
    auto div = kelley_check(v, KelleyAxiom::divergence, 3);
    REQUIRE(div.passed);
    REQUIRE_FALSE(div.detail.empty()); // a witness subnet tail-class is reported
    for (auto ax : {KelleyAxiom::constants, KelleyAxiom::subnets, KelleyAxiom::divergence,
                    KelleyAxiom::iterated_limits})
        REQUIRE(kelley_check(v, ax, 3).passed);
    REQUIRE_THROWS_AS(kelley_check(chain, KelleyAxiom::subnets, 0), BudgetExceededError);
    REQUIRE_THROWS_AS(kelley_check(chain, KelleyAxiom::subnets, 9), BudgetExceededError);
}

TEST_CASE("the iterated-limits product replays concretely") {
    Poset diamond = poset_from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                                     {"bot", "a", "b", "top"});
    FiniteSpace s = alexandroff(diamond);
    auto ip = irr_plus(s);
    FiniteIndexNet outer = FiniteIndexNet::make(PreorderIndex::all_related(2), {1, 2});
    std::vector<FiniteIndexNet> inner{
        FiniteIndexNet::make(PreorderIndex::all_related(2), {1, 3}),
        FiniteIndexNet::make(PreorderIndex::all_related(1), {2})};
    REQUIRE(irr_converges(s, ip, outer, 0));
    REQUIRE(irr_converges(s, ip, inner[0], 1));
    REQUIRE(irr_converges(s, ip, inner[1], 2));
    FiniteIndexNet prod = detail::product_net(outer, inner);
    // |I x M| = |I| * |J(0)| * |J(1)|.
    REQUIRE(prod.index.size == 2 * (2 * 1));
    bool direct = irr_converges(s, ip, prod, 0);
    bool quotient = irr_converges(s, ip, tail_class_of(s, prod), 0);
    REQUIRE(direct);
    REQUIRE(direct == quotient);
    REQUIRE(tail_class_of(s, prod).cofinal == PointSet{0b1110});
}

TEST_CASE("induced topologies") {
    auto chain = chain_space(3);
    REQUIRE(induced_topology(chain, irr_class(chain)).opens == chain.opens);
    REQUIRE(induced_topology(chain, topological_class(chain)).opens == chain.opens);
    auto discrete = alexandroff(poset_from_pairs(2, {}));
    REQUIRE(induced_topology(discrete, irr_class(discrete)).opens == discrete.opens);
}

TEST_CASE("containment characterisation") {
    auto chain = chain_space(3);
    // A finer topology on the same carrier: two minimal points below c.
    auto finer = alexandroff(poset_from_pairs(3, {{0, 2}, {1, 2}}));
    REQUIRE(class_containment_check(chain, finer));
    REQUIRE(class_containment_check(finer, chain));
    REQUIRE(class_containment_check(chain, chain));
    auto sierpinski = sierpinski_space();
    auto discrete2 = alexandroff(poset_from_pairs(2, {}, {"bot", "top"}));
    REQUIRE(class_containment_check(sierpinski, discrete2));
    REQUIRE(class_containment_check(discrete2, sierpinski));
}

TEST_CASE("location of the induced topology") {
    for (const Poset& p : enumerate_posets(3, false)) {
        auto rep = location_check(alexandroff(p));
        REQUIRE(rep.passed);
        REQUIRE(rep.all_equal);
    }
    // The catalog side: the ascending net keeps {inf} out of the induced
    // topology of the ordinal chain.
    const auto& om = catalog_get("omega-plus-one");
    auto rep = location_check(om, 8);
    REQUIRE(rep.passed);
    bool witness = false;
    for (const auto& n : rep.notes)
        if (n.find("{inf}") != std::string::npos) witness = true;
    REQUIRE(witness);
    const auto& rs = catalog_get("rational-scott");
    REQUIRE(location_check(rs, 8).passed);
}

TEST_CASE("the convergence characterisation of way-below") {
    auto chain = chain_space(3);
    REQUIRE(way_below_convergence_char(chain, 0, 2).passed);
    const auto& rs = catalog_get("rational-scott");
    REQUIRE(way_below_convergence_char(rs, *rs.parse_point("1/2"), *rs.parse_point("1"), 8)
                .passed);
    const auto& pt = catalog_get("poset-t");
    REQUIRE(way_below_convergence_char(pt, *pt.parse_point("bot"), *pt.parse_point("a"), 8)
                .passed);
}

TEST_CASE("catalog convergence closed forms") {
    const auto& rs = catalog_get("rational-scott");
    auto seq = CatalogNetSpec::monotone(MonotoneGen::one_minus_one_over_n);
    REQUIRE(rs.topological_converges(seq, *rs.parse_point("1")));
    REQUIRE(rs.irr_converges(seq, *rs.parse_point("1")));
    REQUIRE(rs.irr_converges(seq, *rs.parse_point("1/2")));
    REQUIRE_FALSE(rs.irr_converges(seq, *rs.parse_point("3/2")));

    const auto& om = catalog_get("omega-plus-one");
    auto mono = CatalogNetSpec::monotone(MonotoneGen::nat);
    REQUIRE(om.irr_converges(mono, CatalogPoint::make_inf()));
    REQUIRE_FALSE(om.topological_converges(mono, CatalogPoint::make_inf()));

    const auto& cn = catalog_get("cofinite-nat");
    REQUIRE(cn.topological_converges(mono, CatalogPoint::make_nat(0)));
    REQUIRE_FALSE(cn.irr_converges(mono, CatalogPoint::make_nat(0)));
    auto c5 = CatalogNetSpec::constant(CatalogPoint::make_nat(5));
    REQUIRE(cn.topological_converges(c5, CatalogPoint::make_nat(5)));
    REQUIRE_FALSE(cn.topological_converges(c5, CatalogPoint::make_nat(4)));
}
