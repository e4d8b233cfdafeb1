// Acceptance suite: every release criterion as one labeled pass/fail line.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "irrtop/catalog.hpp"
#include "irrtop/convergence.hpp"
#include "irrtop/theorem_lab.hpp"
#include "support/oracles.hpp"

using namespace irrtop;

namespace {

int failures = 0;

void verdict(int id, const std::string& name, bool ok, const std::string& detail = {}) {
    std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << name;
    if (!ok && !detail.empty()) std::cout << " — " << detail;
    std::cout << "\n";
    if (!ok) ++failures;
}

std::vector<FiniteSpace> spaces_up_to(unsigned max_n) {
    std::vector<FiniteSpace> out;
    for (unsigned n = 1; n <= max_n; ++n)
        for (const Poset& p : enumerate_posets(n, false)) out.push_back(alexandroff(p));
    return out;
}

// 1. Enumeration integrity plus the full pipeline under five minutes.
void criterion_1() {
    const auto t0 = std::chrono::steady_clock::now();
    bool counts_ok = true;
    std::string detail;
    const unsigned long long expected[] = {0, 1, 3, 19, 219, 4231};
    for (unsigned n = 1; n <= 5; ++n) {
        auto size = enumerate_posets(n, false).size();
        if (size != expected[n]) {
            counts_ok = false;
            detail = "n=" + std::to_string(n) + " gave " + std::to_string(size);
        }
    }
    SuiteResult suite = run_implication_suite(5);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    bool ok = counts_ok && suite.passed() && suite.spaces_checked == 4473 && secs < 300.0;
    if (!suite.passed())
        detail = suite.violations.front().space + " | " + suite.violations.front().implication +
                 " | " + suite.violations.front().witness;
    if (secs >= 300.0) detail = "took " + std::to_string(secs) + "s";
    verdict(1, "enumeration counts 1,3,19,219,4231 and a clean full pipeline in " +
                   std::to_string(static_cast<int>(secs)) + "s",
            ok, detail);
}

// 2. The two irreducibility routes agree on every subset of every small space.
void criterion_2() {
    unsigned long long mismatches = 0;
    for (const FiniteSpace& s : spaces_up_to(4))
        for (std::uint32_t m = 1; m < (1u << s.n); ++m)
            if (is_irreducible(s, PointSet{m}, IrrAlgo::definitional) !=
                irreducible_has_greatest_fastpath(s, PointSet{m}))
                ++mismatches;
    verdict(2, "irreducibility oracle equivalence on every subset, n <= 4", mismatches == 0,
            std::to_string(mismatches) + " mismatches");
}

// 3. The derivative is the identity, with fixpoint index zero, on n <= 5.
void criterion_3() {
    bool ok = true;
    std::string detail;
    for (unsigned n = 1; n <= 5 && ok; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            auto t = si_iterate(s, 3);
            if (si_derivative(s).opens != s.opens || !t.gamma || *t.gamma != 0) {
                ok = false;
                detail = space_label(s);
                break;
            }
        }
    verdict(3, "the derivative fixes every finite space at stage zero, n <= 5", ok, detail);
}

// 4. The catalog matrix, its derivative trace, and the probing validation.
void criterion_4() {
    bool ok = true;
    std::string detail;
    auto expect = [&](const std::string& space, const std::string& flag, bool want) {
        if (property_flag(catalog_get(space).properties(), flag) != want) {
            ok = false;
            detail = space + ":" + flag;
        }
    };
    expect("cofinite-nat", "irr_continuous", true);
    expect("cofinite-nat", "sup_sober", true);
    expect("cofinite-nat", "oplus", false);
    expect("cofinite-nat", "c_space", false);
    expect("poset-t", "c_space", true);
    expect("poset-t", "irr_continuous", false);
    expect("rational-scott", "irr_continuous", true);
    expect("rational-scott", "sup_sober", true);
    expect("rational-scott", "sober", false);

    const auto& pt = catalog_get("poset-t");
    for (const auto& x : pt.truncation(8))
        if (pt.way_below(x, CatalogPoint::make_a()) !=
            (x.tag == CatalogPoint::Tag::bottom)) {
            ok = false;
            detail = "way-below set of a is not {bot}";
        }

    const auto& om = catalog_get("omega-plus-one");
    auto trace = om.si_iterate(3);
    if (!trace.gamma || *trace.gamma != 1 || trace.stages.size() < 2 ||
        trace.stages[1] != "scott") {
        ok = false;
        detail = "omega-plus-one trace";
    }
    if (om.si_open(SymbolicOpen::make_top_singleton()) ||
        !om.si_open(SymbolicOpen::make_up_ray(3))) {
        ok = false;
        detail = "omega-plus-one derivative must drop exactly {inf}";
    }

    for (const CatalogSpace* sp : catalog_all()) {
        try {
            validate_catalog(*sp, 8);
        } catch (const OracleMismatchError& e) {
            ok = false;
            detail = e.what();
        }
    }
    verdict(4, "catalog matrix, Scott derivative of the ordinal chain, probing at fuel 8", ok,
            detail);
}

// 5. Convergence coincidence on every tail class and the induced topology.
void criterion_5() {
    bool ok = true;
    std::string detail;
    for (const FiniteSpace& s : spaces_up_to(4)) {
        auto ip = irr_plus(s);
        for (std::uint32_t m = 1; m < (1u << s.n) && ok; ++m)
            for (unsigned y = 0; y < s.n && ok; ++y) {
                TailClass tc{PointSet{m}};
                if (irr_converges(s, ip, tc, y) != topological_converges(s, tc, y)) {
                    ok = false;
                    detail = space_label(s);
                }
            }
        if (ok && induced_topology(s, irr_class(s)).opens != s.opens) {
            ok = false;
            detail = "induced topology differs on " + space_label(s);
        }
        if (!ok) break;
    }
    verdict(5, "Irr-convergence equals topological convergence and induces the topology, n <= 4",
            ok, detail);
}

// 6. All four axioms at budget three, plus the two concrete replays.
void criterion_6() {
    bool ok = true;
    std::string detail;
    for (const FiniteSpace& s : spaces_up_to(4)) {
        for (auto ax : {KelleyAxiom::constants, KelleyAxiom::subnets, KelleyAxiom::divergence,
                        KelleyAxiom::iterated_limits}) {
            auto r = kelley_check(s, ax, 3);
            if (!r.passed) {
                ok = false;
                detail = space_label(s) + ": " + r.detail;
            }
        }
        if (!ok) break;
    }

    // Divergence replay on the diamond.
    Poset diamond =
        poset_from_pairs(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}}, {"bot", "a", "b", "top"});
    FiniteSpace s = alexandroff(diamond);
    auto ip = irr_plus(s);
    auto parent = FiniteIndexNet::make(PreorderIndex::all_related(4), {1, 2, 1, 2});
    if (irr_converges(s, ip, parent, 3)) { ok = false; detail = "divergence hypothesis"; }
    std::vector<unsigned> bad;
    for (unsigned j = 0; j < 4; ++j)
        if (!s.leq(1, parent.values[j])) bad.push_back(j);
    try {
        auto sub = subnet_by_subset(parent, bad);
        TailClass tc = tail_class_of(s, sub);
        bool concrete = irr_converges(s, ip, sub, 3);
        bool quotient = irr_converges(s, ip, tc, 3);
        if (concrete || quotient || concrete != quotient) {
            ok = false;
            detail = "divergence replay verdicts";
        }
        for (std::uint32_t m = tc.cofinal.bits; m != 0; m = (m - 1) & tc.cofinal.bits)
            if (irr_converges(s, ip, TailClass{PointSet{m}}, 3)) {
                ok = false;
                detail = "a subnet of the witness subnet converges";
            }
    } catch (const Error& e) {
        ok = false;
        detail = e.what();
    }

    // Iterated-limits replay on the same space.
    FiniteIndexNet outer = FiniteIndexNet::make(PreorderIndex::all_related(2), {1, 2});
    std::vector<FiniteIndexNet> inner{
        FiniteIndexNet::make(PreorderIndex::all_related(2), {1, 3}),
        FiniteIndexNet::make(PreorderIndex::all_related(1), {2})};
    FiniteIndexNet prod = detail::product_net(outer, inner);
    bool hyp = irr_converges(s, ip, outer, 0) && irr_converges(s, ip, inner[0], 1) &&
               irr_converges(s, ip, inner[1], 2);
    bool direct = irr_converges(s, ip, prod, 0);
    bool quotient = irr_converges(s, ip, tail_class_of(s, prod), 0);
    if (!(hyp && direct && direct == quotient)) {
        ok = false;
        detail = "iterated-limits replay";
    }
    verdict(6, "all four convergence-class axioms at budget 3, with concrete replays", ok,
            detail);
}

// 7. The topology-location containments.
void criterion_7() {
    bool ok = true;
    std::string detail;
    for (const FiniteSpace& s : spaces_up_to(5)) {
        auto rep = location_check(s);
        if (!rep.passed || !rep.all_equal) {
            ok = false;
            detail = space_label(s);
            break;
        }
    }
    const auto& om = catalog_get("omega-plus-one");
    auto rep = location_check(om, 8);
    if (!rep.passed) { ok = false; detail = "omega-plus-one containments"; }
    auto mono = CatalogNetSpec::monotone(MonotoneGen::nat);
    bool witness = om.irr_converges(mono, CatalogPoint::make_inf()) &&
                   !om.eventually_in(mono, SymbolicOpen::make_top_singleton());
    if (!witness) { ok = false; detail = "the ascending-net witness for {inf}"; }
    bool note_found = false;
    for (const auto& n : rep.notes)
        if (n.find("{inf}") != std::string::npos) note_found = true;
    if (!note_found) { ok = false; detail = "witness note missing"; }
    verdict(7, "derived within induced within original, with the {inf} witness", ok, detail);
}

// 8. Tail-class soundness on a thousand random nets.
void criterion_8() {
    std::mt19937 rng(20250810);
    auto all = spaces_up_to(4);
    std::uniform_int_distribution<size_t> pick(0, all.size() - 1);
    unsigned long long mismatches = 0;

    for (int i = 0; i < 500; ++i) {
        const FiniteSpace& s = all[pick(rng)];
        std::uniform_int_distribution<unsigned> val(0, s.n - 1);
        std::uniform_int_distribution<int> len(1, 4);
        std::vector<unsigned> prefix, period;
        for (int k = len(rng); k > 1; --k) prefix.push_back(val(rng));
        for (int k = len(rng); k > 0; --k) period.push_back(val(rng));
        NatNet net = NatNet::make(prefix, period);
        PointSet tc = tail_class_of(s, net).cofinal;
        for (std::uint32_t m = 0; m < (1u << s.n); ++m)
            if (test_oracles::sim_eventually_in(net, PointSet{m}) != tc.subset_of(PointSet{m}))
                ++mismatches;
    }
    for (int i = 0; i < 500; ++i) {
        const FiniteSpace& s = all[pick(rng)];
        PreorderIndex idx = test_oracles::random_directed_preorder(rng, 5);
        std::uniform_int_distribution<unsigned> val(0, s.n - 1);
        std::vector<unsigned> values(idx.size);
        for (auto& v : values) v = val(rng);
        FiniteIndexNet net = FiniteIndexNet::make(idx, values);
        PointSet tc = tail_class_of(s, net).cofinal;
        for (std::uint32_t m = 0; m < (1u << s.n); ++m)
            if (test_oracles::sim_eventually_in(net, PointSet{m}) != tc.subset_of(PointSet{m}))
                ++mismatches;
    }
    verdict(8, "tail classes match direct simulation on 1000 random nets", mismatches == 0,
            std::to_string(mismatches) + " mismatches");
}

// 9. The containment characterisation over all three-point topologies.
void criterion_9() {
    bool ok = true;
    auto posets = enumerate_posets(3, false);
    for (const Poset& a : posets)
        for (const Poset& b : posets)
            if (!class_containment_check(alexandroff(a), alexandroff(b))) ok = false;
    verdict(9, "containment equivalence on all 19 x 19 pairs of three-point topologies", ok);
}

} // namespace

int main() {
    criterion_1();
    criterion_2();
    criterion_3();
    criterion_4();
    criterion_5();
    criterion_6();
    criterion_7();
    criterion_8();
    criterion_9();
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " criteria failed\n";
    return 1;
}
