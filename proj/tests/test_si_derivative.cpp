#include <catch2/catch_amalgamated.hpp>

#include "irrtop/si_derivative.hpp"
#include "irrtop/theorem_lab.hpp"

using namespace irrtop;

TEST_CASE("SI-openness") {
    auto chain = chain_space(3);
    REQUIRE(is_si_open(chain, PointSet{0b100}));
    REQUIRE(is_si_open(chain, PointSet::empty_set()));
    REQUIRE_THROWS_AS(is_si_open(chain, PointSet{0b001}), NotOpenError);
}

TEST_CASE("the derivative is the identity on finite spaces") {
    auto discrete = alexandroff(poset_from_pairs(2, {}));
    REQUIRE(si_derivative(discrete) == discrete);
    for (unsigned n = 1; n <= 4; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            FiniteSpace d = si_derivative(s);
            REQUIRE(d.opens == s.opens);
            REQUIRE(specialization(d) == p);
        }
}

TEST_CASE("iteration reaches the fixpoint immediately") {
    auto chain = chain_space(3);
    auto t = si_iterate(chain, 3);
    REQUIRE(t.fixpoint_reached);
    REQUIRE(t.gamma == 0u);
    REQUIRE(t.stages.size() == 2);
    REQUIRE(t.stages[0] == t.stages[1]);

    auto single = si_iterate(chain_space(1), 1);
    REQUIRE(single.gamma == 0u);
    REQUIRE_THROWS_AS(si_iterate(chain, 0), Error);
}

TEST_CASE("closed-set criterion matches the complement route") {
    auto chain = chain_space(3);
    REQUIRE(si_closed_check(chain, PointSet{0b011}));
    REQUIRE(si_closed_check(chain, chain.full()));
    REQUIRE_THROWS_AS(si_closed_check(chain, PointSet{0b100}), NotClosedError);
    for (unsigned n = 1; n <= 4; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            FiniteSpace d = si_derivative(s);
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                PointSet c{m};
                if (!s.is_closed(c)) continue;
                REQUIRE(si_closed_check(s, c) == d.is_open(complement(c, n)));
            }
        }
}

TEST_CASE("the s-set") {
    auto chain = chain_space(3);
    REQUIRE(s_set(chain, 2) == chain.full());
    REQUIRE(s_set(chain, 0) == PointSet::singleton(0));
    REQUIRE(s_set(chain_space(1), 0) == PointSet::singleton(0));
    // On spaces whose derivative is a C-space (all finite ones), the down
    // closure of the s-set is the way-below set.
    for (const Poset& p : enumerate_posets(3, false)) {
        FiniteSpace s = alexandroff(p);
        for (unsigned x = 0; x < s.n; ++x) {
            PointSet down;
            for (unsigned y : s_set(s, x).members(s.n)) down = down | s.down_set(y);
            REQUIRE(down == dd_arrow(s, x));
        }
    }
}

TEST_CASE("derivative structure preservation, exhaustively") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            FiniteSpace d = si_derivative(s);
            for (PointSet u : d.opens) REQUIRE(s.is_open(u)); // coarser
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                PointSet a{m};
                bool clopen_s = s.is_open(a) && s.is_closed(a);
                bool clopen_d = d.is_open(a) && d.is_closed(a);
                REQUIRE(clopen_s == clopen_d);
            }
        }
}
