#include <catch2/catch_amalgamated.hpp>

#include "irrtop/finite_space.hpp"
#include "irrtop/theorem_lab.hpp"
#include "support/oracles.hpp"

using namespace irrtop;

namespace {

PointSet set_of(const FiniteSpace& s, std::initializer_list<const char*> labels) {
    PointSet p;
    for (const char* l : labels) {
        bool found = false;
        for (unsigned i = 0; i < s.n; ++i)
            if (s.names[i] == l) { p = p.with(i), found = true; }
        REQUIRE(found);
    }
    return p;
}

} // namespace

TEST_CASE("from_opens closes the generating family and validates T0") {
    auto s = from_opens({"a", "b", "c"}, {PointSet{0b100}, PointSet{0b110}});
    REQUIRE(s.opens == std::vector<PointSet>{PointSet{0}, PointSet{0b100}, PointSet{0b110},
                                             PointSet{0b111}});

    auto discrete = from_opens({"a", "b"}, {PointSet{0b01}, PointSet{0b10}});
    REQUIRE(discrete.opens.size() == 4);

    REQUIRE_THROWS_AS(from_opens({"a", "b"}, {PointSet{0b11}}), NotT0Error);
    REQUIRE_THROWS_AS(from_opens(default_names(17), {}), CarrierTooLargeError);
    REQUIRE_THROWS_AS(from_opens({"a", "a"}, {}), Error);
    REQUIRE_THROWS_AS(from_opens({"a"}, {PointSet{0b10}}), Error);
}

TEST_CASE("alexandroff topologies are the up-set families") {
    auto chain = chain_space(3);
    REQUIRE(chain.opens == std::vector<PointSet>{PointSet{0}, PointSet{0b100}, PointSet{0b110},
                                                 PointSet{0b111}});

    auto discrete = alexandroff(poset_from_pairs(2, {}));
    REQUIRE(discrete.opens.size() == 4);

    auto v = v_space();
    REQUIRE(v.opens == std::vector<PointSet>{PointSet{0}, PointSet{0b010}, PointSet{0b100},
                                             PointSet{0b110}, PointSet{0b111}});
}

TEST_CASE("upper topology generated from complements of principal down-sets") {
    auto chain = upper_topology(chain_poset(3));
    REQUIRE(chain.opens == chain_space(3).opens); // chains: both coincide

    auto anti = upper_topology(poset_from_pairs(2, {}));
    REQUIRE(anti.opens.size() == 4);

    auto single = upper_topology(poset_from_pairs(1, {}));
    REQUIRE(single.opens == std::vector<PointSet>{PointSet{0}, PointSet{0b1}});
}

TEST_CASE("closure and interior") {
    auto chain = chain_space(3);
    REQUIRE(closure(chain, set_of(chain, {"b"})) == set_of(chain, {"a", "b"}));
    REQUIRE(interior(chain, set_of(chain, {"a", "b"})) == PointSet::empty_set());
    REQUIRE(closure(chain, chain.full()) == chain.full());
}

TEST_CASE("closure and interior calculus on random spaces") {
    std::mt19937 rng(7);
    auto posets = enumerate_posets(4, false);
    std::uniform_int_distribution<size_t> pick(0, posets.size() - 1);
    for (int round = 0; round < 50; ++round) {
        FiniteSpace s = alexandroff(posets[pick(rng)]);
        std::uniform_int_distribution<std::uint32_t> sub(0, (1u << s.n) - 1);
        PointSet a{sub(rng)}, b{sub(rng)};
        PointSet cl = closure(s, a);
        REQUIRE(a.subset_of(cl));
        REQUIRE(closure(s, cl) == cl);
        REQUIRE(interior(s, a) == complement(closure(s, complement(a, s.n)), s.n));
        if (a.subset_of(b)) REQUIRE(closure(s, a).subset_of(closure(s, b)));
        REQUIRE(interior(s, a).subset_of(a));
    }
}

TEST_CASE("specialization order") {
    auto chain = chain_space(3);
    Poset p = specialization(chain);
    REQUIRE(p.le(0, 1));
    REQUIRE(p.le(1, 2));
    REQUIRE_FALSE(p.le(2, 0));

    auto discrete = alexandroff(poset_from_pairs(2, {}));
    Poset q = specialization(discrete);
    REQUIRE_FALSE(q.le(0, 1));
    REQUIRE_FALSE(q.le(1, 0));
}

TEST_CASE("alexandroff round trip over the enumeration") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            REQUIRE(specialization(s) == p);
            REQUIRE(from_opens(s.names, s.opens) == s);
        }
}

TEST_CASE("minimal open neighborhoods") {
    auto chain = chain_space(3);
    REQUIRE(min_open_nbhd(chain, 0) == chain.full());
    REQUIRE(min_open_nbhd(chain, 2) == PointSet{0b100});
    auto v = v_space();
    REQUIRE(min_open_nbhd(v, 0) == v.full());
}

TEST_CASE("opens are exactly the up-sets, exhaustively") {
    for (unsigned n = 1; n <= 4; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            for (std::uint32_t m = 0; m < (1u << n); ++m) {
                PointSet u{m};
                bool upper = true;
                for (unsigned x = 0; x < n && upper; ++x)
                    if (u.contains(x) && !p.up_set(x).subset_of(u)) upper = false;
                REQUIRE(s.is_open(u) == upper);
            }
        }
}

TEST_CASE("poset validation") {
    REQUIRE_THROWS_AS(poset_from_pairs(2, {{0, 1}, {1, 0}}), InvalidPosetError);
    REQUIRE_THROWS_AS(poset_from_pairs(2, {{0, 5}}), InvalidPosetError);
    // Transitive closure accepts covering pairs.
    Poset p = poset_from_pairs(3, {{0, 1}, {1, 2}});
    REQUIRE(p.le(0, 2));
    REQUIRE(is_directed(p, PointSet{0b101}));
    REQUIRE_THROWS_AS(is_directed(p, PointSet::empty_set()), EmptySetError);
}
