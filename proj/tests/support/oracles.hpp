#ifndef IRRTOP_TESTS_ORACLES_HPP
#define IRRTOP_TESTS_ORACLES_HPP

// Test-side oracles, kept independent of the library code paths they check.

#include <cstdint>
#include <random>
#include <vector>

#include "irrtop/convergence.hpp"
#include "irrtop/finite_space.hpp"

namespace irrtop::test_oracles {

/// Irreducibility through the closed-set definition: E inside a union of two
/// closed sets must sit inside one of them.  The library decides through
/// pairs of opens; this is the other route.
inline bool irreducible_closed_def(const FiniteSpace& s, PointSet e) {
    for (PointSet u1 : s.opens) {
        PointSet a1 = complement(u1, s.n);
        for (PointSet u2 : s.opens) {
            PointSet a2 = complement(u2, s.n);
            if (e.subset_of(a1 | a2) && !e.subset_of(a1) && !e.subset_of(a2)) return false;
        }
    }
    return true;
}

/// Brute-force poset count: every off-diagonal relation bitmask, filtered by
/// antisymmetry and transitivity (reflexivity is implicit).  Usable to n = 4.
inline unsigned long long count_posets_bruteforce(unsigned n) {
    const unsigned bits = n * n;
    unsigned long long count = 0;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << bits); ++mask) {
        auto rel = [&](unsigned i, unsigned j) {
            return i == j || ((mask >> (i * n + j)) & 1);
        };
        bool ok = true;
        for (unsigned i = 0; i < n && ok; ++i) {
            if (((mask >> (i * n + i)) & 1) != 0) ok = false; // diagonal spelled implicitly
            for (unsigned j = 0; j < n && ok; ++j) {
                if (i != j && rel(i, j) && rel(j, i)) ok = false;
                for (unsigned k = 0; k < n && ok; ++k)
                    if (rel(i, j) && rel(j, k) && !rel(i, k)) ok = false;
            }
        }
        if (ok) ++count;
    }
    return count;
}

/// Direct eventual-membership simulation for a nat-indexed net: scan
/// candidate thresholds over a horizon long enough to cover a full period.
inline bool sim_eventually_in(const NatNet& net, PointSet u) {
    const std::size_t plen = net.period.size();
    const std::size_t horizon = net.prefix.size() + 2 * plen;
    for (std::size_t i0 = 0; i0 <= net.prefix.size() + plen; ++i0) {
        bool ok = true;
        for (std::size_t i = i0; i < horizon + i0; ++i)
            if (!u.contains(net.at(i))) { ok = false; break; }
        if (ok) return true;
    }
    return false;
}

/// Direct eventual-membership simulation for a finite-index net.
inline bool sim_eventually_in(const FiniteIndexNet& net, PointSet u) {
    for (unsigned i0 = 0; i0 < net.index.size; ++i0) {
        bool ok = true;
        for (unsigned i = 0; i < net.index.size && ok; ++i)
            if (net.index.le(i0, i) && !u.contains(net.values[i])) ok = false;
        if (ok) return true;
    }
    return false;
}

/// Cofinal occurrence decided by simulation: x recurs when the net is not
/// eventually inside the complement of {x}.
template <typename Net>
inline PointSet sim_cofinal_points(const Net& net, unsigned n) {
    PointSet c;
    for (unsigned x = 0; x < n; ++x)
        if (!sim_eventually_in(net, complement(PointSet::singleton(x), n))) c = c.with(x);
    return c;
}

/// Deterministic random directed pre-order for net-index fuzzing.
inline PreorderIndex random_directed_preorder(std::mt19937& rng, unsigned max_size) {
    std::uniform_int_distribution<unsigned> size_dist(1, max_size);
    const unsigned k = size_dist(rng);
    PreorderIndex p;
    p.size = k;
    p.le_.assign(k * k, 0);
    for (unsigned i = 0; i < k; ++i) p.le_[i * k + i] = 1;
    std::bernoulli_distribution edge(0.4);
    for (unsigned i = 0; i < k; ++i)
        for (unsigned j = i + 1; j < k; ++j)
            if (edge(rng)) p.le_[i * k + j] = 1;
    for (unsigned i = 0; i + 1 < k; ++i) p.le_[i * k + (k - 1)] = 1; // a top keeps it directed
    // Occasionally merge the top into a cycle so genuine pre-orders show up.
    if (k >= 2 && std::bernoulli_distribution(0.5)(rng)) {
        std::uniform_int_distribution<unsigned> pick(0, k - 2);
        p.le_[(k - 1) * k + pick(rng)] = 1;
    }
    // Transitive closure.
    for (unsigned m = 0; m < k; ++m)
        for (unsigned i = 0; i < k; ++i)
            if (p.le_[i * k + m])
                for (unsigned j = 0; j < k; ++j)
                    if (p.le_[m * k + j]) p.le_[i * k + j] = 1;
    return p;
}

} // namespace irrtop::test_oracles

#endif
