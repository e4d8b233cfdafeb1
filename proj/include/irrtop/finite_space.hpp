#ifndef IRRTOP_FINITE_SPACE_HPP
#define IRRTOP_FINITE_SPACE_HPP

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "irrtop/errors.hpp"
#include "irrtop/point_set.hpp"
#include "irrtop/poset.hpp"

namespace irrtop {

/// A finite T0 topological space, stored with its complete open-set family.
///
/// The family always contains the empty set and the carrier and is closed
/// under binary union and intersection (hence, by finiteness, arbitrary ones).
/// `min_nbhd[x]` caches the intersection of all opens containing x; it is
/// itself open and equals the up-set of x in the specialization order.
struct FiniteSpace {
    unsigned n = 0;
    std::vector<std::string> names;
    std::vector<PointSet> opens;     // sorted ascending by mask, deduplicated
    std::vector<PointSet> min_nbhd;  // per point

    PointSet full() const { return PointSet::full(n); }

    bool is_open(PointSet u) const {
        return std::binary_search(opens.begin(), opens.end(), u);
    }
    bool is_closed(PointSet c) const { return is_open(complement(c, n)); }

    /// x <= y in the specialization order (x in the closure of {y}).
    bool leq(unsigned x, unsigned y) const { return min_nbhd[x].contains(y); }

    PointSet up_set(unsigned x) const { return min_nbhd[x]; }
    PointSet down_set(unsigned x) const {
        PointSet d;
        for (unsigned j = 0; j < n; ++j)
            if (leq(j, x)) d = d.with(j);
        return d;
    }

    friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
        return a.n == b.n && a.names == b.names && a.opens == b.opens;
    }
};

namespace detail {

inline std::vector<PointSet> compute_min_nbhds(unsigned n, const std::vector<PointSet>& opens) {
    std::vector<PointSet> mn(n, PointSet::full(n));
    for (unsigned x = 0; x < n; ++x)
        for (PointSet u : opens)
            if (u.contains(x)) mn[x] = mn[x] & u;
    return mn;
}

inline FiniteSpace finish_space(unsigned n, std::vector<std::string> names,
                                std::set<PointSet> family) {
    family.insert(PointSet::empty_set());
    family.insert(PointSet::full(n));
    // Close under binary unions and intersections to a fixed point.
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<PointSet> cur(family.begin(), family.end());
        for (size_t i = 0; i < cur.size(); ++i)
            for (size_t j = i + 1; j < cur.size(); ++j) {
                if (family.insert(cur[i] | cur[j]).second) grew = true;
                if (family.insert(cur[i] & cur[j]).second) grew = true;
            }
    }
    FiniteSpace s;
    s.n = n;
    s.names = names.empty() ? default_names(n) : std::move(names);
    s.opens.assign(family.begin(), family.end());
    s.min_nbhd = compute_min_nbhds(n, s.opens);
    // T0: distinct points must have distinct minimal open neighborhoods.
    for (unsigned x = 0; x < n; ++x)
        for (unsigned y = x + 1; y < n; ++y)
            if (s.min_nbhd[x] == s.min_nbhd[y])
                throw NotT0Error("points " + s.names[x] + " and " + s.names[y] +
                                 " are topologically indistinguishable");
    return s;
}

} // namespace detail

/// Builds the space generated by `generators` (closing under finite unions
/// and intersections, with the empty set and the carrier added).
inline FiniteSpace from_opens(std::vector<std::string> names,
                              const std::vector<PointSet>& generators) {
    const unsigned n = static_cast<unsigned>(names.size());
    if (n > kMaxPoints)
        throw CarrierTooLargeError("carrier exceeds " + std::to_string(kMaxPoints) + " points");
    std::set<std::string> distinct(names.begin(), names.end());
    if (distinct.size() != names.size()) throw Error("point labels must be distinct");
    std::set<PointSet> family;
    for (PointSet g : generators) {
        if (!g.subset_of(PointSet::full(n)))
            throw Error("an open escapes the carrier");
        family.insert(g);
    }
    return detail::finish_space(n, std::move(names), std::move(family));
}

inline FiniteSpace from_opens(unsigned n, const std::vector<PointSet>& generators) {
    return from_opens(default_names(n), generators);
}

/// The Alexandroff topology of a poset: all upper sets.
inline FiniteSpace alexandroff(const Poset& p) {
    std::set<PointSet> family;
    for (std::uint32_t m = 0; m < (1u << p.n); ++m) {
        PointSet u{m};
        bool upper = true;
        for (unsigned x = 0; x < p.n && upper; ++x)
            if (u.contains(x) && !p.up[x].subset_of(u)) upper = false;
        if (upper) family.insert(u);
    }
    FiniteSpace s;
    s.n = p.n;
    s.names = p.names;
    s.opens.assign(family.begin(), family.end());
    s.min_nbhd = detail::compute_min_nbhds(p.n, s.opens);
    return s; // T0 follows from antisymmetry; min_nbhd[x] = up[x]
}

/// The upper topology of a poset, generated by complements of principal
/// down-sets.
inline FiniteSpace upper_topology(const Poset& p) {
    std::vector<PointSet> gens;
    for (unsigned x = 0; x < p.n; ++x)
        gens.push_back(complement(p.down_set(x), p.n));
    return from_opens(p.names, gens);
}

/// Smallest closed superset of A.
inline PointSet closure(const FiniteSpace& s, PointSet a) {
    PointSet c = s.full();
    for (PointSet u : s.opens) {
        PointSet closed = complement(u, s.n);
        if (a.subset_of(closed)) c = c & closed;
    }
    return c;
}

/// Largest open subset of A.
inline PointSet interior(const FiniteSpace& s, PointSet a) {
    PointSet best;
    for (PointSet u : s.opens)
        if (u.subset_of(a)) best = best | u;
    return best;
}

inline PointSet min_open_nbhd(const FiniteSpace& s, unsigned x) { return s.min_nbhd[x]; }

/// The specialization order: x <= y iff x lies in the closure of {y}.
inline Poset specialization(const FiniteSpace& s) {
    Poset p;
    p.n = s.n;
    p.names = s.names;
    p.up = s.min_nbhd;
    validate_poset(p);
    return p;
}

// Small stock spaces used across tests and the CLI.
inline Poset chain_poset(unsigned n) {
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (unsigned i = 0; i + 1 < n; ++i) pairs.push_back({i, i + 1});
    return poset_from_pairs(n, pairs);
}
inline FiniteSpace chain_space(unsigned n) { return alexandroff(chain_poset(n)); }

/// bot < a, bot < b with a, b incomparable.
inline Poset v_poset() {
    return poset_from_pairs(3, {{0, 1}, {0, 2}}, {"bot", "a", "b"});
}
inline FiniteSpace v_space() { return alexandroff(v_poset()); }

inline FiniteSpace sierpinski_space() {
    return alexandroff(poset_from_pairs(2, {{0, 1}}, {"bot", "top"}));
}

} // namespace irrtop

#endif
