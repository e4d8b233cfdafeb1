#ifndef IRRTOP_POSET_HPP
#define IRRTOP_POSET_HPP

#include <optional>
#include <string>
#include <vector>

#include "irrtop/errors.hpp"
#include "irrtop/point_set.hpp"

namespace irrtop {

inline std::vector<std::string> default_names(unsigned n) {
    std::vector<std::string> names;
    names.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        // a, b, ..., p for small carriers; p0, p1, ... beyond.
        if (n <= 16 && i < 16)
            names.push_back(std::string(1, static_cast<char>('a' + i)));
        else
            names.push_back("p" + std::to_string(i));
    }
    return names;
}

/// A finite partial order on points 0..n-1.  `up[i]` is the mask of {j : i <= j}.
struct Poset {
    unsigned n = 0;
    std::vector<std::string> names;
    std::vector<PointSet> up;

    bool le(unsigned i, unsigned j) const { return up[i].contains(j); }

    PointSet up_set(unsigned i) const { return up[i]; }
    PointSet down_set(unsigned i) const {
        PointSet d;
        for (unsigned j = 0; j < n; ++j)
            if (le(j, i)) d = d.with(j);
        return d;
    }
    /// Common upper bounds of A (the whole carrier when A is empty).
    PointSet upper_bounds(PointSet a) const {
        PointSet ub = PointSet::full(n);
        for (unsigned i = 0; i < n; ++i)
            if (a.contains(i)) ub = ub & up[i];
        return ub;
    }

    friend bool operator==(const Poset& a, const Poset& b) {
        return a.n == b.n && a.up == b.up && a.names == b.names;
    }
};

/// Validates reflexivity, antisymmetry and transitivity; throws InvalidPosetError.
inline void validate_poset(const Poset& p) {
    if (p.n > kMaxPoints)
        throw CarrierTooLargeError("poset carrier exceeds " + std::to_string(kMaxPoints) + " points");
    if (p.names.size() != p.n || p.up.size() != p.n)
        throw InvalidPosetError("poset field sizes do not match point count");
    for (unsigned i = 0; i < p.n; ++i) {
        if (!p.up[i].contains(i)) throw InvalidPosetError("relation not reflexive");
        if (!p.up[i].subset_of(PointSet::full(p.n)))
            throw InvalidPosetError("relation escapes the carrier");
        for (unsigned j = 0; j < p.n; ++j) {
            if (i != j && p.le(i, j) && p.le(j, i))
                throw InvalidPosetError("relation not antisymmetric");
            // Transitivity: i <= j forces up[j] within up[i].
            if (p.le(i, j) && !p.up[j].subset_of(p.up[i]))
                throw InvalidPosetError("relation not transitive");
        }
    }
}

inline Poset make_poset(unsigned n, std::vector<PointSet> up,
                        std::vector<std::string> names = {}) {
    Poset p;
    p.n = n;
    p.up = std::move(up);
    p.names = names.empty() ? default_names(n) : std::move(names);
    validate_poset(p);
    return p;
}

/// Poset from a list of (i <= j) pairs; the reflexive-transitive closure is
/// taken, antisymmetry of the result is validated.
inline Poset poset_from_pairs(unsigned n, const std::vector<std::pair<unsigned, unsigned>>& pairs,
                              std::vector<std::string> names = {}) {
    if (n > kMaxPoints)
        throw CarrierTooLargeError("poset carrier exceeds " + std::to_string(kMaxPoints) + " points");
    std::vector<PointSet> up(n);
    for (unsigned i = 0; i < n; ++i) up[i] = PointSet::singleton(i);
    for (auto [i, j] : pairs) {
        if (i >= n || j >= n) throw InvalidPosetError("relation pair escapes the carrier");
        up[i] = up[i].with(j);
    }
    // Warshall-style closure on successor masks.
    for (unsigned k = 0; k < n; ++k)
        for (unsigned i = 0; i < n; ++i)
            if (up[i].contains(k)) up[i] = up[i] | up[k];
    return make_poset(n, std::move(up), std::move(names));
}

/// Whether D (nonempty) is directed: every pair in D has an upper bound in D.
inline bool is_directed(const Poset& p, PointSet d) {
    if (d.empty()) throw EmptySetError("directedness is defined for nonempty sets only");
    for (unsigned i = 0; i < p.n; ++i) {
        if (!d.contains(i)) continue;
        for (unsigned j = i; j < p.n; ++j) {
            if (!d.contains(j)) continue;
            if (!(p.up[i] & p.up[j]).intersects(d)) return false;
        }
    }
    return true;
}

/// The greatest element of A, when it has one.
inline std::optional<unsigned> greatest(const Poset& p, PointSet a) {
    for (unsigned i = 0; i < p.n; ++i)
        if (a.contains(i) && a.subset_of(p.down_set(i))) return i;
    return std::nullopt;
}

/// Least element of the whole poset, when it has one.
inline std::optional<unsigned> least_element(const Poset& p) {
    for (unsigned i = 0; i < p.n; ++i)
        if (p.up[i] == PointSet::full(p.n)) return i;
    return std::nullopt;
}

} // namespace irrtop

#endif
