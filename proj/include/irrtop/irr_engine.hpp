#ifndef IRRTOP_IRR_ENGINE_HPP
#define IRRTOP_IRR_ENGINE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "irrtop/finite_space.hpp"

namespace irrtop {

/// Which irreducibility decision procedure to run.  The two must agree on
/// every input; the equality is itself an acceptance check, so the fast path
/// is never silently substituted for the definition.
enum class IrrAlgo {
    definitional,      // scan over pairs of open sets
    greatest_element,  // finite-space shortcut: E has a greatest element
};

/// E has a greatest element under specialization.
inline bool irreducible_has_greatest_fastpath(const FiniteSpace& s, PointSet e) {
    if (e.empty()) throw EmptySetError("irreducibility is defined for nonempty sets only");
    for (unsigned g = 0; g < s.n; ++g) {
        if (!e.contains(g)) continue;
        bool top = true;
        for (unsigned x = 0; x < s.n && top; ++x)
            if (e.contains(x) && !s.leq(x, g)) top = false;
        if (top) return true;
    }
    return false;
}

/// E is irreducible: whenever two opens both meet E, so does their
/// intersection.
inline bool is_irreducible(const FiniteSpace& s, PointSet e,
                           IrrAlgo algo = IrrAlgo::definitional) {
    if (e.empty()) throw EmptySetError("irreducibility is defined for nonempty sets only");
    if (algo == IrrAlgo::greatest_element)
        return irreducible_has_greatest_fastpath(s, e);
    for (size_t i = 0; i < s.opens.size(); ++i) {
        if (!s.opens[i].intersects(e)) continue;
        for (size_t j = i + 1; j < s.opens.size(); ++j) {
            if (!s.opens[j].intersects(e)) continue;
            if (!(s.opens[i] & s.opens[j]).intersects(e)) return false;
        }
    }
    return true;
}

/// Least upper bound of A under specialization, when it exists.  The
/// supremum of the empty set is the least element of the space, if any.
inline std::optional<unsigned> sup(const FiniteSpace& s, PointSet a) {
    PointSet ub = s.full();
    for (unsigned x = 0; x < s.n; ++x)
        if (a.contains(x)) ub = ub & s.up_set(x);
    for (unsigned u = 0; u < s.n; ++u)
        if (ub.contains(u) && ub.subset_of(s.up_set(u))) return u;
    return std::nullopt;
}

/// All irreducible subsets paired with their suprema (Irr+ of the space).
inline std::vector<std::pair<PointSet, unsigned>> irr_plus(
    const FiniteSpace& s, IrrAlgo algo = IrrAlgo::definitional) {
    std::vector<std::pair<PointSet, unsigned>> out;
    for (std::uint32_t m = 1; m < (1u << s.n); ++m) {
        PointSet e{m};
        if (!is_irreducible(s, e, algo)) continue;
        if (auto g = sup(s, e)) out.push_back({e, *g});
    }
    return out;
}

/// x is Irr-way-below y: every irreducible set with supremum above y meets
/// the up-set of x.
inline bool way_below_irr(const FiniteSpace& s, unsigned x, unsigned y,
                          IrrAlgo algo = IrrAlgo::definitional) {
    for (const auto& [e, g] : irr_plus(s, algo))
        if (s.leq(y, g) && !e.intersects(s.up_set(x))) return false;
    return true;
}

namespace detail {

inline PointSet dd_arrow_from(const FiniteSpace& s,
                              const std::vector<std::pair<PointSet, unsigned>>& ip,
                              unsigned x) {
    PointSet dd;
    for (unsigned y = 0; y < s.n; ++y) {
        bool wb = true;
        for (const auto& [e, g] : ip)
            if (s.leq(x, g) && !e.intersects(s.up_set(y))) { wb = false; break; }
        if (wb) dd = dd.with(y);
    }
    return dd;
}

} // namespace detail

/// {y | y is Irr-way-below x}.
inline PointSet dd_arrow(const FiniteSpace& s, unsigned x,
                         IrrAlgo algo = IrrAlgo::definitional) {
    return detail::dd_arrow_from(s, irr_plus(s, algo), x);
}

/// {y | x is Irr-way-below y}.
inline PointSet uu_arrow(const FiniteSpace& s, unsigned x,
                         IrrAlgo algo = IrrAlgo::definitional) {
    PointSet uu;
    for (unsigned y = 0; y < s.n; ++y)
        if (way_below_irr(s, x, y, algo)) uu = uu.with(y);
    return uu;
}

/// Union of the way-below sets of all points way-below x.  When the space is
/// Irr-continuous this set has supremum x.
inline PointSet m_set(const FiniteSpace& s, unsigned x,
                      IrrAlgo algo = IrrAlgo::definitional) {
    auto ip = irr_plus(s, algo);
    PointSet m;
    PointSet dd = detail::dd_arrow_from(s, ip, x);
    for (unsigned y = 0; y < s.n; ++y)
        if (dd.contains(y)) m = m | detail::dd_arrow_from(s, ip, y);
    return m;
}

/// The way-below relation interpolates: z << x implies z << y << x for some y.
inline bool interpolation_holds(const FiniteSpace& s,
                                IrrAlgo algo = IrrAlgo::definitional) {
    auto ip = irr_plus(s, algo);
    std::vector<PointSet> dd(s.n);
    for (unsigned x = 0; x < s.n; ++x) dd[x] = detail::dd_arrow_from(s, ip, x);
    for (unsigned x = 0; x < s.n; ++x)
        for (unsigned z = 0; z < s.n; ++z) {
            if (!dd[x].contains(z)) continue;
            bool found = false;
            for (unsigned y = 0; y < s.n && !found; ++y)
                if (dd[x].contains(y) && dd[y].contains(z)) found = true;
            if (!found) return false;
        }
    return true;
}

} // namespace irrtop

#endif
