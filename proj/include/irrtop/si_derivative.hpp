#ifndef IRRTOP_SI_DERIVATIVE_HPP
#define IRRTOP_SI_DERIVATIVE_HPP

#include <optional>
#include <vector>

#include "irrtop/irr_engine.hpp"

namespace irrtop {

/// The stages of iterating the derived-space operator until a fixpoint.
/// Successive stages carry shrinking topologies; when the fixpoint was found
/// within fuel, the last two stages are equal and `gamma` is the first index
/// whose topology never changes again.
struct DerivedSpaceTrace {
    std::vector<FiniteSpace> stages;
    std::optional<unsigned> gamma;
    bool fixpoint_reached = false;
};

/// U is SI-open: every irreducible set whose supremum lies in U meets U.
/// U must be open in s.
inline bool is_si_open(const FiniteSpace& s, PointSet u,
                       IrrAlgo algo = IrrAlgo::definitional) {
    if (!s.is_open(u)) throw NotOpenError("is_si_open requires an open set");
    for (const auto& [e, g] : irr_plus(s, algo))
        if (u.contains(g) && !e.intersects(u)) return false;
    return true;
}

/// Same carrier, opens filtered down to the SI-open ones.
inline FiniteSpace si_derivative(const FiniteSpace& s,
                                 IrrAlgo algo = IrrAlgo::definitional) {
    auto ip = irr_plus(s, algo);
    FiniteSpace d;
    d.n = s.n;
    d.names = s.names;
    for (PointSet u : s.opens) {
        bool keep = true;
        for (const auto& [e, g] : ip)
            if (u.contains(g) && !e.intersects(u)) { keep = false; break; }
        if (keep) d.opens.push_back(u);
    }
    d.min_nbhd = detail::compute_min_nbhds(d.n, d.opens);
    return d;
}

/// Iterates si_derivative until the topology stops changing or `fuel`
/// applications have been spent.  fuel >= 1.
inline DerivedSpaceTrace si_iterate(const FiniteSpace& s, unsigned fuel,
                                    IrrAlgo algo = IrrAlgo::definitional) {
    if (fuel < 1) throw Error("si_iterate requires fuel >= 1");
    DerivedSpaceTrace t;
    t.stages.push_back(s);
    for (unsigned k = 0; k < fuel; ++k) {
        FiniteSpace next = si_derivative(t.stages.back(), algo);
        bool fixed = next.opens == t.stages.back().opens;
        t.stages.push_back(std::move(next));
        if (fixed) {
            t.gamma = k;
            t.fixpoint_reached = true;
            break;
        }
    }
    return t;
}

/// C (closed in s) stays closed in the derived space: every irreducible set
/// inside C keeps its supremum inside C.
inline bool si_closed_check(const FiniteSpace& s, PointSet c,
                            IrrAlgo algo = IrrAlgo::definitional) {
    if (!s.is_closed(c)) throw NotClosedError("si_closed_check requires a closed set");
    for (const auto& [e, g] : irr_plus(s, algo))
        if (e.subset_of(c) && !c.contains(g)) return false;
    return true;
}

/// {y | x lies in the SI-interior of the up-set of y}.
inline PointSet s_set(const FiniteSpace& s, unsigned x,
                      IrrAlgo algo = IrrAlgo::definitional) {
    FiniteSpace d = si_derivative(s, algo);
    PointSet out;
    for (unsigned y = 0; y < s.n; ++y)
        if (interior(d, s.up_set(y)).contains(x)) out = out.with(y);
    return out;
}

} // namespace irrtop

#endif
