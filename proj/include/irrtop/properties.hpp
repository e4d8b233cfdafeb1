#ifndef IRRTOP_PROPERTIES_HPP
#define IRRTOP_PROPERTIES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "irrtop/si_derivative.hpp"

namespace irrtop {

/// A counterwitness for a failed property flag: a point, a subset, or (for
/// symbolically presented spaces) a described set.
struct Witness {
    std::optional<std::string> point;
    std::optional<std::vector<std::string>> set;
    std::string desc;
};

/// The truth flags of one space, with a witness per failed flag.
/// si_continuous and irr_plus_continuous are definitional conjunctions:
/// si_minus_continuous && oplus, and irr_continuous && oplus.
struct PropertyReport {
    bool sober = false;
    bool bounded_sober = false;
    bool sup_sober = false;
    bool irr_continuous = false;
    bool si_minus_continuous = false;
    bool si_continuous = false;
    bool irr_plus_continuous = false;
    bool oplus = false;
    bool star = false;
    bool c_space = false;
    bool si_infty = false;
    std::map<std::string, Witness> witnesses;
};

inline const std::vector<std::string>& property_flag_names() {
    static const std::vector<std::string> names = {
        "sober",         "bounded_sober",      "sup_sober",
        "irr_continuous", "si_minus_continuous", "si_continuous",
        "irr_plus_continuous", "oplus",         "star",
        "c_space",       "si_infty"};
    return names;
}

inline bool property_flag(const PropertyReport& r, const std::string& name) {
    if (name == "sober") return r.sober;
    if (name == "bounded_sober") return r.bounded_sober;
    if (name == "sup_sober") return r.sup_sober;
    if (name == "irr_continuous") return r.irr_continuous;
    if (name == "si_minus_continuous") return r.si_minus_continuous;
    if (name == "si_continuous") return r.si_continuous;
    if (name == "irr_plus_continuous") return r.irr_plus_continuous;
    if (name == "oplus") return r.oplus;
    if (name == "star") return r.star;
    if (name == "c_space") return r.c_space;
    if (name == "si_infty") return r.si_infty;
    throw BadQueryError("unknown property flag: " + name);
}

namespace detail {

inline std::vector<std::string> labels_of(const FiniteSpace& s, PointSet a) {
    std::vector<std::string> out;
    for (unsigned i : a.members(s.n)) out.push_back(s.names[i]);
    return out;
}

inline Witness point_witness(const FiniteSpace& s, unsigned x, std::string desc = {}) {
    Witness w;
    w.point = s.names[x];
    w.desc = std::move(desc);
    return w;
}

inline Witness set_witness(const FiniteSpace& s, PointSet a, std::string desc = {}) {
    Witness w;
    w.set = labels_of(s, a);
    w.desc = std::move(desc);
    return w;
}

inline bool directed_in(const FiniteSpace& s, PointSet d) {
    for (unsigned i = 0; i < s.n; ++i) {
        if (!d.contains(i)) continue;
        for (unsigned j = i; j < s.n; ++j) {
            if (!d.contains(j)) continue;
            if (!(s.up_set(i) & s.up_set(j)).intersects(d)) return false;
        }
    }
    return true;
}

/// Some nonempty directed subset of `within` has supremum exactly `target`.
inline bool has_directed_with_sup(const FiniteSpace& s, PointSet within, unsigned target) {
    for (std::uint32_t m = 1; m < (1u << s.n); ++m) {
        PointSet d{m};
        if (!d.subset_of(within)) continue;
        if (!directed_in(s, d)) continue;
        auto g = sup(s, d);
        if (g && *g == target) return true;
    }
    return false;
}

} // namespace detail

/// Computes every property flag by direct definitional scan and records the
/// first counterwitness (in ascending mask / point-index order) per failed
/// flag.
inline PropertyReport check_properties(const FiniteSpace& s,
                                       IrrAlgo algo = IrrAlgo::definitional) {
    PropertyReport r;
    const auto ip = irr_plus(s, algo);

    // Sobriety family: scan closed irreducible sets, restricted per flavor.
    auto is_point_closure = [&](PointSet c) {
        unsigned hits = 0;
        for (unsigned x = 0; x < s.n; ++x)
            if (s.down_set(x) == c) ++hits;
        return hits == 1;
    };
    r.sober = r.bounded_sober = r.sup_sober = true;
    for (std::uint32_t m = 1; m < (1u << s.n); ++m) {
        PointSet c{m};
        if (!s.is_closed(c) || !is_irreducible(s, c, algo)) continue;
        if (is_point_closure(c)) continue;
        if (r.sober) {
            r.sober = false;
            r.witnesses["sober"] = detail::set_witness(s, c, "irreducible closed, not a point closure");
        }
        if (r.bounded_sober && !specialization(s).upper_bounds(c).empty()) {
            r.bounded_sober = false;
            r.witnesses["bounded_sober"] =
                detail::set_witness(s, c, "bounded irreducible closed, not a point closure");
        }
        if (r.sup_sober && sup(s, c).has_value()) {
            r.sup_sober = false;
            r.witnesses["sup_sober"] =
                detail::set_witness(s, c, "irreducible closed with supremum, not a point closure");
        }
    }

    // Continuity family over the way-below sets.
    r.irr_continuous = true;
    r.si_minus_continuous = true;
    r.oplus = true;
    for (unsigned x = 0; x < s.n; ++x) {
        PointSet dd = detail::dd_arrow_from(s, ip, x);
        bool irr_ok = !dd.empty() && is_irreducible(s, dd, algo);
        auto g = sup(s, dd);
        irr_ok = irr_ok && g && *g == x;
        if (!irr_ok && r.irr_continuous) {
            r.irr_continuous = false;
            r.witnesses["irr_continuous"] =
                detail::point_witness(s, x, "way-below set is not irreducible with supremum x");
        }
        if (r.si_minus_continuous && !detail::has_directed_with_sup(s, dd, x)) {
            r.si_minus_continuous = false;
            r.witnesses["si_minus_continuous"] =
                detail::point_witness(s, x, "way-below set contains no directed set with supremum x");
        }
        PointSet uu;
        for (unsigned y = 0; y < s.n; ++y) {
            bool wb = true;
            for (const auto& [e, g2] : ip)
                if (s.leq(y, g2) && !e.intersects(s.up_set(x))) { wb = false; break; }
            if (wb) uu = uu.with(y);
        }
        if (r.oplus && !s.is_open(uu)) {
            r.oplus = false;
            r.witnesses["oplus"] = detail::point_witness(s, x, "its set of way-above points is not open");
        }
    }

    // *-property: each E in Irr+ admits a directed set in its down-closure
    // with the same supremum.
    r.star = true;
    for (const auto& [e, g] : ip) {
        PointSet down;
        for (unsigned x = 0; x < s.n; ++x)
            if (e.contains(x)) down = down | s.down_set(x);
        if (!detail::has_directed_with_sup(s, down, g)) {
            r.star = false;
            r.witnesses["star"] =
                detail::set_witness(s, e, "no directed set in its down-closure shares its supremum");
            break;
        }
    }

    // C-space: every point of every open has a way-inside witness.
    r.c_space = true;
    for (PointSet u : s.opens) {
        if (!r.c_space) break;
        for (unsigned x = 0; x < s.n && r.c_space; ++x) {
            if (!u.contains(x)) continue;
            bool found = false;
            for (unsigned y = 0; y < s.n && !found; ++y)
                if (u.contains(y) && interior(s, s.up_set(y)).contains(x)) found = true;
            if (!found) {
                r.c_space = false;
                r.witnesses["c_space"] = detail::point_witness(
                    s, x, "no y in the open {" + [&] {
                        std::string t;
                        for (unsigned i : u.members(s.n)) t += (t.empty() ? "" : ",") + s.names[i];
                        return t;
                    }() + "} puts x inside int(up(y))");
            }
        }
    }

    // SI-infinity: the topology equals its own derivative.
    FiniteSpace d = si_derivative(s, algo);
    r.si_infty = d.opens == s.opens;
    if (!r.si_infty) {
        for (PointSet u : s.opens)
            if (!std::binary_search(d.opens.begin(), d.opens.end(), u)) {
                r.witnesses["si_infty"] = detail::set_witness(s, u, "open but not SI-open");
                break;
            }
    }

    r.si_continuous = r.si_minus_continuous && r.oplus;
    if (!r.si_continuous) {
        Witness w;
        w.desc = !r.si_minus_continuous ? "not SI-minus-continuous" : "fails the oplus property";
        r.witnesses["si_continuous"] = w;
    }
    r.irr_plus_continuous = r.irr_continuous && r.oplus;
    if (!r.irr_plus_continuous) {
        Witness w;
        w.desc = !r.irr_continuous ? "not Irr-continuous" : "fails the oplus property";
        r.witnesses["irr_plus_continuous"] = w;
    }
    return r;
}

} // namespace irrtop

#endif
