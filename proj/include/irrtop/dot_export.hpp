#ifndef IRRTOP_DOT_EXPORT_HPP
#define IRRTOP_DOT_EXPORT_HPP

#include <sstream>
#include <string>

#include "irrtop/catalog.hpp"
#include "irrtop/irr_engine.hpp"

namespace irrtop {

namespace detail {

inline std::string dot_quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out + "\"";
}

} // namespace detail

/// Renders the specialization order (solid, Hasse-reduced) and the
/// Irr-way-below relation (dashed) of a finite space.
inline std::string to_dot(const FiniteSpace& s, IrrAlgo algo = IrrAlgo::definitional) {
    Poset p = specialization(s);
    const auto ip = irr_plus(s, algo);
    std::ostringstream os;
    os << "digraph space {\n  rankdir=BT;\n  node [shape=circle];\n";
    for (unsigned i = 0; i < s.n; ++i) os << "  " << detail::dot_quote(s.names[i]) << ";\n";
    for (unsigned i = 0; i < s.n; ++i)
        for (unsigned j = 0; j < s.n; ++j) {
            if (i == j || !p.le(i, j)) continue;
            bool cover = true;
            for (unsigned k = 0; k < s.n && cover; ++k)
                if (k != i && k != j && p.le(i, k) && p.le(k, j)) cover = false;
            if (cover)
                os << "  " << detail::dot_quote(s.names[i]) << " -> "
                   << detail::dot_quote(s.names[j]) << ";\n";
        }
    for (unsigned x = 0; x < s.n; ++x) {
        PointSet dd = detail::dd_arrow_from(s, ip, x);
        for (unsigned y : dd.members(s.n))
            if (y != x)
                os << "  " << detail::dot_quote(s.names[y]) << " -> "
                   << detail::dot_quote(s.names[x]) << " [style=dashed, constraint=false];\n";
    }
    os << "}\n";
    return os.str();
}

/// A truncated rendering of a catalog space: the first `fuel` carrier points
/// with order (solid, Hasse-reduced within the truncation) and way-below
/// (dashed) edges.
inline std::string to_dot(const CatalogSpace& sp, int fuel = 8) {
    const auto pts = sp.truncation(fuel);
    std::ostringstream os;
    os << "digraph " << sp.cli_name() << " {\n"
       << "  // truncated to " << pts.size() << " points\n"
       << "  rankdir=BT;\n  node [shape=circle];\n";
    for (const auto& p : pts) os << "  " << detail::dot_quote(sp.point_label(p)) << ";\n";
    for (size_t i = 0; i < pts.size(); ++i)
        for (size_t j = 0; j < pts.size(); ++j) {
            if (i == j || !sp.leq(pts[i], pts[j]) || sp.leq(pts[j], pts[i])) continue;
            bool cover = true;
            for (size_t k = 0; k < pts.size() && cover; ++k)
                if (k != i && k != j && sp.leq(pts[i], pts[k]) && sp.leq(pts[k], pts[j]) &&
                    !sp.leq(pts[k], pts[i]) && !sp.leq(pts[j], pts[k]))
                    cover = false;
            if (cover)
                os << "  " << detail::dot_quote(sp.point_label(pts[i])) << " -> "
                   << detail::dot_quote(sp.point_label(pts[j])) << ";\n";
        }
    for (const auto& x : pts)
        for (const auto& y : pts)
            if (!(x == y) && sp.way_below(y, x))
                os << "  " << detail::dot_quote(sp.point_label(y)) << " -> "
                   << detail::dot_quote(sp.point_label(x)) << " [style=dashed, constraint=false];\n";
    os << "}\n";
    return os.str();
}

} // namespace irrtop

#endif
