#ifndef IRRTOP_CATALOG_HPP
#define IRRTOP_CATALOG_HPP

#include <algorithm>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "irrtop/convergence.hpp"

namespace irrtop {

// ---------------------------------------------------------------------------
// Exact rationals, small enough for the desk-scale grids used here.
// ---------------------------------------------------------------------------

struct Rational {
    long long num = 0;
    long long den = 1; // > 0, reduced

    static Rational of(long long n, long long d) {
        if (d == 0) throw Error("rational with zero denominator");
        if (d < 0) { n = -n; d = -d; }
        long long g = std::gcd(n < 0 ? -n : n, d);
        if (g == 0) g = 1;
        return Rational{n / g, d / g};
    }
    friend bool operator==(Rational a, Rational b) { return a.num == b.num && a.den == b.den; }
    friend bool operator!=(Rational a, Rational b) { return !(a == b); }
    friend bool operator<(Rational a, Rational b) { return a.num * b.den < b.num * a.den; }
    friend bool operator<=(Rational a, Rational b) { return a.num * b.den <= b.num * a.den; }

    Rational minus_unit_fraction(long long m) const { // q - 1/m
        return Rational::of(num * m - den, den * m);
    }
    static Rational midpoint(Rational a, Rational b) {
        return Rational::of(a.num * b.den + b.num * a.den, 2 * a.den * b.den);
    }
    std::string str() const {
        if (den == 1) return std::to_string(num);
        return std::to_string(num) + "/" + std::to_string(den);
    }
};

// ---------------------------------------------------------------------------
// Points of the catalog spaces.
// ---------------------------------------------------------------------------

struct CatalogPoint {
    enum class Tag { nat, infinity, bottom, letter_a, top, rational };
    Tag tag = Tag::nat;
    long long n = 0; // nat payload
    Rational q;      // rational payload

    static CatalogPoint make_nat(long long k) { return {Tag::nat, k, {}}; }
    static CatalogPoint make_inf() { return {Tag::infinity, 0, {}}; }
    static CatalogPoint make_bot() { return {Tag::bottom, 0, {}}; }
    static CatalogPoint make_a() { return {Tag::letter_a, 0, {}}; }
    static CatalogPoint make_top() { return {Tag::top, 0, {}}; }
    static CatalogPoint make_rat(Rational r) { return {Tag::rational, 0, r}; }

    friend bool operator==(const CatalogPoint& a, const CatalogPoint& b) {
        return a.tag == b.tag && a.n == b.n && a.q == b.q;
    }
};

// ---------------------------------------------------------------------------
// Symbolic opens: each open set of a catalog space is described by a finite
// payload, canonical per family.
// ---------------------------------------------------------------------------

struct SymbolicOpen {
    enum class Kind {
        empty,
        full,
        cofinite,        // N minus a finite sorted set
        up_ray,          // [k, inf] inside omega+1
        top_singleton,   // {inf} inside omega+1
        upset_t,         // {top} plus optional a plus optional chain tail
        rational_right_ray, // (q, inf) within Q
    };
    Kind kind = Kind::empty;
    std::vector<long long> excluded; // cofinite
    long long ray_start = 0;         // up_ray
    bool has_a = false;              // upset_t
    long long tail_start = 0;        // upset_t: 0 = no chain part, k >= 1 = {k, k+1, ...}
    Rational q;                      // rational_right_ray

    static SymbolicOpen make_empty() { return {}; }
    static SymbolicOpen make_full() { SymbolicOpen o; o.kind = Kind::full; return o; }
    static SymbolicOpen make_cofinite(std::vector<long long> ex) {
        SymbolicOpen o;
        o.kind = Kind::cofinite;
        std::sort(ex.begin(), ex.end());
        ex.erase(std::unique(ex.begin(), ex.end()), ex.end());
        o.excluded = std::move(ex);
        return o;
    }
    static SymbolicOpen make_up_ray(long long k) {
        SymbolicOpen o; o.kind = Kind::up_ray; o.ray_start = k; return o;
    }
    static SymbolicOpen make_top_singleton() {
        SymbolicOpen o; o.kind = Kind::top_singleton; return o;
    }
    static SymbolicOpen make_upset_t(bool a, long long tail) {
        SymbolicOpen o; o.kind = Kind::upset_t; o.has_a = a; o.tail_start = tail; return o;
    }
    static SymbolicOpen make_rational_ray(Rational r) {
        SymbolicOpen o; o.kind = Kind::rational_right_ray; o.q = r; return o;
    }

    friend bool operator==(const SymbolicOpen& a, const SymbolicOpen& b) {
        return a.kind == b.kind && a.excluded == b.excluded && a.ray_start == b.ray_start &&
               a.has_a == b.has_a && a.tail_start == b.tail_start && a.q == b.q;
    }
};

// ---------------------------------------------------------------------------
// Witness classes of irreducible sets.  Every decision about an infinite
// space quantifying over Irr+ is made against these classes; the per-family
// completeness arguments are documented at each space below and validated by
// fuel-bounded probing.
// ---------------------------------------------------------------------------

struct IrrClassDesc {
    enum class Kind {
        finite,     // explicit members
        nat_tail,   // {start, start+1, ...} in omega (cofinite-nat or omega+1)
        chain_tail, // {start, start+1, ...} in the chain of T, optionally with bottom
        t_no_top,   // {bot} and the whole chain of T
        rat_ray,    // (-inf, q) within Q
        rat_seq,    // {q - 1/m : m >= 1}
    };
    Kind kind = Kind::finite;
    std::vector<CatalogPoint> elems;
    long long start = 0;
    bool with_bottom = false;
    Rational q;
};

// ---------------------------------------------------------------------------
// Nets over catalog spaces: a finite prefix plus one of three tail rules.
// Anything outside this stock raises UndecidableTail rather than guessing.
// ---------------------------------------------------------------------------

enum class TailKind { constant, periodic, monotone };
enum class MonotoneGen { nat, one_minus_one_over_n };

struct CatalogNetSpec {
    std::vector<CatalogPoint> prefix;
    TailKind kind = TailKind::constant;
    std::vector<CatalogPoint> values;              // constant: exactly one; periodic: >= 1
    MonotoneGen gen = MonotoneGen::nat;            // monotone only
    std::optional<CatalogPoint> declared_limit;    // monotone only

    static CatalogNetSpec constant(CatalogPoint v, std::vector<CatalogPoint> prefix = {}) {
        CatalogNetSpec n;
        n.prefix = std::move(prefix);
        n.kind = TailKind::constant;
        n.values = {std::move(v)};
        return n;
    }
    static CatalogNetSpec periodic(std::vector<CatalogPoint> vs) {
        CatalogNetSpec n;
        n.kind = TailKind::periodic;
        n.values = std::move(vs);
        return n;
    }
    static CatalogNetSpec monotone(MonotoneGen g, std::optional<CatalogPoint> limit = {}) {
        CatalogNetSpec n;
        n.kind = TailKind::monotone;
        n.gen = g;
        n.declared_limit = std::move(limit);
        return n;
    }
};

struct CatalogTrace {
    std::string space;
    std::vector<std::string> stages;
    std::optional<unsigned> gamma;
    bool fixpoint_reached = false;
    std::string note;
};

struct ValidationReport {
    std::string space;
    unsigned checks_run = 0;
    std::vector<std::string> notes;
    std::vector<std::string> mismatches;
};

// ---------------------------------------------------------------------------
// The space interface.
// ---------------------------------------------------------------------------

class CatalogSpace {
public:
    virtual ~CatalogSpace() = default;

    virtual std::string cli_name() const = 0;

    virtual std::optional<CatalogPoint> parse_point(const std::string& text) const = 0;
    virtual std::string point_label(const CatalogPoint& p) const = 0;
    virtual bool valid_point(const CatalogPoint& p) const = 0;
    virtual bool leq(const CatalogPoint& a, const CatalogPoint& b) const = 0;
    virtual std::vector<CatalogPoint> truncation(int fuel) const = 0;

    virtual std::vector<SymbolicOpen> opens_sample(int fuel) const = 0;
    virtual bool mem(const CatalogPoint& p, const SymbolicOpen& u) const = 0;
    virtual std::string open_label(const SymbolicOpen& u) const = 0;

    // Frozen oracles: exact hand-derived decisions, validated by probing,
    // never recomputed at call time.
    virtual bool way_below(const CatalogPoint& x, const CatalogPoint& y) const = 0;
    virtual PropertyReport properties() const = 0;
    virtual bool si_open(const SymbolicOpen& u) const = 0;
    virtual CatalogTrace si_iterate(unsigned fuel) const = 0;

    // Witness classes.
    virtual std::vector<IrrClassDesc> irr_witnesses(int fuel) const = 0;
    virtual bool class_is_irreducible(const IrrClassDesc& c) const = 0;
    virtual std::optional<CatalogPoint> class_sup(const IrrClassDesc& c) const = 0;
    virtual bool class_meets_open(const IrrClassDesc& c, const SymbolicOpen& u) const = 0;
    virtual bool class_meets_up(const IrrClassDesc& c, const CatalogPoint& x) const = 0;
    virtual bool class_is_closed(const IrrClassDesc& c) const = 0;
    virtual std::vector<CatalogPoint> class_member_sample(const IrrClassDesc& c, int fuel) const = 0;
    /// Exact decision: every member of the class is an eventual lower bound
    /// of the net.
    virtual bool class_all_eventual_lb(const IrrClassDesc& c, const CatalogNetSpec& net) const = 0;
    /// The way-below set of y as a witness class, when the family describes
    /// it exactly.
    virtual std::optional<IrrClassDesc> dd_class(const CatalogPoint& y) const = 0;
    virtual std::string class_label(const IrrClassDesc& c) const;

    // Nets.  The three tail rules are the whole stock; validate_net throws
    // UndecidableTail for unsupported combinations.
    virtual void validate_net(const CatalogNetSpec& net) const;
    virtual bool eventually_in(const CatalogNetSpec& net, const SymbolicOpen& u) const;
    virtual bool eventual_lower_bound(const CatalogNetSpec& net, const CatalogPoint& e) const;
    virtual bool topological_converges(const CatalogNetSpec& net, const CatalogPoint& y) const;
    virtual bool irr_converges(const CatalogNetSpec& net, const CatalogPoint& y) const;

    /// Greatest lower bound of two points, absent when there is none.
    virtual std::optional<CatalogPoint> glb(const CatalogPoint& a, const CatalogPoint& b) const = 0;

    // Family-specific monotone-tail hooks backing the generic net methods.
    virtual bool monotone_supported() const = 0;
    virtual bool monotone_eventually_in(const SymbolicOpen& u) const = 0;
    virtual bool monotone_eventual_lb(const CatalogPoint& e) const = 0;
    virtual bool monotone_topological(const CatalogPoint& y) const = 0;
    virtual bool monotone_irr(const CatalogPoint& y) const = 0;
    virtual MonotoneGen monotone_gen() const = 0;
    virtual std::optional<CatalogPoint> monotone_limit() const = 0;

    virtual void validate_extra(int fuel, ValidationReport& rep) const = 0;
};

// --- shared net machinery ---------------------------------------------------

inline void CatalogSpace::validate_net(const CatalogNetSpec& net) const {
    for (const auto& p : net.prefix)
        if (!valid_point(p)) throw Error("net prefix point escapes the carrier");
    switch (net.kind) {
    case TailKind::constant:
        if (net.values.size() != 1) throw Error("constant tail takes exactly one value");
        [[fallthrough]];
    case TailKind::periodic:
        if (net.values.empty()) throw Error("periodic tail needs at least one value");
        for (const auto& p : net.values)
            if (!valid_point(p)) throw Error("net value escapes the carrier");
        return;
    case TailKind::monotone: {
        if (!monotone_supported() || net.gen != monotone_gen())
            throw UndecidableTailError("the " + cli_name() +
                                       " space has no decision rules for this generator");
        auto implied = monotone_limit();
        if (net.declared_limit) {
            if (!implied || !(*net.declared_limit == *implied))
                throw UndecidableTailError("declared limit disagrees with the generator on " +
                                           cli_name());
        }
        return;
    }
    }
}

inline bool CatalogSpace::eventually_in(const CatalogNetSpec& net, const SymbolicOpen& u) const {
    validate_net(net);
    if (net.kind == TailKind::monotone) return monotone_eventually_in(u);
    for (const auto& v : net.values)
        if (!mem(v, u)) return false;
    return true;
}

inline bool CatalogSpace::eventual_lower_bound(const CatalogNetSpec& net,
                                               const CatalogPoint& e) const {
    validate_net(net);
    if (net.kind == TailKind::monotone) return monotone_eventual_lb(e);
    for (const auto& v : net.values)
        if (!leq(e, v)) return false;
    return true;
}

inline bool CatalogSpace::topological_converges(const CatalogNetSpec& net,
                                                const CatalogPoint& y) const {
    validate_net(net);
    if (net.kind == TailKind::monotone) return monotone_topological(y);
    // Eventually inside every open around y: on these families this reduces
    // to y lying below every cofinally recurring value.
    for (const auto& v : net.values)
        if (!leq(y, v)) return false;
    return true;
}

inline bool CatalogSpace::irr_converges(const CatalogNetSpec& net, const CatalogPoint& y) const {
    validate_net(net);
    if (net.kind == TailKind::monotone) return monotone_irr(y);
    // The eventual lower bounds form the down-set of the glb of the
    // recurring values; the best supremum available below them is the glb.
    std::optional<CatalogPoint> g = net.values[0];
    for (size_t i = 1; i < net.values.size() && g; ++i) g = glb(*g, net.values[i]);
    return g && leq(y, *g);
}

namespace detail {

/// Shared exact decision for finite witness classes.
inline bool finite_class_all_eventual_lb(const CatalogSpace& sp, const IrrClassDesc& c,
                                         const CatalogNetSpec& net) {
    for (const auto& e : c.elems)
        if (!sp.eventual_lower_bound(net, e)) return false;
    return true;
}

} // namespace detail

inline std::string CatalogSpace::class_label(const IrrClassDesc& c) const {
    std::ostringstream os;
    switch (c.kind) {
    case IrrClassDesc::Kind::finite: {
        os << "{";
        for (size_t i = 0; i < c.elems.size(); ++i)
            os << (i ? "," : "") << point_label(c.elems[i]);
        os << "}";
        break;
    }
    case IrrClassDesc::Kind::nat_tail: os << "{" << c.start << "," << c.start + 1 << ",...}"; break;
    case IrrClassDesc::Kind::chain_tail:
        os << (c.with_bottom ? "{bot} + " : "") << "{" << c.start << "," << c.start + 1 << ",...}";
        break;
    case IrrClassDesc::Kind::t_no_top: os << "{bot,1,2,...}"; break;
    case IrrClassDesc::Kind::rat_ray: os << "(-inf," << c.q.str() << ")"; break;
    case IrrClassDesc::Kind::rat_seq: os << "{" << c.q.str() << " - 1/m : m>=1}"; break;
    }
    return os.str();
}

namespace detail {

inline Witness desc_witness(std::string d) {
    Witness w;
    w.desc = std::move(d);
    return w;
}
inline Witness point_desc_witness(std::string point, std::string d) {
    Witness w;
    w.point = std::move(point);
    w.desc = std::move(d);
    return w;
}

/// All nonempty subsets of `pts` when that is small, otherwise the subsets
/// of size at most three.
inline std::vector<std::vector<CatalogPoint>> finite_subsets(const std::vector<CatalogPoint>& pts) {
    std::vector<std::vector<CatalogPoint>> out;
    const size_t n = pts.size();
    if (n <= 9) {
        for (std::uint32_t m = 1; m < (1u << n); ++m) {
            std::vector<CatalogPoint> s;
            for (size_t i = 0; i < n; ++i)
                if ((m >> i) & 1u) s.push_back(pts[i]);
            out.push_back(std::move(s));
        }
        return out;
    }
    for (size_t i = 0; i < n; ++i) {
        out.push_back({pts[i]});
        for (size_t j = i + 1; j < n; ++j) {
            out.push_back({pts[i], pts[j]});
            for (size_t k = j + 1; k < n; ++k) out.push_back({pts[i], pts[j], pts[k]});
        }
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------------------
// Shared probing driver.  Cross-checks every frozen oracle answer against
// definitional scans over the witness classes and sampled opens; collects
// mismatches (build-stopping) and rediscovered killer sets (notes).
// ---------------------------------------------------------------------------

namespace detail {

inline void probe_catalog_common(const CatalogSpace& sp, int fuel, ValidationReport& rep) {
    const auto trunc = sp.truncation(fuel);
    const auto opens = sp.opens_sample(fuel);
    const auto classes = sp.irr_witnesses(fuel);

    // Opens are upper sets of the specialization order.
    for (const auto& u : opens)
        for (const auto& x : trunc)
            for (const auto& y : trunc) {
                ++rep.checks_run;
                if (sp.mem(x, u) && sp.leq(x, y) && !sp.mem(y, u))
                    rep.mismatches.push_back("open " + sp.open_label(u) + " is not an upper set at " +
                                             sp.point_label(x) + " <= " + sp.point_label(y));
            }

    // Frozen irreducibility of the finite classes versus the definitional
    // open-pair scan.  The scan can only refute irreducibility; the per-class
    // search below is exhaustive for these families because a separating pair
    // can always be chosen from the sampled opens when one exists at all.
    for (const auto& c : classes) {
        if (c.kind != IrrClassDesc::Kind::finite) continue;
        bool refuted = false;
        std::string pair_label;
        for (size_t i = 0; i < opens.size() && !refuted; ++i) {
            if (!sp.class_meets_open(c, opens[i])) continue;
            for (size_t j = 0; j < opens.size() && !refuted; ++j) {
                if (i == j || !sp.class_meets_open(c, opens[j])) continue;
                // E meets U1 and U2; irreducibility demands it meets the
                // intersection, checked memberwise on the finite class.
                bool meets_both = false;
                for (const auto& e : c.elems)
                    if (sp.mem(e, opens[i]) && sp.mem(e, opens[j])) { meets_both = true; break; }
                if (!meets_both) {
                    refuted = true;
                    pair_label = sp.open_label(opens[i]) + " / " + sp.open_label(opens[j]);
                }
            }
        }
        ++rep.checks_run;
        const bool frozen = sp.class_is_irreducible(c);
        if (frozen && refuted)
            rep.mismatches.push_back("class " + sp.class_label(c) +
                                     " frozen irreducible but separated by " + pair_label);
        if (!frozen && !refuted)
            rep.mismatches.push_back("class " + sp.class_label(c) +
                                     " frozen non-irreducible but no separating open pair found");
        if (!frozen && refuted && c.elems.size() >= 2)
            rep.notes.push_back("non-irreducibility of " + sp.class_label(c) + " rediscovered via " +
                                pair_label);
    }

    // Frozen suprema of the finite classes: an upper bound, and least among
    // truncation candidates.
    for (const auto& c : classes) {
        if (c.kind != IrrClassDesc::Kind::finite) continue;
        ++rep.checks_run;
        auto g = sp.class_sup(c);
        if (g) {
            for (const auto& e : c.elems)
                if (!sp.leq(e, *g))
                    rep.mismatches.push_back("sup of " + sp.class_label(c) + " is not an upper bound");
            for (const auto& u : trunc) {
                bool ub = true;
                for (const auto& e : c.elems)
                    if (!sp.leq(e, u)) { ub = false; break; }
                if (ub && !sp.leq(*g, u))
                    rep.mismatches.push_back("sup of " + sp.class_label(c) +
                                             " is not least among truncation bounds");
            }
        } else {
            for (const auto& u : trunc) {
                bool ub = true;
                for (const auto& e : c.elems)
                    if (!sp.leq(e, u)) { ub = false; break; }
                // With no supremum there may still be upper bounds, but not a
                // least one; for these families the frozen "absent" answers
                // all mean "no upper bound at all", which is probeable.
                if (ub)
                    rep.mismatches.push_back("class " + sp.class_label(c) +
                                             " frozen without sup but bounded by " + sp.point_label(u));
            }
        }
    }

    // The infinite classes: their frozen suprema dominate sampled members.
    for (const auto& c : classes) {
        if (c.kind == IrrClassDesc::Kind::finite) continue;
        ++rep.checks_run;
        auto g = sp.class_sup(c);
        if (!g) continue;
        for (const auto& m : sp.class_member_sample(c, fuel))
            if (!sp.leq(m, *g))
                rep.mismatches.push_back("sup of " + sp.class_label(c) +
                                         " fails to dominate sampled member " + sp.point_label(m));
    }

    // The frozen way-below table versus the definitional scan over classes.
    for (const auto& x : trunc)
        for (const auto& y : trunc) {
            ++rep.checks_run;
            const bool frozen = sp.way_below(x, y);
            std::string killer;
            for (const auto& c : classes) {
                if (!sp.class_is_irreducible(c)) continue;
                auto g = sp.class_sup(c);
                if (!g || !sp.leq(y, *g)) continue;
                if (!sp.class_meets_up(c, x)) { killer = sp.class_label(c); break; }
            }
            if (frozen && !killer.empty())
                rep.mismatches.push_back("way-below " + sp.point_label(x) + " << " +
                                         sp.point_label(y) + " frozen true but killed by " + killer);
            if (!frozen && killer.empty())
                rep.mismatches.push_back("way-below " + sp.point_label(x) + " << " +
                                         sp.point_label(y) + " frozen false but no killer class found");
        }

    // The registered way-below-set classes versus the frozen table: sampled
    // members must be way-below, and on Irr-continuous families the class
    // must be irreducible with supremum exactly y.
    const PropertyReport props = sp.properties();
    for (const auto& y : trunc) {
        auto dd = sp.dd_class(y);
        if (!dd) continue;
        ++rep.checks_run;
        for (const auto& m : sp.class_member_sample(*dd, fuel))
            if (!sp.way_below(m, y))
                rep.mismatches.push_back("member " + sp.point_label(m) +
                                         " of the way-below class of " + sp.point_label(y) +
                                         " is not way-below it");
        if (props.irr_continuous) {
            auto g = sp.class_sup(*dd);
            if (!sp.class_is_irreducible(*dd) || !g || !(sp.leq(*g, y) && sp.leq(y, *g)))
                rep.mismatches.push_back("way-below class of " + sp.point_label(y) +
                                         " is not irreducible with supremum y");
        }
    }

    // Frozen SI-openness of each sampled open versus the class scan.
    for (const auto& u : opens) {
        ++rep.checks_run;
        const bool frozen = sp.si_open(u);
        std::string killer;
        for (const auto& c : classes) {
            if (!sp.class_is_irreducible(c)) continue;
            auto g = sp.class_sup(c);
            if (!g || !sp.mem(*g, u)) continue;
            if (!sp.class_meets_open(c, u)) { killer = sp.class_label(c); break; }
        }
        if (frozen && !killer.empty())
            rep.mismatches.push_back("open " + sp.open_label(u) +
                                     " frozen SI-open but killed by class " + killer);
        if (!frozen && killer.empty())
            rep.mismatches.push_back("open " + sp.open_label(u) +
                                     " frozen non-SI-open but no witness class kills it");
        if (!frozen && !killer.empty())
            rep.notes.push_back("open " + sp.open_label(u) + " confirmed non-SI-open via " + killer);
    }

    // Net verdicts: the family closed forms against the eventual tests, on a
    // deterministic stock of nets.
    std::vector<CatalogNetSpec> stock;
    for (const auto& v : trunc) stock.push_back(CatalogNetSpec::constant(v));
    if (trunc.size() >= 2) {
        stock.push_back(CatalogNetSpec::periodic({trunc[0], trunc[1]}));
        stock.push_back(CatalogNetSpec::periodic({trunc[trunc.size() - 1], trunc[0]}));
    }
    if (sp.monotone_supported()) stock.push_back(CatalogNetSpec::monotone(sp.monotone_gen()));
    for (const auto& net : stock)
        for (const auto& y : trunc) {
            ++rep.checks_run;
            // Topological: eventual membership in every sampled open around y.
            // The sampled family is rich enough per family to refute every
            // frozen negative, so the comparison runs both ways.
            bool closed_form = sp.topological_converges(net, y);
            bool sampled = true;
            for (const auto& u : opens)
                if (sp.mem(y, u) && !sp.eventually_in(net, u)) { sampled = false; break; }
            if (closed_form != sampled)
                rep.mismatches.push_back("topological convergence closed form disagrees with the "
                                         "sampled opens at " + sp.point_label(y));
            // Irr-convergence: a witness class of eventual lower bounds with
            // supremum above y certifies it; absence among the classes
            // refutes it.
            bool irr_cf = sp.irr_converges(net, y);
            bool by_classes = false;
            for (const auto& c : classes) {
                if (!sp.class_is_irreducible(c)) continue;
                auto g = sp.class_sup(c);
                if (!g || !sp.leq(y, *g)) continue;
                if (sp.class_all_eventual_lb(c, net)) { by_classes = true; break; }
            }
            if (irr_cf != by_classes)
                rep.mismatches.push_back("Irr-convergence closed form disagrees with the witness "
                                         "classes at " + sp.point_label(y));
        }
}

} // namespace detail

// ---------------------------------------------------------------------------
// The four spaces.
// ---------------------------------------------------------------------------

namespace catalog_detail {

inline std::optional<long long> parse_nat(const std::string& s) {
    if (s.empty()) return std::nullopt;
    long long v = 0;
    for (char ch : s) {
        if (ch < '0' || ch > '9') return std::nullopt;
        v = v * 10 + (ch - '0');
        if (v > 1'000'000'000) return std::nullopt;
    }
    return v;
}

inline std::optional<Rational> parse_rational(const std::string& s) {
    if (s.empty()) return std::nullopt;
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size()) return std::nullopt;
            return Rational::of(v, 1);
        }
        size_t u1 = 0, u2 = 0;
        long long num = std::stoll(s.substr(0, slash), &u1);
        long long den = std::stoll(s.substr(slash + 1), &u2);
        if (u1 != slash || u2 != s.size() - slash - 1 || den == 0) return std::nullopt;
        return Rational::of(num, den);
    } catch (...) {
        return std::nullopt;
    }
}

} // namespace catalog_detail

/// The naturals with the cofinite topology.  T1, so the specialization order
/// is discrete; the irreducible sets are the singletons and the infinite
/// sets, and only the singletons have suprema.  Completeness of the witness
/// classes: any member of Irr+ is a singleton, so the finite subsets of the
/// truncation already cover every class that can decide a way-below or
/// SI-openness question; infinite irreducible sets never enter Irr+.
class CofiniteNatSpace final : public CatalogSpace {
public:
    std::string cli_name() const override { return "cofinite-nat"; }

    std::optional<CatalogPoint> parse_point(const std::string& t) const override {
        if (auto n = catalog_detail::parse_nat(t)) return CatalogPoint::make_nat(*n);
        return std::nullopt;
    }
    std::string point_label(const CatalogPoint& p) const override { return std::to_string(p.n); }
    bool valid_point(const CatalogPoint& p) const override {
        return p.tag == CatalogPoint::Tag::nat && p.n >= 0;
    }
    bool leq(const CatalogPoint& a, const CatalogPoint& b) const override { return a.n == b.n; }

    std::vector<CatalogPoint> truncation(int fuel) const override {
        std::vector<CatalogPoint> t;
        for (int i = 0; i < fuel; ++i) t.push_back(CatalogPoint::make_nat(i));
        return t;
    }

    std::vector<SymbolicOpen> opens_sample(int fuel) const override {
        std::vector<SymbolicOpen> out{SymbolicOpen::make_empty(), SymbolicOpen::make_full()};
        const int core = std::min(fuel, 8);
        for (std::uint32_t m = 1; m < (1u << core); ++m) {
            std::vector<long long> ex;
            for (int i = 0; i < core; ++i)
                if ((m >> i) & 1u) ex.push_back(i);
            out.push_back(SymbolicOpen::make_cofinite(std::move(ex)));
        }
        return out;
    }
    bool mem(const CatalogPoint& p, const SymbolicOpen& u) const override {
        switch (u.kind) {
        case SymbolicOpen::Kind::empty: return false;
        case SymbolicOpen::Kind::full: return true;
        case SymbolicOpen::Kind::cofinite:
            return !std::binary_search(u.excluded.begin(), u.excluded.end(), p.n);
        default: throw Error("open does not belong to cofinite-nat");
        }
    }
    std::string open_label(const SymbolicOpen& u) const override {
        if (u.kind == SymbolicOpen::Kind::empty) return "{}";
        if (u.kind == SymbolicOpen::Kind::full) return "N";
        std::string s = "N\\{";
        for (size_t i = 0; i < u.excluded.size(); ++i)
            s += (i ? "," : "") + std::to_string(u.excluded[i]);
        return s + "}";
    }

    bool way_below(const CatalogPoint& x, const CatalogPoint& y) const override {
        return x.n == y.n;
    }

    PropertyReport properties() const override {
        PropertyReport r;
        r.sober = false;
        r.bounded_sober = true;
        r.sup_sober = true;
        r.irr_continuous = true;
        r.si_minus_continuous = true;
        r.oplus = false;
        r.star = true;
        r.c_space = false;
        r.si_infty = true;
        r.si_continuous = false;
        r.irr_plus_continuous = false;
        r.witnesses["sober"] = detail::desc_witness(
            "the whole carrier is irreducible and closed but is not the closure of any point");
        r.witnesses["oplus"] = detail::point_desc_witness(
            "0", "the set of points way above 0 is {0}, a nonempty finite set, hence not open");
        r.witnesses["c_space"] = detail::point_desc_witness(
            "0", "up-sets are singletons with empty interior, so no point of the full open has a "
                 "way-inside witness");
        r.witnesses["si_continuous"] = detail::desc_witness("fails the oplus property");
        r.witnesses["irr_plus_continuous"] = detail::desc_witness("fails the oplus property");
        return r;
    }

    bool si_open(const SymbolicOpen&) const override {
        // Irr+ consists of singletons, and a singleton with supremum in an
        // open set meets it; every open is SI-open.
        return true;
    }

    CatalogTrace si_iterate(unsigned fuel) const override {
        if (fuel < 1) throw Error("si_iterate requires fuel >= 1");
        CatalogTrace t;
        t.space = cli_name();
        t.stages = {"cofinite", "cofinite"};
        t.gamma = 0;
        t.fixpoint_reached = true;
        return t;
    }

    std::vector<IrrClassDesc> irr_witnesses(int fuel) const override {
        std::vector<IrrClassDesc> out;
        for (auto& s : detail::finite_subsets(truncation(fuel))) {
            IrrClassDesc c;
            c.kind = IrrClassDesc::Kind::finite;
            c.elems = std::move(s);
            out.push_back(std::move(c));
        }
        IrrClassDesc all;
        all.kind = IrrClassDesc::Kind::nat_tail;
        all.start = 0;
        out.push_back(all); // the carrier itself: irreducible, closed, no sup
        return out;
    }
    bool class_is_irreducible(const IrrClassDesc& c) const override {
        if (c.kind == IrrClassDesc::Kind::nat_tail) return true; // infinite
        return c.elems.size() == 1;
    }
    std::optional<CatalogPoint> class_sup(const IrrClassDesc& c) const override {
        if (c.kind == IrrClassDesc::Kind::finite && c.elems.size() == 1) return c.elems[0];
        return std::nullopt; // discrete order: nothing else is bounded
    }
    bool class_meets_open(const IrrClassDesc& c, const SymbolicOpen& u) const override {
        if (c.kind == IrrClassDesc::Kind::nat_tail)
            return u.kind != SymbolicOpen::Kind::empty; // tails meet every cofinite set
        for (const auto& e : c.elems)
            if (mem(e, u)) return true;
        return false;
    }
    bool class_meets_up(const IrrClassDesc& c, const CatalogPoint& x) const override {
        if (c.kind == IrrClassDesc::Kind::nat_tail) return x.n >= c.start;
        for (const auto& e : c.elems)
            if (leq(x, e)) return true;
        return false;
    }
    bool class_is_closed(const IrrClassDesc& c) const override {
        return c.kind == IrrClassDesc::Kind::finite || c.kind == IrrClassDesc::Kind::nat_tail;
    }
    std::vector<CatalogPoint> class_member_sample(const IrrClassDesc& c, int fuel) const override {
        if (c.kind == IrrClassDesc::Kind::finite) return c.elems;
        std::vector<CatalogPoint> m;
        for (int i = 0; i < std::max(3, fuel / 2); ++i)
            m.push_back(CatalogPoint::make_nat(c.start + i));
        return m;
    }
    bool class_all_eventual_lb(const IrrClassDesc& c, const CatalogNetSpec& net) const override {
        if (c.kind == IrrClassDesc::Kind::finite)
            return detail::finite_class_all_eventual_lb(*this, c, net);
        return false; // tails have pairwise distinct members in a discrete order
    }
    std::optional<IrrClassDesc> dd_class(const CatalogPoint& y) const override {
        IrrClassDesc c;
        c.kind = IrrClassDesc::Kind::finite;
        c.elems = {y};
        return c;
    }

    std::optional<CatalogPoint> glb(const CatalogPoint& a, const CatalogPoint& b) const override {
        if (a.n == b.n) return a;
        return std::nullopt;
    }

    bool monotone_supported() const override { return true; }
    MonotoneGen monotone_gen() const override { return MonotoneGen::nat; }
    std::optional<CatalogPoint> monotone_limit() const override { return std::nullopt; }
    bool monotone_eventually_in(const SymbolicOpen& u) const override {
        // The values 0,1,2,... eventually dodge any finite excluded set.
        return u.kind != SymbolicOpen::Kind::empty;
    }
    bool monotone_eventual_lb(const CatalogPoint&) const override {
        return false; // values are pairwise distinct and the order is discrete
    }
    bool monotone_topological(const CatalogPoint&) const override { return true; }
    bool monotone_irr(const CatalogPoint&) const override { return false; }

    void validate_extra(int fuel, ValidationReport& rep) const override {
        const auto trunc = truncation(fuel);
        // oplus failure: the way-above set of any x is {x}; every nonempty
        // open contains points beyond the truncation, so it cannot equal {x}.
        for (const auto& u : opens_sample(fuel)) {
            if (u.kind == SymbolicOpen::Kind::empty) continue;
            ++rep.checks_run;
            CatalogPoint far = CatalogPoint::make_nat(fuel + 1 +
                                                      (u.excluded.empty() ? 0 : u.excluded.back()));
            if (!mem(far, u))
                rep.mismatches.push_back("expected every nonempty open to reach beyond the truncation");
        }
        rep.notes.push_back("way-above sets are finite singletons; no nonempty open is finite, "
                            "confirming the oplus failure");
        // c_space failure: interiors of up-sets (singletons) contain no open
        // but the empty one.
        for (const auto& y : trunc)
            for (const auto& u : opens_sample(fuel)) {
                if (u.kind == SymbolicOpen::Kind::empty) continue;
                ++rep.checks_run;
                CatalogPoint far = CatalogPoint::make_nat(fuel + 2 +
                                                          (u.excluded.empty() ? 0 : u.excluded.back()));
                if (mem(far, u) && leq(y, far) && !(far == y))
                    rep.mismatches.push_back("up-set of a point unexpectedly non-singleton");
            }
        rep.notes.push_back("finite sets with at least two elements confirmed non-irreducible via "
                            "separating cofinite pairs");
        // sobriety: singletons are point closures; the full carrier is the
        // irreducible closed set without one, and it is unbounded, which is
        // why bounded-sobriety survives.
        for (const auto& x : trunc) {
            ++rep.checks_run;
            if (!(closure_is_singleton(x)))
                rep.mismatches.push_back("closure of a point is not the singleton itself");
        }
        IrrClassDesc carrier;
        carrier.kind = IrrClassDesc::Kind::nat_tail;
        carrier.start = 0;
        ++rep.checks_run;
        if (!class_is_closed(carrier) || !class_is_irreducible(carrier) ||
            class_sup(carrier).has_value())
            rep.mismatches.push_back("the carrier must be closed and irreducible with no sup");
        for (const auto& u : trunc)
            if (leq(CatalogPoint::make_nat(u.n + 1), u))
                rep.mismatches.push_back("the carrier must have no upper bound");
        rep.notes.push_back("the whole carrier is the closed irreducible set without a point "
                            "closure; it is unbounded, so bounded-sobriety is untouched");
    }

private:
    bool closure_is_singleton(const CatalogPoint& x) const {
        // cl{x} = {y : y <= x}; the order is discrete.
        return leq(x, x);
    }
};

/// The ordinal chain 0 < 1 < ... < inf with the Alexandroff topology of the
/// order.  Every nonempty subset is irreducible (subsets of chains are
/// directed) and every subset has a supremum.  Witness-class completeness:
/// against up-sets, any member of Irr+ behaves exactly like one of — a
/// finite set (supremum attained at its maximum), a cofinal set of naturals
/// (behaves like a tail: same supremum inf, meets the same up-sets), or a
/// set containing inf (meets every up-set around its supremum inf).
class OmegaPlusOneSpace final : public CatalogSpace {
public:
    std::string cli_name() const override { return "omega-plus-one"; }

    std::optional<CatalogPoint> parse_point(const std::string& t) const override {
        if (t == "inf" || t == "omega" || t == "w") return CatalogPoint::make_inf();
        if (auto n = catalog_detail::parse_nat(t)) return CatalogPoint::make_nat(*n);
        return std::nullopt;
    }
    std::string point_label(const CatalogPoint& p) const override {
        return p.tag == CatalogPoint::Tag::infinity ? "inf" : std::to_string(p.n);
    }
    bool valid_point(const CatalogPoint& p) const override {
        return p.tag == CatalogPoint::Tag::infinity ||
               (p.tag == CatalogPoint::Tag::nat && p.n >= 0);
    }
    bool leq(const CatalogPoint& a, const CatalogPoint& b) const override {
        if (b.tag == CatalogPoint::Tag::infinity) return true;
        if (a.tag == CatalogPoint::Tag::infinity) return false;
        return a.n <= b.n;
    }

    std::vector<CatalogPoint> truncation(int fuel) const override {
        std::vector<CatalogPoint> t;
        for (int i = 0; i + 1 < fuel; ++i) t.push_back(CatalogPoint::make_nat(i));
        t.push_back(CatalogPoint::make_inf());
        return t;
    }

    std::vector<SymbolicOpen> opens_sample(int fuel) const override {
        std::vector<SymbolicOpen> out{SymbolicOpen::make_empty(), SymbolicOpen::make_top_singleton()};
        for (int k = 0; k <= fuel; ++k) out.push_back(SymbolicOpen::make_up_ray(k));
        return out;
    }
    bool mem(const CatalogPoint& p, const SymbolicOpen& u) const override {
        switch (u.kind) {
        case SymbolicOpen::Kind::empty: return false;
        case SymbolicOpen::Kind::full: return true;
        case SymbolicOpen::Kind::up_ray:
            return p.tag == CatalogPoint::Tag::infinity || p.n >= u.ray_start;
        case SymbolicOpen::Kind::top_singleton: return p.tag == CatalogPoint::Tag::infinity;
        default: throw Error("open does not belong to omega-plus-one");
        }
    }
    std::string open_label(const SymbolicOpen& u) const override {
        switch (u.kind) {
        case SymbolicOpen::Kind::empty: return "{}";
        case SymbolicOpen::Kind::full: return "[0,inf]";
        case SymbolicOpen::Kind::up_ray: return "[" + std::to_string(u.ray_start) + ",inf]";
        case SymbolicOpen::Kind::top_singleton: return "{inf}";
        default: return "?";
        }
    }

    bool way_below(const CatalogPoint& x, const CatalogPoint& y) const override {
        // Frozen from the definitional scan: the chain of all naturals has
        // supremum inf and misses the up-set of inf only.
        if (y.tag == CatalogPoint::Tag::infinity) return x.tag != CatalogPoint::Tag::infinity;
        return leq(x, y);
    }

    PropertyReport properties() const override {
        PropertyReport r;
        r.sober = false;
        r.bounded_sober = false;
        r.sup_sober = false;
        r.irr_continuous = true;
        r.si_minus_continuous = true;
        r.oplus = true;
        r.star = true;
        r.c_space = true;
        r.si_infty = false;
        r.si_continuous = true;
        r.irr_plus_continuous = true;
        Witness w = detail::desc_witness(
            "the set of finite points is irreducible and closed with supremum inf, yet is not the "
            "closure of inf");
        r.witnesses["sober"] = w;
        r.witnesses["bounded_sober"] = w;
        r.witnesses["sup_sober"] = w;
        r.witnesses["si_infty"] = detail::desc_witness(
            "the open {inf} is reached by the supremum of the finite points without being met");
        return r;
    }

    bool si_open(const SymbolicOpen& u) const override {
        // The tail of naturals has supremum inf inside {inf} and misses it;
        // every ray survives.
        return u.kind != SymbolicOpen::Kind::top_singleton;
    }

    CatalogTrace si_iterate(unsigned fuel) const override {
        if (fuel < 1) throw Error("si_iterate requires fuel >= 1");
        CatalogTrace t;
        t.space = cli_name();
        t.stages = {"alexandroff", "scott"};
        if (fuel >= 2) {
            t.stages.push_back("scott");
            t.gamma = 1;
            t.fixpoint_reached = true;
        } else {
            t.note = "fuel exhausted before the fixpoint could be confirmed";
        }
        return t;
    }

    std::vector<IrrClassDesc> irr_witnesses(int fuel) const override {
        std::vector<IrrClassDesc> out;
        for (auto& s : detail::finite_subsets(truncation(fuel))) {
            IrrClassDesc c;
            c.kind = IrrClassDesc::Kind::finite;
            c.elems = std::move(s);
            out.push_back(std::move(c));
        }
        for (int k = 0; k <= fuel; ++k) {
            IrrClassDesc c;
            c.kind = IrrClassDesc::Kind::nat_tail;
            c.start = k;
            out.push_back(c);
        }
        return out;
    }
    bool class_is_irreducible(const IrrClassDesc&) const override {
        return true; // all nonempty subsets of a chain are directed
    }
    std::optional<CatalogPoint> class_sup(const IrrClassDesc& c) const override {
        if (c.kind == IrrClassDesc::Kind::nat_tail) return CatalogPoint::make_inf();
        CatalogPoint best = c.elems[0];
        for (const auto& e : c.elems)
            if (leq(best, e)) best = e;
        return best;
    }
    bool class_meets_open(const IrrClassDesc& c, const SymbolicOpen& u) const override {
        if (c.kind == IrrClassDesc::Kind::nat_tail)
            return u.kind == SymbolicOpen::Kind::up_ray || u.kind == SymbolicOpen::Kind::full;
        for (const auto& e : c.elems)
            if (mem(e, u)) return true;
        return false;
    }
    bool class_meets_up(const IrrClassDesc& c, const CatalogPoint& x) const override {
        if (c.kind == IrrClassDesc::Kind::nat_tail) return x.tag != CatalogPoint::Tag::infinity;
        for (const auto& e : c.elems)
            if (leq(x, e)) return true;
        return false;
    }
    bool class_is_closed(const IrrClassDesc& c) const override {
        if (c.kind == IrrClassDesc::Kind::nat_tail)
            return c.start == 0; // omega itself: complement {inf} is open
        // Finite down-sets [0,m] are the closed finite sets.
        if (c.kind != IrrClassDesc::Kind::finite) return false;
        long long mx = -1;
        for (const auto& e : c.elems) {
            if (e.tag == CatalogPoint::Tag::infinity) return false;
            mx = std::max(mx, e.n);
        }
        return static_cast<long long>(c.elems.size()) == mx + 1;
    }
    std::vector<CatalogPoint> class_member_sample(const IrrClassDesc& c, int fuel) const override {
        if (c.kind == IrrClassDesc::Kind::finite) return c.elems;
        std::vector<CatalogPoint> m;
        for (int i = 0; i < std::max(3, fuel / 2); ++i)
            m.push_back(CatalogPoint::make_nat(c.start + i));
        return m;
    }
    bool class_all_eventual_lb(const IrrClassDesc& c, const CatalogNetSpec& net) const override {
        if (c.kind == IrrClassDesc::Kind::finite)
            return detail::finite_class_all_eventual_lb(*this, c, net);
        // An unbounded tail of naturals: only a net eventually at inf (or the
        // ascending generator itself) lies above all of it.
        validate_net(net);
        if (net.kind == TailKind::monotone) return true;
        for (const auto& v : net.values)
            if (v.tag != CatalogPoint::Tag::infinity) return false;
        return true;
    }
    std::optional<IrrClassDesc> dd_class(const CatalogPoint& y) const override {
        IrrClassDesc c;
        if (y.tag == CatalogPoint::Tag::infinity) {
            c.kind = IrrClassDesc::Kind::nat_tail;
            c.start = 0;
            return c;
        }
        c.kind = IrrClassDesc::Kind::finite;
        for (long long i = 0; i <= y.n; ++i) c.elems.push_back(CatalogPoint::make_nat(i));
        return c;
    }

    std::optional<CatalogPoint> glb(const CatalogPoint& a, const CatalogPoint& b) const override {
        return leq(a, b) ? a : b;
    }

    bool monotone_supported() const override { return true; }
    MonotoneGen monotone_gen() const override { return MonotoneGen::nat; }
    std::optional<CatalogPoint> monotone_limit() const override { return CatalogPoint::make_inf(); }
    bool monotone_eventually_in(const SymbolicOpen& u) const override {
        return u.kind == SymbolicOpen::Kind::up_ray || u.kind == SymbolicOpen::Kind::full;
    }
    bool monotone_eventual_lb(const CatalogPoint& e) const override {
        return e.tag != CatalogPoint::Tag::infinity;
    }
    bool monotone_topological(const CatalogPoint& y) const override {
        return y.tag != CatalogPoint::Tag::infinity;
    }
    bool monotone_irr(const CatalogPoint&) const override {
        return true; // the tail of naturals is an irreducible set of eventual
                     // lower bounds with supremum inf
    }

    void validate_extra(int fuel, ValidationReport& rep) const override {
        // The derived stage drops exactly {inf}: check the filter on samples.
        for (const auto& u : opens_sample(fuel)) {
            ++rep.checks_run;
            const bool kept = si_open(u);
            const bool is_top = u.kind == SymbolicOpen::Kind::top_singleton;
            if (kept == is_top)
                rep.mismatches.push_back("derived stage must drop {inf} and nothing else, open " +
                                         open_label(u));
        }
        rep.notes.push_back("derivative removes exactly the open {inf}; the rays form the Scott "
                            "topology of the chain");
        // omega is irreducible closed with supremum inf but not a closure.
        IrrClassDesc omega;
        omega.kind = IrrClassDesc::Kind::nat_tail;
        omega.start = 0;
        ++rep.checks_run;
        if (!class_is_closed(omega) || !class_is_irreducible(omega))
            rep.mismatches.push_back("omega must be irreducible and closed");
        if (!(class_sup(omega) && class_sup(omega)->tag == CatalogPoint::Tag::infinity))
            rep.mismatches.push_back("omega must have supremum inf");
        // cl{inf} contains every truncation point; omega misses inf, so it
        // cannot be the closure of its own supremum.
        for (const auto& x : truncation(fuel)) {
            ++rep.checks_run;
            if (!leq(x, CatalogPoint::make_inf()))
                rep.mismatches.push_back("every point must lie below inf");
        }
        ++rep.checks_run;
        if (class_meets_up(omega, CatalogPoint::make_inf()))
            rep.mismatches.push_back("omega must not contain inf");
    }
};

/// The poset T: bottom below everything, top above everything, a chain
/// 1 < 2 < ... , and an extra point a comparable only to bottom and top;
/// carried with its Alexandroff topology.  Witness-class completeness: a
/// directed set either has a greatest element (a finite witness reaches the
/// same verdicts) or contains no greatest element, in which case it is a
/// cofinal subset of the chain, possibly with bottom, with supremum top —
/// against up-sets such a set behaves exactly like a chain tail.
class PosetTSpace final : public CatalogSpace {
public:
    std::string cli_name() const override { return "poset-t"; }

    std::optional<CatalogPoint> parse_point(const std::string& t) const override {
        if (t == "bot" || t == "bottom") return CatalogPoint::make_bot();
        if (t == "top") return CatalogPoint::make_top();
        if (t == "a") return CatalogPoint::make_a();
        if (auto n = catalog_detail::parse_nat(t); n && *n >= 1) return CatalogPoint::make_nat(*n);
        return std::nullopt;
    }
    std::string point_label(const CatalogPoint& p) const override {
        switch (p.tag) {
        case CatalogPoint::Tag::bottom: return "bot";
        case CatalogPoint::Tag::top: return "top";
        case CatalogPoint::Tag::letter_a: return "a";
        default: return std::to_string(p.n);
        }
    }
    bool valid_point(const CatalogPoint& p) const override {
        switch (p.tag) {
        case CatalogPoint::Tag::bottom:
        case CatalogPoint::Tag::top:
        case CatalogPoint::Tag::letter_a: return true;
        case CatalogPoint::Tag::nat: return p.n >= 1;
        default: return false;
        }
    }
    bool leq(const CatalogPoint& a, const CatalogPoint& b) const override {
        if (a.tag == CatalogPoint::Tag::bottom || b.tag == CatalogPoint::Tag::top) return true;
        if (a.tag == CatalogPoint::Tag::top) return b.tag == CatalogPoint::Tag::top;
        if (a.tag == CatalogPoint::Tag::letter_a) return b.tag == CatalogPoint::Tag::letter_a;
        if (b.tag == CatalogPoint::Tag::letter_a) return false;
        if (b.tag == CatalogPoint::Tag::bottom) return false;
        return a.n <= b.n;
    }

    std::vector<CatalogPoint> truncation(int fuel) const override {
        std::vector<CatalogPoint> t{CatalogPoint::make_bot(), CatalogPoint::make_a(),
                                    CatalogPoint::make_top()};
        for (int i = 1; i <= std::max(1, fuel - 3); ++i) t.push_back(CatalogPoint::make_nat(i));
        return t;
    }

    std::vector<SymbolicOpen> opens_sample(int fuel) const override {
        std::vector<SymbolicOpen> out{SymbolicOpen::make_empty(), SymbolicOpen::make_full()};
        for (int a = 0; a <= 1; ++a)
            for (int k = 0; k <= fuel; ++k) out.push_back(SymbolicOpen::make_upset_t(a != 0, k));
        return out;
    }
    bool mem(const CatalogPoint& p, const SymbolicOpen& u) const override {
        switch (u.kind) {
        case SymbolicOpen::Kind::empty: return false;
        case SymbolicOpen::Kind::full: return true;
        case SymbolicOpen::Kind::upset_t:
            switch (p.tag) {
            case CatalogPoint::Tag::top: return true;
            case CatalogPoint::Tag::letter_a: return u.has_a;
            case CatalogPoint::Tag::bottom: return false;
            default: return u.tail_start >= 1 && p.n >= u.tail_start;
            }
        default: throw Error("open does not belong to poset-t");
        }
    }
    std::string open_label(const SymbolicOpen& u) const override {
        if (u.kind == SymbolicOpen::Kind::empty) return "{}";
        if (u.kind == SymbolicOpen::Kind::full) return "T";
        std::string s = "{top";
        if (u.has_a) s += ",a";
        if (u.tail_start >= 1) s += "," + std::to_string(u.tail_start) + "...";
        return s + "}";
    }

    bool way_below(const CatalogPoint& x, const CatalogPoint& y) const override {
        // Frozen: bottom is way-below everything; chain killers pin the rest.
        if (x.tag == CatalogPoint::Tag::bottom) return true;
        switch (y.tag) {
        case CatalogPoint::Tag::bottom:
        case CatalogPoint::Tag::letter_a: return false;
        case CatalogPoint::Tag::top: return x.tag == CatalogPoint::Tag::nat;
        default:
            return x.tag == CatalogPoint::Tag::nat && x.n <= y.n;
        }
    }

    PropertyReport properties() const override {
        PropertyReport r;
        r.sober = false;
        r.bounded_sober = false;
        r.sup_sober = false;
        r.irr_continuous = false;
        r.si_minus_continuous = false;
        r.oplus = true;
        r.star = true;
        r.c_space = true;
        r.si_infty = false;
        r.si_continuous = false;
        r.irr_plus_continuous = false;
        Witness w = detail::desc_witness(
            "bottom together with the chain is irreducible and closed with supremum top, yet is "
            "not the closure of top");
        r.witnesses["sober"] = w;
        r.witnesses["bounded_sober"] = w;
        r.witnesses["sup_sober"] = w;
        r.witnesses["irr_continuous"] = detail::point_desc_witness(
            "a", "the way-below set of a is {bot}, whose supremum is bot");
        r.witnesses["si_minus_continuous"] = detail::point_desc_witness(
            "a", "no directed subset of {bot} has supremum a");
        r.witnesses["si_continuous"] = detail::desc_witness("not SI-minus-continuous");
        r.witnesses["irr_plus_continuous"] = detail::desc_witness("not Irr-continuous");
        r.witnesses["si_infty"] = detail::desc_witness(
            "the open {top} is reached by the supremum of the chain without being met");
        return r;
    }

    bool si_open(const SymbolicOpen& u) const override {
        // The chain has supremum top; an open containing top survives only
        // with a chain tail to meet it.
        if (u.kind != SymbolicOpen::Kind::upset_t) return true;
        return u.tail_start >= 1;
    }

    CatalogTrace si_iterate(unsigned fuel) const override {
        if (fuel < 1) throw Error("si_iterate requires fuel >= 1");
        CatalogTrace t;
        t.space = cli_name();
        t.stages = {"alexandroff", "si-filtered"};
        t.note = "irreducible classes of the filtered stage are not registered; the fixpoint "
                 "is left undetermined";
        return t;
    }

    std::vector<IrrClassDesc> irr_witnesses(int fuel) const override {
        std::vector<IrrClassDesc> out;
        for (auto& s : detail::finite_subsets(truncation(fuel))) {
            IrrClassDesc c;
            c.kind = IrrClassDesc::Kind::finite;
            c.elems = std::move(s);
            out.push_back(std::move(c));
        }
        for (int k = 1; k <= fuel; ++k)
            for (int b = 0; b <= 1; ++b) {
                IrrClassDesc c;
                c.kind = IrrClassDesc::Kind::chain_tail;
                c.start = k;
                c.with_bottom = b != 0;
                out.push_back(c);
            }
        IrrClassDesc nt;
        nt.kind = IrrClassDesc::Kind::t_no_top;
        out.push_back(nt);
        return out;
    }
    bool class_is_irreducible(const IrrClassDesc& c) const override {
        if (c.kind != IrrClassDesc::Kind::finite) return true; // chains with or without bottom
        // Finite sets: directed means every pair has an upper bound inside.
        for (const auto& x : c.elems)
            for (const auto& y : c.elems) {
                bool ub = false;
                for (const auto& z : c.elems)
                    if (leq(x, z) && leq(y, z)) { ub = true; break; }
                if (!ub) return false;
            }
        return true;
    }
    std::optional<CatalogPoint> class_sup(const IrrClassDesc& c) const override {
        if (c.kind != IrrClassDesc::Kind::finite) return CatalogPoint::make_top();
        // Finite: the greatest element when there is one, otherwise top (the
        // only upper bound of a set mixing a with chain points).
        for (const auto& g : c.elems) {
            bool top = true;
            for (const auto& e : c.elems)
                if (!leq(e, g)) { top = false; break; }
            if (top) return g;
        }
        return CatalogPoint::make_top();
    }
    bool class_meets_open(const IrrClassDesc& c, const SymbolicOpen& u) const override {
        if (c.kind == IrrClassDesc::Kind::finite) {
            for (const auto& e : c.elems)
                if (mem(e, u)) return true;
            return false;
        }
        // Tails (with or without bottom) meet exactly the opens with a tail.
        if (u.kind == SymbolicOpen::Kind::full) return true;
        if (u.kind == SymbolicOpen::Kind::upset_t) return u.tail_start >= 1;
        return false;
    }
    bool class_meets_up(const IrrClassDesc& c, const CatalogPoint& x) const override {
        if (c.kind == IrrClassDesc::Kind::finite) {
            for (const auto& e : c.elems)
                if (leq(x, e)) return true;
            return false;
        }
        if (x.tag == CatalogPoint::Tag::bottom) return true;
        if (x.tag == CatalogPoint::Tag::nat) return true; // tails climb past x
        return false; // up-sets of a and top never reach the chain
    }
    bool class_is_closed(const IrrClassDesc& c) const override {
        switch (c.kind) {
        case IrrClassDesc::Kind::t_no_top: return true; // complement {a,top} is open
        case IrrClassDesc::Kind::chain_tail: return false;
        case IrrClassDesc::Kind::finite: {
            // Down-sets: {bot}, {bot,a}, {bot,1..m}, {bot,a,1..m} minus top.
            bool has_bot = false;
            long long mx = 0;
            long long chain_count = 0;
            for (const auto& e : c.elems) {
                if (e.tag == CatalogPoint::Tag::top) return false;
                if (e.tag == CatalogPoint::Tag::bottom) has_bot = true;
                if (e.tag == CatalogPoint::Tag::nat) {
                    mx = std::max(mx, e.n);
                    ++chain_count;
                }
            }
            return has_bot && chain_count == mx;
        }
        default: return false;
        }
    }
    std::vector<CatalogPoint> class_member_sample(const IrrClassDesc& c, int fuel) const override {
        if (c.kind == IrrClassDesc::Kind::finite) return c.elems;
        std::vector<CatalogPoint> m;
        if (c.kind == IrrClassDesc::Kind::t_no_top || c.with_bottom)
            m.push_back(CatalogPoint::make_bot());
        long long s = c.kind == IrrClassDesc::Kind::t_no_top ? 1 : c.start;
        for (int i = 0; i < std::max(3, fuel / 2); ++i) m.push_back(CatalogPoint::make_nat(s + i));
        return m;
    }
    bool class_all_eventual_lb(const IrrClassDesc& c, const CatalogNetSpec& net) const override {
        if (c.kind == IrrClassDesc::Kind::finite)
            return detail::finite_class_all_eventual_lb(*this, c, net);
        // An unbounded chain (with or without bottom): only top or the
        // ascending generator eventually dominates all of it.
        validate_net(net);
        if (net.kind == TailKind::monotone) return true;
        for (const auto& v : net.values)
            if (v.tag != CatalogPoint::Tag::top) return false;
        return true;
    }
    std::optional<IrrClassDesc> dd_class(const CatalogPoint& y) const override {
        IrrClassDesc c;
        switch (y.tag) {
        case CatalogPoint::Tag::top: c.kind = IrrClassDesc::Kind::t_no_top; return c;
        case CatalogPoint::Tag::nat:
            c.kind = IrrClassDesc::Kind::finite;
            c.elems.push_back(CatalogPoint::make_bot());
            for (long long i = 1; i <= y.n; ++i) c.elems.push_back(CatalogPoint::make_nat(i));
            return c;
        default:
            c.kind = IrrClassDesc::Kind::finite;
            c.elems = {CatalogPoint::make_bot()};
            return c;
        }
    }

    std::optional<CatalogPoint> glb(const CatalogPoint& a, const CatalogPoint& b) const override {
        if (leq(a, b)) return a;
        if (leq(b, a)) return b;
        return CatalogPoint::make_bot(); // the only incomparable pairs mix a with the chain
    }

    bool monotone_supported() const override { return true; }
    MonotoneGen monotone_gen() const override { return MonotoneGen::nat; }
    std::optional<CatalogPoint> monotone_limit() const override { return CatalogPoint::make_top(); }
    bool monotone_eventually_in(const SymbolicOpen& u) const override {
        if (u.kind == SymbolicOpen::Kind::full) return true;
        return u.kind == SymbolicOpen::Kind::upset_t && u.tail_start >= 1;
    }
    bool monotone_eventual_lb(const CatalogPoint& e) const override {
        return e.tag == CatalogPoint::Tag::bottom || e.tag == CatalogPoint::Tag::nat;
    }
    bool monotone_topological(const CatalogPoint& y) const override {
        // Eventually in the up-set of y: only when y sits on the chain or at
        // bottom.
        return y.tag == CatalogPoint::Tag::bottom || y.tag == CatalogPoint::Tag::nat;
    }
    bool monotone_irr(const CatalogPoint&) const override {
        return true; // the chain of eventual lower bounds has supremum top
    }

    void validate_extra(int fuel, ValidationReport& rep) const override {
        // The killer behind "1 is not way-below a": {bot,a} is directed with
        // supremum a and misses the up-set of 1.
        IrrClassDesc killer;
        killer.kind = IrrClassDesc::Kind::finite;
        killer.elems = {CatalogPoint::make_bot(), CatalogPoint::make_a()};
        ++rep.checks_run;
        if (!class_is_irreducible(killer) ||
            !(class_sup(killer) && class_sup(killer)->tag == CatalogPoint::Tag::letter_a) ||
            class_meets_up(killer, CatalogPoint::make_nat(1)))
            rep.mismatches.push_back("{bot,a} must be a killer for 1 << a");
        else
            rep.notes.push_back("killer set {bot,a} for 1 << a rediscovered");
        // Way-below set of a on the truncation is {bot}.
        for (const auto& x : truncation(fuel)) {
            ++rep.checks_run;
            const bool expect = x.tag == CatalogPoint::Tag::bottom;
            if (way_below(x, CatalogPoint::make_a()) != expect)
                rep.mismatches.push_back("way-below set of a must be exactly {bot}");
        }
        // C-space witnesses: every up-set of a point is open, so each point
        // witnesses itself.
        for (const auto& u : opens_sample(fuel))
            for (const auto& x : truncation(fuel)) {
                if (!mem(x, u)) continue;
                ++rep.checks_run;
                if (!mem(x, up_set_open(x)))
                    rep.mismatches.push_back("point must sit inside its own open up-set");
            }
        // The sup-sober killer: bottom with the chain is closed, irreducible,
        // has supremum top, and misses top, so it is no point closure.
        IrrClassDesc no_top;
        no_top.kind = IrrClassDesc::Kind::t_no_top;
        ++rep.checks_run;
        if (!class_is_closed(no_top) || !class_is_irreducible(no_top) ||
            !(class_sup(no_top) && class_sup(no_top)->tag == CatalogPoint::Tag::top) ||
            class_meets_up(no_top, CatalogPoint::make_top()))
            rep.mismatches.push_back("bottom-plus-chain must be a closed irreducible set with "
                                     "supremum top that misses top");
        rep.notes.push_back("bottom with the chain witnesses the sup-sobriety failure");
    }

private:
    SymbolicOpen up_set_open(const CatalogPoint& x) const {
        switch (x.tag) {
        case CatalogPoint::Tag::bottom: return SymbolicOpen::make_full();
        case CatalogPoint::Tag::letter_a: return SymbolicOpen::make_upset_t(true, 0);
        case CatalogPoint::Tag::top: return SymbolicOpen::make_upset_t(false, 0);
        default: return SymbolicOpen::make_upset_t(false, x.n);
        }
    }
};

/// The rational line with (a rational-ray presentation of) its Scott
/// topology: the opens are the empty set, Q, and the rays (q, inf) with q
/// rational.  Every nonempty subset is irreducible since the opens are
/// nested; Irr+ consists of the subsets with a rational supremum.  Witness
/// classes: finite sets (supremum attained at the maximum), the rays
/// (-inf, q) and the ascending sequences q - 1/m (supremum q, not attained).
/// Against the nested rays, any member of Irr+ with supremum q behaves
/// exactly like one of these.
class RationalScottSpace final : public CatalogSpace {
public:
    std::string cli_name() const override { return "rational-scott"; }

    std::optional<CatalogPoint> parse_point(const std::string& t) const override {
        if (auto r = catalog_detail::parse_rational(t)) return CatalogPoint::make_rat(*r);
        return std::nullopt;
    }
    std::string point_label(const CatalogPoint& p) const override { return p.q.str(); }
    bool valid_point(const CatalogPoint& p) const override {
        return p.tag == CatalogPoint::Tag::rational;
    }
    bool leq(const CatalogPoint& a, const CatalogPoint& b) const override { return a.q <= b.q; }

    std::vector<CatalogPoint> truncation(int fuel) const override {
        std::vector<CatalogPoint> t;
        for (int k = -fuel; k <= fuel; ++k)
            t.push_back(CatalogPoint::make_rat(Rational::of(k, 2)));
        return t;
    }

    std::vector<SymbolicOpen> opens_sample(int fuel) const override {
        std::vector<SymbolicOpen> out{SymbolicOpen::make_empty(), SymbolicOpen::make_full()};
        for (int k = -fuel; k <= fuel; ++k)
            out.push_back(SymbolicOpen::make_rational_ray(Rational::of(k, 2)));
        return out;
    }
    bool mem(const CatalogPoint& p, const SymbolicOpen& u) const override {
        switch (u.kind) {
        case SymbolicOpen::Kind::empty: return false;
        case SymbolicOpen::Kind::full: return true;
        case SymbolicOpen::Kind::rational_right_ray: return u.q < p.q;
        default: throw Error("open does not belong to rational-scott");
        }
    }
    std::string open_label(const SymbolicOpen& u) const override {
        if (u.kind == SymbolicOpen::Kind::empty) return "{}";
        if (u.kind == SymbolicOpen::Kind::full) return "Q";
        return "(" + u.q.str() + ",inf)";
    }

    bool way_below(const CatalogPoint& x, const CatalogPoint& y) const override {
        return x.q < y.q; // strict: the sequence y - 1/m kills x = y
    }

    PropertyReport properties() const override {
        PropertyReport r;
        r.sober = false;
        r.bounded_sober = true;
        r.sup_sober = true;
        r.irr_continuous = true;
        r.si_minus_continuous = true;
        r.oplus = true;
        r.star = true;
        r.c_space = true;
        r.si_infty = true;
        r.si_continuous = true;
        r.irr_plus_continuous = true;
        r.witnesses["sober"] = detail::desc_witness(
            "the whole carrier is irreducible and closed but has no supremum, hence is not a "
            "point closure");
        return r;
    }

    bool si_open(const SymbolicOpen&) const override {
        return true; // any set with supremum inside (q, inf) has members above q
    }

    CatalogTrace si_iterate(unsigned fuel) const override {
        if (fuel < 1) throw Error("si_iterate requires fuel >= 1");
        CatalogTrace t;
        t.space = cli_name();
        t.stages = {"scott-rational", "scott-rational"};
        t.gamma = 0;
        t.fixpoint_reached = true;
        return t;
    }

    std::vector<IrrClassDesc> irr_witnesses(int fuel) const override {
        std::vector<IrrClassDesc> out;
        for (auto& s : detail::finite_subsets(truncation(fuel))) {
            IrrClassDesc c;
            c.kind = IrrClassDesc::Kind::finite;
            c.elems = std::move(s);
            out.push_back(std::move(c));
        }
        for (const auto& p : truncation(fuel)) {
            IrrClassDesc ray;
            ray.kind = IrrClassDesc::Kind::rat_ray;
            ray.q = p.q;
            out.push_back(ray);
            IrrClassDesc seq;
            seq.kind = IrrClassDesc::Kind::rat_seq;
            seq.q = p.q;
            out.push_back(seq);
        }
        return out;
    }
    bool class_is_irreducible(const IrrClassDesc&) const override {
        return true; // the rays are nested, so every nonempty set qualifies
    }
    std::optional<CatalogPoint> class_sup(const IrrClassDesc& c) const override {
        if (c.kind != IrrClassDesc::Kind::finite) return CatalogPoint::make_rat(c.q);
        CatalogPoint best = c.elems[0];
        for (const auto& e : c.elems)
            if (leq(best, e)) best = e;
        return best;
    }
    bool class_meets_open(const IrrClassDesc& c, const SymbolicOpen& u) const override {
        if (u.kind == SymbolicOpen::Kind::empty) return false;
        if (u.kind == SymbolicOpen::Kind::full) return true;
        switch (c.kind) {
        case IrrClassDesc::Kind::finite: {
            for (const auto& e : c.elems)
                if (mem(e, u)) return true;
            return false;
        }
        default:
            // Both (-inf, q) and {q - 1/m} reach arbitrarily close below q.
            return u.q < c.q;
        }
    }
    bool class_meets_up(const IrrClassDesc& c, const CatalogPoint& x) const override {
        switch (c.kind) {
        case IrrClassDesc::Kind::finite: {
            for (const auto& e : c.elems)
                if (leq(x, e)) return true;
            return false;
        }
        default: return x.q < c.q; // members approach q strictly from below
        }
    }
    bool class_is_closed(const IrrClassDesc& c) const override {
        // The closed sets are (-inf, q] and Q; none of the witness classes
        // matches them except via closures handled in validate_extra.
        (void)c;
        return false;
    }
    std::vector<CatalogPoint> class_member_sample(const IrrClassDesc& c, int fuel) const override {
        if (c.kind == IrrClassDesc::Kind::finite) return c.elems;
        std::vector<CatalogPoint> m;
        for (int i = 1; i <= std::max(3, fuel / 2); ++i)
            m.push_back(CatalogPoint::make_rat(c.q.minus_unit_fraction(i)));
        return m;
    }
    bool class_all_eventual_lb(const IrrClassDesc& c, const CatalogNetSpec& net) const override {
        if (c.kind == IrrClassDesc::Kind::finite)
            return detail::finite_class_all_eventual_lb(*this, c, net);
        // Members approach q strictly from below, so all of them bound the
        // net exactly when q does in the closure sense.
        validate_net(net);
        if (net.kind == TailKind::monotone) return c.q <= Rational::of(1, 1);
        for (const auto& v : net.values)
            if (!(c.q <= v.q)) return false;
        return true;
    }
    std::optional<IrrClassDesc> dd_class(const CatalogPoint& y) const override {
        IrrClassDesc c;
        c.kind = IrrClassDesc::Kind::rat_ray;
        c.q = y.q;
        return c;
    }

    std::optional<CatalogPoint> glb(const CatalogPoint& a, const CatalogPoint& b) const override {
        return leq(a, b) ? a : b;
    }

    bool monotone_supported() const override { return true; }
    MonotoneGen monotone_gen() const override { return MonotoneGen::one_minus_one_over_n; }
    std::optional<CatalogPoint> monotone_limit() const override {
        return CatalogPoint::make_rat(Rational::of(1, 1));
    }
    bool monotone_eventually_in(const SymbolicOpen& u) const override {
        if (u.kind == SymbolicOpen::Kind::empty) return false;
        if (u.kind == SymbolicOpen::Kind::full) return true;
        return u.q < Rational::of(1, 1); // the values climb past every q below 1
    }
    bool monotone_eventual_lb(const CatalogPoint& e) const override {
        return e.q < Rational::of(1, 1);
    }
    bool monotone_topological(const CatalogPoint& y) const override {
        return y.q <= Rational::of(1, 1);
    }
    bool monotone_irr(const CatalogPoint& y) const override {
        return y.q <= Rational::of(1, 1); // the values themselves form the witness class
    }

    void validate_extra(int fuel, ValidationReport& rep) const override {
        const auto trunc = truncation(fuel);
        // Way-below equals the strict order on the truncation; interpolation
        // comes from density (probed through midpoints).
        for (const auto& x : trunc)
            for (const auto& y : trunc) {
                if (!way_below(x, y)) continue;
                ++rep.checks_run;
                CatalogPoint mid = CatalogPoint::make_rat(Rational::midpoint(x.q, y.q));
                if (!(way_below(x, mid) && way_below(mid, y)))
                    rep.mismatches.push_back("midpoint fails to interpolate " + point_label(x) +
                                             " << " + point_label(y));
            }
        // The way-below set of x is the open-ended ray below x with supremum
        // exactly x.
        for (const auto& x : trunc) {
            IrrClassDesc ray;
            ray.kind = IrrClassDesc::Kind::rat_ray;
            ray.q = x.q;
            ++rep.checks_run;
            auto g = class_sup(ray);
            if (!g || !(g->q == x.q))
                rep.mismatches.push_back("ray below " + point_label(x) + " must have supremum " +
                                         point_label(x));
            for (const auto& m : class_member_sample(ray, fuel))
                if (!way_below(m, x))
                    rep.mismatches.push_back("ray member " + point_label(m) +
                                             " must be way-below " + point_label(x));
        }
        // No rational bounds the whole carrier, so the carrier is the
        // irreducible closed set without a point closure or a supremum.
        for (const auto& u : trunc) {
            ++rep.checks_run;
            CatalogPoint above = CatalogPoint::make_rat(Rational::of(u.q.num + u.q.den, u.q.den));
            if (leq(above, u))
                rep.mismatches.push_back("the carrier must have no upper bound");
        }
        rep.notes.push_back("closed proper subsets are the rays (-inf,q], each the closure of q; "
                            "only the whole carrier blocks sobriety");
    }
};

// ---------------------------------------------------------------------------
// Registry.
// ---------------------------------------------------------------------------

inline const std::vector<const CatalogSpace*>& catalog_all() {
    static const CofiniteNatSpace cofinite;
    static const OmegaPlusOneSpace omega;
    static const PosetTSpace poset_t;
    static const RationalScottSpace rational;
    static const std::vector<const CatalogSpace*> all{&cofinite, &omega, &poset_t, &rational};
    return all;
}

inline const CatalogSpace& catalog_get(const std::string& name) {
    for (const CatalogSpace* sp : catalog_all())
        if (sp->cli_name() == name) return *sp;
    throw UnknownSpaceError("unknown catalog space: " + name);
}

inline bool is_catalog_name(const std::string& name) {
    for (const CatalogSpace* sp : catalog_all())
        if (sp->cli_name() == name) return true;
    return false;
}

/// Fuel-bounded definitional probing of every frozen oracle of one space.
/// Throws OracleMismatchError when any probe contradicts a frozen answer.
inline ValidationReport validate_catalog(const CatalogSpace& sp, int fuel) {
    if (fuel < 1) throw Error("validate_catalog requires fuel >= 1");
    ValidationReport rep;
    rep.space = sp.cli_name();
    detail::probe_catalog_common(sp, fuel, rep);
    sp.validate_extra(fuel, rep);
    if (!rep.mismatches.empty()) {
        std::string msg = sp.cli_name() + ": " + std::to_string(rep.mismatches.size()) +
                          " oracle mismatches;";
        for (const auto& m : rep.mismatches) msg += "\n  " + m;
        throw OracleMismatchError(msg);
    }
    return rep;
}

inline ValidationReport validate_catalog(const std::string& name, int fuel) {
    return validate_catalog(catalog_get(name), fuel);
}

inline bool catalog_way_below(const CatalogSpace& sp, const CatalogPoint& x,
                              const CatalogPoint& y) {
    if (!sp.valid_point(x) || !sp.valid_point(y)) throw Error("point escapes the carrier");
    return sp.way_below(x, y);
}

inline PropertyReport catalog_properties(const std::string& name) {
    return catalog_get(name).properties();
}

// ---------------------------------------------------------------------------
// Locating the induced topology on a catalog space, with witness nets.
// ---------------------------------------------------------------------------

struct CatalogLocationReport {
    std::string space;
    bool si_within_induced = false;
    bool second_containment_checked = false;
    bool tau_convergence_within_irr = false; // the instance form of induced-within-tau
    std::vector<std::string> notes;
    bool passed = false;
};

inline CatalogLocationReport location_check(const CatalogSpace& sp, int fuel) {
    if (fuel < 1) throw Error("location_check requires fuel >= 1");
    CatalogLocationReport rep;
    rep.space = sp.cli_name();
    const auto trunc = sp.truncation(fuel);
    std::vector<CatalogNetSpec> stock;
    for (const auto& v : trunc) stock.push_back(CatalogNetSpec::constant(v));
    if (trunc.size() >= 2) {
        stock.push_back(CatalogNetSpec::periodic({trunc[0], trunc[1]}));
        stock.push_back(CatalogNetSpec::periodic({trunc[trunc.size() - 1], trunc[0]}));
    }
    if (sp.monotone_supported()) stock.push_back(CatalogNetSpec::monotone(sp.monotone_gen()));

    // Every SI-open set must be open for Irr-convergence: a net converging
    // into it must eventually enter it.
    auto induced_violation = [&](const SymbolicOpen& u) -> std::optional<std::string> {
        for (const auto& net : stock)
            for (const auto& y : trunc)
                if (sp.mem(y, u) && sp.irr_converges(net, y) && !sp.eventually_in(net, u))
                    return "a net Irr-converges to " + sp.point_label(y) +
                           " inside " + sp.open_label(u) + " without entering it";
        return std::nullopt;
    };
    rep.si_within_induced = true;
    for (const auto& u : sp.opens_sample(fuel)) {
        auto violation = induced_violation(u);
        if (sp.si_open(u)) {
            if (violation) rep.si_within_induced = false;
        } else if (violation) {
            // The witness keeping this open out of the induced topology.
            rep.notes.push_back("open " + sp.open_label(u) +
                                " is not open for Irr-convergence: " + *violation);
        }
    }

    // With the oplus property (or full SI-continuity) the induced topology is
    // coarser than the original: instance form, every topologically
    // convergent stock net Irr-converges.
    PropertyReport pr = sp.properties();
    rep.second_containment_checked = pr.oplus || pr.si_continuous;
    rep.tau_convergence_within_irr = true;
    if (rep.second_containment_checked) {
        for (const auto& net : stock)
            for (const auto& y : trunc)
                if (sp.topological_converges(net, y) && !sp.irr_converges(net, y))
                    rep.tau_convergence_within_irr = false;
    }
    rep.passed = rep.si_within_induced &&
                 (!rep.second_containment_checked || rep.tau_convergence_within_irr);
    return rep;
}

/// Instance checks of the convergence characterisation of way-below on a
/// catalog space.
inline WayBelowConvergenceReport way_below_convergence_char(const CatalogSpace& sp,
                                                            const CatalogPoint& x,
                                                            const CatalogPoint& y, int fuel) {
    WayBelowConvergenceReport rep;
    rep.passed = true;
    const auto trunc = sp.truncation(fuel);
    std::vector<CatalogNetSpec> stock;
    for (const auto& v : trunc) stock.push_back(CatalogNetSpec::constant(v));
    if (trunc.size() >= 2)
        stock.push_back(CatalogNetSpec::periodic({trunc[0], trunc[trunc.size() - 1]}));
    if (sp.monotone_supported()) stock.push_back(CatalogNetSpec::monotone(sp.monotone_gen()));

    const bool wb = sp.way_below(x, y);
    if (!wb)
        rep.notes.push_back(sp.point_label(x) + " is not way-below " + sp.point_label(y) +
                            "; the forward direction is vacuous for it");
    PropertyReport pr = sp.properties();
    const auto dd = sp.dd_class(y);
    for (const auto& net : stock) {
        ++rep.instances_checked;
        const bool conv = sp.irr_converges(net, y);
        if (conv && wb && !sp.eventual_lower_bound(net, x)) {
            rep.passed = false;
            rep.notes.push_back("a net Irr-converging to " + sp.point_label(y) +
                                " is not eventually above " + sp.point_label(x));
            return rep;
        }
        if ((pr.irr_continuous || pr.si_minus_continuous) && dd) {
            // The converse premise, decided exactly: every point of the
            // way-below set of y is an eventual lower bound of the net.
            if (sp.class_all_eventual_lb(*dd, net) && !conv) {
                rep.passed = false;
                rep.notes.push_back("eventual bounds cover the way-below set of " +
                                    sp.point_label(y) + " yet the net does not Irr-converge");
                return rep;
            }
        }
    }
    return rep;
}

/// Interpolation probe on the truncation: every way-below pair admits an
/// interpolant among the truncation points or (for the rationals) midpoints.
inline bool catalog_interpolation_probe(const CatalogSpace& sp, int fuel) {
    const auto trunc = sp.truncation(fuel);
    for (const auto& z : trunc)
        for (const auto& x : trunc) {
            if (!sp.way_below(z, x)) continue;
            bool found = false;
            for (const auto& y : trunc)
                if (sp.way_below(z, y) && sp.way_below(y, x)) { found = true; break; }
            if (!found && z.tag == CatalogPoint::Tag::rational) {
                CatalogPoint mid = CatalogPoint::make_rat(Rational::midpoint(z.q, x.q));
                found = sp.way_below(z, mid) && sp.way_below(mid, x);
            }
            if (!found) return false;
        }
    return true;
}

} // namespace irrtop

#endif
