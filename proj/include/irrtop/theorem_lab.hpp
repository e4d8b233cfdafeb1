#ifndef IRRTOP_THEOREM_LAB_HPP
#define IRRTOP_THEOREM_LAB_HPP

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "irrtop/catalog.hpp"
#include "irrtop/convergence.hpp"

namespace irrtop {

// ---------------------------------------------------------------------------
// Enumeration of labeled posets (equivalently, of finite T0 topologies).
// ---------------------------------------------------------------------------

/// Labeled poset counts for n = 0..6; the classic sequence the enumerator
/// must reproduce.
inline constexpr std::array<unsigned long long, 7> kLabeledPosetCounts = {
    1, 1, 3, 19, 219, 4231, 130023};

/// All partial orders on n labeled points, built by inserting points one at
/// a time: each insertion picks a down-set D and an up-set U of the smaller
/// poset with D x U already inside the order.  Every labeled poset arises
/// exactly once this way (restricting away the last point inverts it).
inline std::vector<Poset> enumerate_posets(unsigned n, bool up_to_iso = false) {
    if (n < 1 || n > 6) throw TooLargeError("enumerate_posets supports 1..6 points");
    std::vector<std::vector<PointSet>> rows{{PointSet::singleton(0)}};
    for (unsigned k = 2; k <= n; ++k) {
        std::vector<std::vector<PointSet>> next;
        const unsigned m = k - 1; // points already placed
        for (const auto& up : rows) {
            auto down_of = [&](unsigned i) {
                PointSet d;
                for (unsigned j = 0; j < m; ++j)
                    if (up[j].contains(i)) d = d.with(j);
                return d;
            };
            for (std::uint32_t dm = 0; dm < (1u << m); ++dm) {
                PointSet d{dm};
                bool down_closed = true;
                for (unsigned i = 0; i < m && down_closed; ++i)
                    if (d.contains(i) && !down_of(i).subset_of(d)) down_closed = false;
                if (!down_closed) continue;
                for (std::uint32_t um = 0; um < (1u << m); ++um) {
                    PointSet u{um};
                    if (u.intersects(d)) continue;
                    bool ok = true;
                    for (unsigned i = 0; i < m && ok; ++i) {
                        if (u.contains(i) && !up[i].subset_of(u)) ok = false;
                        if (d.contains(i) && ok && !u.subset_of(up[i])) ok = false;
                    }
                    if (!ok) continue;
                    std::vector<PointSet> ext(up);
                    for (unsigned i = 0; i < m; ++i)
                        if (d.contains(i)) ext[i] = ext[i].with(m);
                    ext.push_back(u.with(m));
                    next.push_back(std::move(ext));
                }
            }
        }
        rows = std::move(next);
    }
    std::vector<Poset> out;
    out.reserve(rows.size());
    auto names = default_names(n);
    for (auto& up : rows) {
        Poset p;
        p.n = n;
        p.names = names;
        p.up = std::move(up);
        out.push_back(std::move(p));
    }
    if (!up_to_iso) return out;

    // Keep a poset exactly when its relation mask is minimal over all
    // relabelings.
    std::vector<unsigned> perm(n);
    std::vector<Poset> reps;
    auto mask_of = [&](const Poset& p, const std::vector<unsigned>& pi) {
        std::uint64_t mask = 0;
        for (unsigned i = 0; i < n; ++i)
            for (unsigned j = 0; j < n; ++j)
                if (p.le(i, j)) mask |= std::uint64_t{1} << (pi[i] * n + pi[j]);
        return mask;
    };
    for (const Poset& p : out) {
        for (unsigned i = 0; i < n; ++i) perm[i] = i;
        const std::uint64_t own = mask_of(p, perm);
        std::uint64_t best = own;
        while (std::next_permutation(perm.begin(), perm.end()))
            best = std::min(best, mask_of(p, perm));
        if (best == own) reps.push_back(p);
    }
    return reps;
}

/// A compact deterministic label for an enumerated space: its covering pairs.
inline std::string space_label(const FiniteSpace& s) {
    Poset p = specialization(s);
    std::string out = "n=" + std::to_string(s.n) + ";";
    bool first = true;
    for (unsigned i = 0; i < p.n; ++i)
        for (unsigned j = 0; j < p.n; ++j) {
            if (i == j || !p.le(i, j)) continue;
            bool cover = true;
            for (unsigned k = 0; k < p.n && cover; ++k)
                if (k != i && k != j && p.le(i, k) && p.le(k, j)) cover = false;
            if (!cover) continue;
            if (!first) out += ",";
            out += p.names[i] + "<" + p.names[j];
            first = false;
        }
    if (first) out += "antichain";
    return out;
}

// ---------------------------------------------------------------------------
// Boolean queries over property flags.
// ---------------------------------------------------------------------------

struct QueryExpr {
    enum class Kind { always, flag, negation, conjunction, disjunction };
    Kind kind = Kind::always;
    std::string flag;
    std::vector<QueryExpr> kids;

    static QueryExpr always() { return {}; }
    static QueryExpr of_flag(std::string name) {
        QueryExpr q;
        q.kind = Kind::flag;
        q.flag = std::move(name);
        return q;
    }

    bool eval(const PropertyReport& r) const {
        switch (kind) {
        case Kind::always: return true;
        case Kind::flag: return property_flag(r, flag);
        case Kind::negation: return !kids[0].eval(r);
        case Kind::conjunction: return kids[0].eval(r) && kids[1].eval(r);
        case Kind::disjunction: return kids[0].eval(r) || kids[1].eval(r);
        }
        return false;
    }
};

namespace detail {

struct QueryParser {
    std::string text;
    size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
    }
    bool eat(const std::string& tok) {
        skip_ws();
        if (text.compare(pos, tok.size(), tok) == 0) {
            pos += tok.size();
            return true;
        }
        return false;
    }
    bool peek_ident(std::string& out) {
        skip_ws();
        size_t p = pos;
        std::string id;
        while (p < text.size() &&
               ((text[p] >= 'a' && text[p] <= 'z') || text[p] == '_' ||
                (text[p] >= '0' && text[p] <= '9')))
            id += text[p++];
        if (id.empty()) return false;
        out = id;
        return true;
    }
    std::string take_ident() {
        std::string id;
        if (!peek_ident(id)) throw BadQueryError("expected a flag name at position " +
                                                 std::to_string(pos));
        pos += id.size();
        return id;
    }

    QueryExpr parse_or() {
        QueryExpr lhs = parse_and();
        while (true) {
            skip_ws();
            std::string id;
            if (eat("||") || eat("|") || eat("∨")) {
            } else if (peek_ident(id) && id == "or") {
                pos += 2;
            } else {
                return lhs;
            }
            QueryExpr node;
            node.kind = QueryExpr::Kind::disjunction;
            node.kids = {std::move(lhs), parse_and()};
            lhs = std::move(node);
        }
    }
    QueryExpr parse_and() {
        QueryExpr lhs = parse_not();
        while (true) {
            skip_ws();
            std::string id;
            if (eat("&&") || eat("&") || eat("∧")) {
            } else if (peek_ident(id) && id == "and") {
                pos += 3;
            } else {
                return lhs;
            }
            QueryExpr node;
            node.kind = QueryExpr::Kind::conjunction;
            node.kids = {std::move(lhs), parse_not()};
            lhs = std::move(node);
        }
    }
    QueryExpr parse_not() {
        skip_ws();
        std::string id;
        if (eat("!") || eat("¬") || (peek_ident(id) && id == "not" && (pos += 3, true))) {
            QueryExpr node;
            node.kind = QueryExpr::Kind::negation;
            node.kids = {parse_not()};
            return node;
        }
        return parse_atom();
    }
    QueryExpr parse_atom() {
        skip_ws();
        if (eat("(")) {
            QueryExpr inner = parse_or();
            if (!eat(")")) throw BadQueryError("missing closing parenthesis");
            return inner;
        }
        std::string id = take_ident();
        const auto& flags = property_flag_names();
        if (std::find(flags.begin(), flags.end(), id) == flags.end())
            throw BadQueryError("unknown property flag: " + id);
        return QueryExpr::of_flag(id);
    }
};

} // namespace detail

inline QueryExpr parse_query(const std::string& text) {
    detail::QueryParser p{text};
    QueryExpr q = p.parse_or();
    p.skip_ws();
    if (p.pos != p.text.size())
        throw BadQueryError("trailing input after query: " + text.substr(p.pos));
    return q;
}

// ---------------------------------------------------------------------------
// The implication suite: laws as data.
// ---------------------------------------------------------------------------

struct ImplicationSpec {
    std::string name;
    std::string statement;
    QueryExpr hypothesis;
    QueryExpr conclusion;
};

inline ImplicationSpec make_implication(std::string name, std::string hyp, std::string concl,
                                        std::string statement) {
    ImplicationSpec i;
    i.name = std::move(name);
    i.hypothesis = hyp.empty() ? QueryExpr::always() : parse_query(hyp);
    i.conclusion = parse_query(concl);
    i.statement = std::move(statement);
    return i;
}

/// Flag-level laws valid in every space, finite or not.
inline const std::vector<ImplicationSpec>& shared_implications() {
    static const std::vector<ImplicationSpec> table = {
        make_implication("sober-implies-bounded-sober", "sober", "bounded_sober",
                         "a space whose irreducible closed sets are point closures keeps that "
                         "property for the bounded ones"),
        make_implication("bounded-sober-implies-sup-sober", "bounded_sober", "sup_sober",
                         "irreducible closed sets with suprema are in particular bounded"),
        make_implication("si-minus-implies-irr-continuous", "si_minus_continuous", "irr_continuous",
                         "a directed set below x with supremum x is an irreducible one"),
        make_implication("irr-continuous-and-star-implies-si-minus",
                         "irr_continuous & star", "si_minus_continuous",
                         "the star property turns the irreducible way-below set into a directed "
                         "set with the same supremum"),
        make_implication("si-minus-and-sup-sober-implies-star",
                         "si_minus_continuous & sup_sober", "star",
                         "in a sup-sober SI-minus-continuous space every irreducible set with "
                         "supremum admits a directed set in its down-closure sharing it"),
        make_implication("irr-plus-and-sup-sober-implies-c-space",
                         "irr_plus_continuous & sup_sober", "c_space",
                         "Irr-plus-continuity plus sup-sobriety yields way-inside witnesses for "
                         "every open"),
        make_implication("c-space-and-sup-sober-implies-irr-plus",
                         "c_space & sup_sober", "irr_plus_continuous",
                         "a sup-sober C-space is Irr-continuous with open way-above sets"),
        make_implication("sup-sober-implies-si-fixed", "sup_sober", "si_infty",
                         "sup-sober spaces coincide with their derived topology"),
        make_implication("si-fixed-implies-sup-sober", "si_infty", "sup_sober",
                         "a space equal to its derived topology is sup-sober"),
        make_implication("si-continuity-unfolds", "si_continuous",
                         "si_minus_continuous & oplus",
                         "SI-continuity is SI-minus-continuity with the oplus property"),
        make_implication("si-continuity-folds", "si_minus_continuous & oplus", "si_continuous",
                         "SI-minus-continuity with the oplus property is SI-continuity"),
        make_implication("irr-plus-continuity-unfolds", "irr_plus_continuous",
                         "irr_continuous & oplus",
                         "Irr-plus-continuity is Irr-continuity with the oplus property"),
        make_implication("irr-plus-continuity-folds", "irr_continuous & oplus",
                         "irr_plus_continuous",
                         "Irr-continuity with the oplus property is Irr-plus-continuity"),
    };
    return table;
}

/// Finite-space trivializations: why separating examples need the infinite
/// catalog.  These hold on every finite T0 space and on no wider class.
inline const std::vector<ImplicationSpec>& finite_trivializations() {
    static const std::vector<ImplicationSpec> table = {
        make_implication("finite-spaces-are-sober", "", "sober",
                         "finite irreducible sets have greatest elements, so irreducible closed "
                         "sets are point closures"),
        make_implication("finite-spaces-are-c-spaces", "", "c_space",
                         "up-sets are open in a finite space, so every point witnesses itself"),
        make_implication("finite-spaces-are-si-minus-continuous", "", "si_minus_continuous",
                         "the down-set of x is directed with supremum x"),
        make_implication("finite-spaces-satisfy-star", "", "star",
                         "the greatest element of a finite irreducible set is a directed set "
                         "sharing its supremum"),
        make_implication("finite-spaces-satisfy-oplus", "", "oplus",
                         "way-above sets are up-sets, and up-sets are open"),
        make_implication("finite-spaces-are-si-fixed", "", "si_infty",
                         "finite irreducible sets contain their suprema, so every open survives "
                         "the derivative"),
    };
    return table;
}

// ---------------------------------------------------------------------------
// Structural per-space checks (laws not expressible over flags alone).
// ---------------------------------------------------------------------------

struct SpaceContext {
    FiniteSpace s;
    Poset order;
    IrrPlusTable ip;
    FiniteSpace si;
    PropertyReport report;
    std::vector<PointSet> dd;
    IrrAlgo algo = IrrAlgo::definitional;
    unsigned kelley_budget = 3;
};

inline SpaceContext make_space_context(const FiniteSpace& s, IrrAlgo algo,
                                       unsigned kelley_budget) {
    SpaceContext ctx;
    ctx.s = s;
    ctx.order = specialization(s);
    ctx.ip = irr_plus(s, algo);
    ctx.si = si_derivative(s, algo);
    ctx.report = check_properties(s, algo);
    ctx.dd.resize(s.n);
    for (unsigned x = 0; x < s.n; ++x) ctx.dd[x] = detail::dd_arrow_from(s, ctx.ip, x);
    ctx.algo = algo;
    ctx.kelley_budget = kelley_budget;
    return ctx;
}

struct StructuralCheck {
    std::string name;
    std::string statement;
    std::function<std::optional<std::string>(const SpaceContext&)> run;
};

inline const std::vector<StructuralCheck>& structural_checks() {
    using Result = std::optional<std::string>;
    static const std::vector<StructuralCheck> table = {
        {"way-below-implies-below", "x way-below y forces x below y",
         [](const SpaceContext& c) -> Result {
             for (unsigned y = 0; y < c.s.n; ++y)
                 for (unsigned x : c.dd[y].members(c.s.n))
                     if (!c.s.leq(x, y))
                         return c.s.names[x] + " << " + c.s.names[y] + " but not <=";
             return std::nullopt;
         }},
        {"way-below-respects-order",
         "u below x way-below y below z forces u way-below z",
         [](const SpaceContext& c) -> Result {
             for (unsigned x = 0; x < c.s.n; ++x)
                 for (unsigned y = 0; y < c.s.n; ++y) {
                     if (!c.dd[y].contains(x)) continue;
                     for (unsigned u = 0; u < c.s.n; ++u)
                         for (unsigned z = 0; z < c.s.n; ++z)
                             if (c.s.leq(u, x) && c.s.leq(y, z) && !c.dd[z].contains(u))
                                 return "chain through " + c.s.names[x] + " << " + c.s.names[y] +
                                        " breaks at " + c.s.names[u] + " << " + c.s.names[z];
                 }
             return std::nullopt;
         }},
        {"si-interior-of-upset-implies-way-below",
         "x inside the SI-interior of the up-set of y forces y way-below x",
         [](const SpaceContext& c) -> Result {
             for (unsigned y = 0; y < c.s.n; ++y) {
                 PointSet inner = interior(c.si, c.s.up_set(y));
                 for (unsigned x : inner.members(c.s.n))
                     if (!c.dd[x].contains(y))
                         return c.s.names[x] + " in int_SI(up " + c.s.names[y] +
                                ") without " + c.s.names[y] + " << " + c.s.names[x];
             }
             return std::nullopt;
         }},
        {"m-set-supremum", "in an Irr-continuous space the union of iterated way-below sets "
                           "has supremum x",
         [](const SpaceContext& c) -> Result {
             if (!c.report.irr_continuous) return std::nullopt;
             for (unsigned x = 0; x < c.s.n; ++x) {
                 auto g = sup(c.s, m_set(c.s, x, c.algo));
                 if (!g || *g != x) return "m-set of " + c.s.names[x] + " has wrong supremum";
             }
             return std::nullopt;
         }},
        {"interpolation", "way-below interpolates under Irr-continuity with sup-sobriety, or "
                          "under SI-minus-continuity",
         [](const SpaceContext& c) -> Result {
             bool hyp = (c.report.irr_continuous && c.report.sup_sober) ||
                        c.report.si_minus_continuous;
             if (hyp && !interpolation_holds(c.s, c.algo)) return std::string("no interpolant");
             return std::nullopt;
         }},
        {"way-below-set-irreducible",
         "in a sup-sober space, an irreducible set inside the way-below set of x with supremum "
         "above x makes that way-below set irreducible with supremum x",
         [](const SpaceContext& c) -> Result {
             if (!c.report.sup_sober) return std::nullopt;
             for (unsigned x = 0; x < c.s.n; ++x) {
                 bool hyp = false;
                 for (const auto& [e, g] : c.ip)
                     if (e.subset_of(c.dd[x]) && c.s.leq(x, g)) { hyp = true; break; }
                 if (!hyp) continue;
                 auto g = sup(c.s, c.dd[x]);
                 if (!is_irreducible(c.s, c.dd[x], c.algo) || !g || *g != x)
                     return "way-below set of " + c.s.names[x] + " is not irreducible with supremum x";
             }
             return std::nullopt;
         }},
        {"irreducible-iff-closure-irreducible",
         "a set is irreducible exactly when its closure is",
         [](const SpaceContext& c) -> Result {
             for (std::uint32_t m = 1; m < (1u << c.s.n); ++m) {
                 PointSet e{m};
                 if (is_irreducible(c.s, e, c.algo) !=
                     is_irreducible(c.s, closure(c.s, e), c.algo))
                     return "closure changes irreducibility of mask " + std::to_string(m);
             }
             return std::nullopt;
         }},
        {"directed-iff-alexandroff-irreducible",
         "directed subsets of the order are the irreducible subsets of its up-set topology",
         [](const SpaceContext& c) -> Result {
             for (std::uint32_t m = 1; m < (1u << c.s.n); ++m) {
                 PointSet d{m};
                 if (is_directed(c.order, d) != is_irreducible(c.s, d, c.algo))
                     return "mask " + std::to_string(m) + " splits directedness from "
                            "irreducibility";
             }
             return std::nullopt;
         }},
        {"way-below-shortcut", "on finite carriers way-below coincides with the up-set "
                               "containment test",
         [](const SpaceContext& c) -> Result {
             for (unsigned x = 0; x < c.s.n; ++x)
                 for (unsigned y = 0; y < c.s.n; ++y)
                     if (c.dd[y].contains(x) != c.s.up_set(y).subset_of(c.s.up_set(x)))
                         return "shortcut mismatch at (" + c.s.names[x] + "," + c.s.names[y] + ")";
             return std::nullopt;
         }},
        {"irreducibility-routes-agree",
         "the definitional scan and the greatest-element fast path agree",
         [](const SpaceContext& c) -> Result {
             for (std::uint32_t m = 1; m < (1u << c.s.n); ++m) {
                 PointSet e{m};
                 if (is_irreducible(c.s, e, IrrAlgo::definitional) !=
                     irreducible_has_greatest_fastpath(c.s, e))
                     return "routes disagree on mask " + std::to_string(m);
             }
             return std::nullopt;
         }},
        {"derivative-is-identity", "finite spaces equal their derived topology, with the "
                                   "fixpoint index at zero",
         [](const SpaceContext& c) -> Result {
             if (c.si.opens != c.s.opens) return std::string("derivative dropped an open");
             auto t = si_iterate(c.s, 3, c.algo);
             if (!t.gamma || *t.gamma != 0) return std::string("fixpoint index is not zero");
             return std::nullopt;
         }},
        {"derivative-preserves-structure",
         "the derivative keeps the specialization order, stays coarser, preserves clopens, and "
         "closed-set verdicts match complements",
         [](const SpaceContext& c) -> Result {
             if (!(specialization(c.si) == c.order))
                 return std::string("specialization changed");
             for (PointSet u : c.si.opens)
                 if (!c.s.is_open(u)) return std::string("derivative invented an open");
             for (std::uint32_t m = 0; m < (1u << c.s.n); ++m) {
                 PointSet a{m};
                 bool clopen_s = c.s.is_open(a) && c.s.is_closed(a);
                 bool clopen_si = c.si.is_open(a) && c.si.is_closed(a);
                 if (clopen_s != clopen_si) return std::string("clopen family changed");
                 if (c.s.is_closed(a) &&
                     si_closed_check(c.s, a, c.algo) !=
                         c.si.is_open(complement(a, c.s.n)))
                     return std::string("closed-set check disagrees with complement");
             }
             return std::nullopt;
         }},
        {"opens-are-upsets", "the open sets are exactly the up-sets of the specialization "
                             "order, and the Alexandroff round trip is the identity",
         [](const SpaceContext& c) -> Result {
             FiniteSpace ax = alexandroff(c.order);
             if (!(ax.opens == c.s.opens)) return std::string("up-set family differs");
             FiniteSpace rebuilt = from_opens(c.s.names, c.s.opens);
             if (!(rebuilt == c.s)) return std::string("rebuild from opens differs");
             return std::nullopt;
         }},
        {"closure-interior-calculus",
         "closure and interior are monotone, idempotent and dual under complement",
         [](const SpaceContext& c) -> Result {
             for (std::uint32_t m = 0; m < (1u << c.s.n); ++m) {
                 PointSet a{m};
                 PointSet cl = closure(c.s, a);
                 if (!(closure(c.s, cl) == cl)) return std::string("closure not idempotent");
                 if (!(interior(c.s, a) ==
                       complement(closure(c.s, complement(a, c.s.n)), c.s.n)))
                     return std::string("duality fails");
                 PointSet b{(m >> 1) & m}; // a subset of a
                 if (!closure(c.s, b).subset_of(cl)) return std::string("closure not monotone");
             }
             return std::nullopt;
         }},
        {"kelley-axioms", "the Irr-convergence class satisfies all four convergence-class axioms",
         [](const SpaceContext& c) -> Result {
             for (auto ax : {KelleyAxiom::constants, KelleyAxiom::subnets,
                             KelleyAxiom::divergence, KelleyAxiom::iterated_limits}) {
                 auto r = kelley_check(c.s, ax, c.kelley_budget, c.algo);
                 if (!r.passed) return r.detail;
             }
             return std::nullopt;
         }},
        {"convergence-coincidence",
         "topological convergence and Irr-convergence coincide and both induce the original "
         "topology",
         [](const SpaceContext& c) -> Result {
             for (std::uint32_t m = 1; m < (1u << c.s.n); ++m) {
                 TailClass tc{PointSet{m}};
                 for (unsigned y = 0; y < c.s.n; ++y) {
                     bool irr = irr_converges(c.s, c.ip, tc, y);
                     if (irr != topological_converges(c.s, tc, y))
                         return std::string("verdicts split");
                     if (irr != irr_converges_shortcut(c.s, tc, y))
                         return std::string("closed form disagrees");
                 }
             }
             FiniteSpace ind = induced_topology(c.s, irr_class(c.s, c.algo));
             if (!(ind.opens == c.s.opens)) return std::string("induced topology differs");
             return std::nullopt;
         }},
        {"location-degenerate", "the derived, induced and original topologies coincide on "
                                "finite spaces",
         [](const SpaceContext& c) -> Result {
             auto rep = location_check(c.s, c.algo);
             if (!rep.passed || !rep.all_equal) return std::string("location containments broke");
             return std::nullopt;
         }},
        {"constants-downward", "a constant net converges, both ways, exactly to the points "
                               "below its value",
         [](const SpaceContext& c) -> Result {
             for (unsigned x = 0; x < c.s.n; ++x) {
                 TailClass tc{PointSet::singleton(x)};
                 for (unsigned y = 0; y < c.s.n; ++y) {
                     bool expected = c.s.leq(y, x);
                     if (irr_converges(c.s, c.ip, tc, y) != expected ||
                         topological_converges(c.s, tc, y) != expected)
                         return "constant at " + c.s.names[x] + " misconverges to " +
                                c.s.names[y];
                 }
             }
             return std::nullopt;
         }},
        {"way-below-through-convergence",
         "nets Irr-converging to y are eventually above the way-below set of y, and on "
         "Irr-continuous spaces that property characterises convergence",
         [](const SpaceContext& c) -> Result {
             for (std::uint32_t m = 1; m < (1u << c.s.n); ++m) {
                 TailClass tc{PointSet{m}};
                 for (unsigned y = 0; y < c.s.n; ++y) {
                     bool conv = irr_converges(c.s, c.ip, tc, y);
                     bool bounds = true;
                     for (unsigned x : c.dd[y].members(c.s.n))
                         if (!tc.cofinal.subset_of(c.s.up_set(x))) { bounds = false; break; }
                     if (conv && !bounds) return std::string("forward direction fails");
                     if (c.report.irr_continuous && bounds && !conv)
                         return std::string("converse direction fails");
                 }
             }
             return std::nullopt;
         }},
        {"irr-plus-contains-suprema", "finite irreducible sets contain their suprema",
         [](const SpaceContext& c) -> Result {
             for (const auto& [e, g] : c.ip)
                 if (!e.contains(g)) return std::string("a supremum escapes its set");
             return std::nullopt;
         }},
        {"minimal-neighborhoods", "the minimal open neighborhood of x is open and equals the "
                                  "up-set of x; the empty supremum is the least element",
         [](const SpaceContext& c) -> Result {
             for (unsigned x = 0; x < c.s.n; ++x) {
                 PointSet mn = min_open_nbhd(c.s, x);
                 if (!c.s.is_open(mn)) return std::string("minimal neighborhood not open");
                 if (!(mn == c.order.up_set(x))) return std::string("minimal neighborhood is "
                                                                    "not the up-set");
             }
             auto empty_sup = sup(c.s, PointSet::empty_set());
             auto least = least_element(c.order);
             if (empty_sup.has_value() != least.has_value() ||
                 (least && *empty_sup != *least))
                 return std::string("empty supremum disagrees with the least element");
             return std::nullopt;
         }},
    };
    return table;
}

// ---------------------------------------------------------------------------
// Suite driver.
// ---------------------------------------------------------------------------

struct SuiteViolation {
    std::string space;
    std::string implication;
    std::string statement;
    std::string witness;
};

struct SuiteResult {
    unsigned long long spaces_checked = 0;
    std::vector<SuiteViolation> violations;

    bool passed() const { return violations.empty(); }
};

struct SuiteOptions {
    unsigned kelley_budget_small = 3; // n <= 4
    unsigned kelley_budget_large = 2; // n == 5, to keep the sweep desk-sized
    bool fast_irreducibility_at_5 = true;
};

inline void run_space_checks(const FiniteSpace& s, IrrAlgo algo, unsigned kelley_budget,
                             SuiteResult& out) {
    SpaceContext ctx = make_space_context(s, algo, kelley_budget);
    const std::string label = space_label(s);
    for (const auto& imp : shared_implications())
        if (imp.hypothesis.eval(ctx.report) && !imp.conclusion.eval(ctx.report))
            out.violations.push_back({label, imp.name, imp.statement, "flag table"});
    for (const auto& imp : finite_trivializations())
        if (imp.hypothesis.eval(ctx.report) && !imp.conclusion.eval(ctx.report))
            out.violations.push_back({label, imp.name, imp.statement, "flag table"});
    for (const auto& chk : structural_checks())
        if (auto bad = chk.run(ctx))
            out.violations.push_back({label, chk.name, chk.statement, *bad});
    ++out.spaces_checked;
}

/// Enumerates every labeled space up to max_n points and asserts every law.
inline SuiteResult run_implication_suite(unsigned max_n, const SuiteOptions& opt = {}) {
    if (max_n < 1 || max_n > 5)
        throw TooLargeError("the default suite runs on 1..5 points");
    SuiteResult out;
    for (unsigned n = 1; n <= max_n; ++n) {
        auto posets = enumerate_posets(n, false);
        if (posets.size() != kLabeledPosetCounts[n]) {
            out.violations.push_back({"n=" + std::to_string(n), "enumeration-counts",
                                      "labeled poset counts match the classical sequence",
                                      std::to_string(posets.size()) + " enumerated"});
            continue;
        }
        const IrrAlgo algo = (n == 5 && opt.fast_irreducibility_at_5)
                                 ? IrrAlgo::greatest_element
                                 : IrrAlgo::definitional;
        const unsigned budget = n <= 4 ? opt.kelley_budget_small : opt.kelley_budget_large;
        for (const Poset& p : posets) run_space_checks(alexandroff(p), algo, budget, out);
    }
    return out;
}

/// First enumerated space satisfying the query, if any.
inline std::optional<FiniteSpace> find_counterexample(const std::string& query, unsigned max_n) {
    if (max_n < 1 || max_n > 6)
        throw TooLargeError("counterexample search runs on 1..6 points");
    QueryExpr q = parse_query(query);
    for (unsigned n = 1; n <= max_n; ++n)
        for (const Poset& p : enumerate_posets(n, false)) {
            FiniteSpace s = alexandroff(p);
            if (q.eval(check_properties(s, IrrAlgo::greatest_element))) return s;
        }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// The catalog suite: the frozen example matrix, asserted as data.
// ---------------------------------------------------------------------------

inline SuiteResult catalog_suite(int fuel = 8) {
    SuiteResult out;
    struct Expected {
        std::string space;
        std::map<std::string, bool> flags;
    };
    // The expected matrix is spelled out here independently of the frozen
    // tables it checks.
    const std::vector<Expected> matrix = {
        {"cofinite-nat",
         {{"sober", false}, {"bounded_sober", true}, {"sup_sober", true},
          {"irr_continuous", true}, {"si_minus_continuous", true}, {"si_continuous", false},
          {"irr_plus_continuous", false}, {"oplus", false}, {"star", true},
          {"c_space", false}, {"si_infty", true}}},
        {"omega-plus-one",
         {{"sober", false}, {"bounded_sober", false}, {"sup_sober", false},
          {"irr_continuous", true}, {"si_minus_continuous", true}, {"si_continuous", true},
          {"irr_plus_continuous", true}, {"oplus", true}, {"star", true},
          {"c_space", true}, {"si_infty", false}}},
        {"poset-t",
         {{"sober", false}, {"bounded_sober", false}, {"sup_sober", false},
          {"irr_continuous", false}, {"si_minus_continuous", false}, {"si_continuous", false},
          {"irr_plus_continuous", false}, {"oplus", true}, {"star", true},
          {"c_space", true}, {"si_infty", false}}},
        {"rational-scott",
         {{"sober", false}, {"bounded_sober", true}, {"sup_sober", true},
          {"irr_continuous", true}, {"si_minus_continuous", true}, {"si_continuous", true},
          {"irr_plus_continuous", true}, {"oplus", true}, {"star", true},
          {"c_space", true}, {"si_infty", true}}},
    };

    for (const auto& expected : matrix) {
        const CatalogSpace& sp = catalog_get(expected.space);
        ++out.spaces_checked;
        PropertyReport rep = sp.properties();
        for (const auto& [flag, want] : expected.flags)
            if (property_flag(rep, flag) != want)
                out.violations.push_back({expected.space, "catalog-matrix:" + flag,
                                          "the frozen example matrix", flag});
        for (const auto& imp : shared_implications())
            if (imp.hypothesis.eval(rep) && !imp.conclusion.eval(rep))
                out.violations.push_back({expected.space, imp.name, imp.statement, "flag table"});
        try {
            validate_catalog(sp, fuel);
        } catch (const OracleMismatchError& e) {
            out.violations.push_back({expected.space, "validate-catalog",
                                      "all frozen oracles survive definitional probing",
                                      e.what()});
        }
        auto loc = location_check(sp, fuel);
        if (!loc.passed)
            out.violations.push_back({expected.space, "location",
                                      "the induced topology sits between the derived and the "
                                      "original one", "containment probe failed"});
        if (!catalog_interpolation_probe(sp, fuel))
            out.violations.push_back({expected.space, "interpolation",
                                      "way-below interpolates on the truncation", "probe failed"});
    }

    // Convergence behavior pinned per space: the coincidence on the
    // sup-sober C-space and the three separations elsewhere.
    {
        const CatalogSpace& rs = catalog_get("rational-scott");
        const auto trunc = rs.truncation(fuel);
        std::vector<CatalogNetSpec> stock;
        for (const auto& v : trunc) stock.push_back(CatalogNetSpec::constant(v));
        stock.push_back(CatalogNetSpec::periodic({trunc[0], trunc[trunc.size() - 1]}));
        stock.push_back(CatalogNetSpec::monotone(MonotoneGen::one_minus_one_over_n));
        for (const auto& net : stock)
            for (const auto& y : trunc)
                if (rs.topological_converges(net, y) != rs.irr_converges(net, y)) {
                    out.violations.push_back({"rational-scott", "convergence-coincidence",
                                              "on a sup-sober C-space the two convergences agree",
                                              rs.point_label(y)});
                    break;
                }

        const CatalogSpace& om = catalog_get("omega-plus-one");
        auto mono = CatalogNetSpec::monotone(MonotoneGen::nat);
        if (!(om.irr_converges(mono, CatalogPoint::make_inf()) &&
              !om.topological_converges(mono, CatalogPoint::make_inf())))
            out.violations.push_back({"omega-plus-one", "separation-witness",
                                      "the ascending net Irr-converges to inf but never enters "
                                      "{inf}", "witness net"});

        const CatalogSpace& pt = catalog_get("poset-t");
        if (!(pt.irr_converges(mono, CatalogPoint::make_top()) &&
              !pt.topological_converges(mono, CatalogPoint::make_top())))
            out.violations.push_back({"poset-t", "separation-witness",
                                      "the chain net Irr-converges to top without entering its "
                                      "neighborhood", "witness net"});

        const CatalogSpace& cn = catalog_get("cofinite-nat");
        if (!(cn.topological_converges(mono, CatalogPoint::make_nat(0)) &&
              !cn.irr_converges(mono, CatalogPoint::make_nat(0))))
            out.violations.push_back({"cofinite-nat", "separation-witness",
                                      "the enumeration net converges topologically everywhere "
                                      "yet Irr-converges nowhere", "witness net"});

        // The way-below example behind the failed continuity of T.
        if (pt.way_below(CatalogPoint::make_nat(1), CatalogPoint::make_a()))
            out.violations.push_back({"poset-t", "way-below-a",
                                      "the way-below set of a is exactly {bot}", "1 << a"});
        auto tr = om.si_iterate(3);
        if (!tr.gamma || *tr.gamma != 1)
            out.violations.push_back({"omega-plus-one", "gamma",
                                      "the derivative reaches its fixpoint after one step",
                                      "trace"});
    }
    return out;
}

} // namespace irrtop

#endif
