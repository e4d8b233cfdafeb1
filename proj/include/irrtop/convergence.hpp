#ifndef IRRTOP_CONVERGENCE_HPP
#define IRRTOP_CONVERGENCE_HPP

#include <functional>
#include <numeric>
#include <string>
#include <vector>

#include "irrtop/properties.hpp"

namespace irrtop {

// ---------------------------------------------------------------------------
// Net indexes.  A net index is a directed pre-order (cycles allowed); the
// "everything related" pre-order is what realizes arbitrary tail classes on
// a finite index.
// ---------------------------------------------------------------------------

struct PreorderIndex {
    unsigned size = 0;
    std::vector<std::uint8_t> le_; // le_[i*size + j]: i <= j

    bool le(unsigned i, unsigned j) const { return le_[i * size + j] != 0; }

    bool directed() const {
        for (unsigned i = 0; i < size; ++i)
            for (unsigned j = 0; j < size; ++j) {
                bool ub = false;
                for (unsigned k = 0; k < size && !ub; ++k)
                    if (le(i, k) && le(j, k)) ub = true;
                if (!ub) return false;
            }
        return size > 0;
    }

    /// Some element above every element (exists whenever the index is
    /// directed and finite).
    unsigned top_like() const {
        for (unsigned k = 0; k < size; ++k) {
            bool ub = true;
            for (unsigned i = 0; i < size && ub; ++i)
                if (!le(i, k)) ub = false;
            if (ub) return k;
        }
        throw Error("finite index is not directed");
    }

    static PreorderIndex chain(unsigned k) {
        PreorderIndex p;
        p.size = k;
        p.le_.assign(k * k, 0);
        for (unsigned i = 0; i < k; ++i)
            for (unsigned j = i; j < k; ++j) p.le_[i * k + j] = 1;
        return p;
    }
    static PreorderIndex all_related(unsigned k) {
        PreorderIndex p;
        p.size = k;
        p.le_.assign(k * k, 1);
        return p;
    }
};

/// A net over a finite space with a finite directed pre-order index.
struct FiniteIndexNet {
    PreorderIndex index;
    std::vector<unsigned> values;

    static FiniteIndexNet make(PreorderIndex idx, std::vector<unsigned> values) {
        if (idx.size != values.size()) throw Error("net values must cover the index");
        if (!idx.directed()) throw Error("net index must be directed");
        FiniteIndexNet n;
        n.index = std::move(idx);
        n.values = std::move(values);
        return n;
    }
};

/// A natural-number-indexed net over a finite space: a finite prefix followed
/// by a repeating period (a constant tail is a period of length one).
struct NatNet {
    std::vector<unsigned> prefix;
    std::vector<unsigned> period; // nonempty

    static NatNet make(std::vector<unsigned> prefix, std::vector<unsigned> period) {
        if (period.empty()) throw Error("nat-indexed net needs a nonempty period");
        NatNet n;
        n.prefix = std::move(prefix);
        n.period = std::move(period);
        return n;
    }
    static NatNet constant(unsigned x) { return make({}, {x}); }

    unsigned at(std::size_t i) const {
        if (i < prefix.size()) return prefix[i];
        return period[(i - prefix.size()) % period.size()];
    }
};

// ---------------------------------------------------------------------------
// TailClass: the canonical quotient of a net over a finite space.  The set of
// cofinally occurring points determines every convergence verdict.
// ---------------------------------------------------------------------------

struct TailClass {
    PointSet cofinal; // nonempty
};

inline TailClass tail_class_of(const FiniteSpace& s, const FiniteIndexNet& net) {
    unsigned top = net.index.top_like();
    PointSet c;
    for (unsigned j = 0; j < net.index.size; ++j)
        if (net.index.le(top, j)) {
            if (net.values[j] >= s.n) throw Error("net value escapes the carrier");
            c = c.with(net.values[j]);
        }
    return TailClass{c};
}

inline TailClass tail_class_of(const FiniteSpace& s, const NatNet& net) {
    PointSet c;
    for (unsigned v : net.period) {
        if (v >= s.n) throw Error("net value escapes the carrier");
        c = c.with(v);
    }
    return TailClass{c};
}

// ---------------------------------------------------------------------------
// Convergence verdicts.
// ---------------------------------------------------------------------------

using IrrPlusTable = std::vector<std::pair<PointSet, unsigned>>;

/// Topological convergence: the net is eventually inside every open
/// neighborhood of x, i.e. the cofinal points sit inside the minimal one.
inline bool topological_converges(const FiniteSpace& s, TailClass c, unsigned x) {
    return c.cofinal.subset_of(min_open_nbhd(s, x));
}

/// Irr-convergence: some irreducible set with supremum above y consists of
/// eventual lower bounds of the net.  e is an eventual lower bound exactly
/// when the cofinal points sit in the up-set of e.
inline bool irr_converges(const FiniteSpace& s, const IrrPlusTable& ip, TailClass c,
                          unsigned y) {
    for (const auto& [e, g] : ip) {
        if (!s.leq(y, g)) continue;
        bool all_lb = true;
        for (unsigned pt : e.members(s.n))
            if (!c.cofinal.subset_of(s.up_set(pt))) { all_lb = false; break; }
        if (all_lb) return true;
    }
    return false;
}

inline bool irr_converges(const FiniteSpace& s, TailClass c, unsigned y,
                          IrrAlgo algo = IrrAlgo::definitional) {
    return irr_converges(s, irr_plus(s, algo), c, y);
}

/// The finite-space closed form of Irr-convergence; must agree with the
/// definitional scan (asserted in the suites).
inline bool irr_converges_shortcut(const FiniteSpace& s, TailClass c, unsigned y) {
    return c.cofinal.subset_of(s.up_set(y));
}

// Definitional verdicts evaluated on a concrete finite-index net, without
// the tail-class quotient.  Used to replay axiom instances faithfully.

inline bool net_eventually_in(const FiniteIndexNet& net, PointSet u) {
    for (unsigned i0 = 0; i0 < net.index.size; ++i0) {
        bool ok = true;
        for (unsigned i = 0; i < net.index.size && ok; ++i)
            if (net.index.le(i0, i) && !u.contains(net.values[i])) ok = false;
        if (ok) return true;
    }
    return false;
}

inline bool topological_converges(const FiniteSpace& s, const FiniteIndexNet& net,
                                  unsigned x) {
    for (PointSet u : s.opens)
        if (u.contains(x) && !net_eventually_in(net, u)) return false;
    return true;
}

inline bool irr_converges(const FiniteSpace& s, const IrrPlusTable& ip,
                          const FiniteIndexNet& net, unsigned y) {
    for (const auto& [e, g] : ip) {
        if (!s.leq(y, g)) continue;
        bool all_lb = true;
        for (unsigned pt : e.members(s.n))
            if (!net_eventually_in(net, s.up_set(pt))) { all_lb = false; break; }
        if (all_lb) return true;
    }
    return false;
}

// ---------------------------------------------------------------------------
// Subnets: y_j = x_{g(j)} where g eventually dominates every index.
// ---------------------------------------------------------------------------

inline FiniteIndexNet subnet(const FiniteIndexNet& parent, const PreorderIndex& j_index,
                             const std::vector<unsigned>& selector) {
    if (selector.size() != j_index.size) throw Error("selector must cover the subnet index");
    for (unsigned g : selector)
        if (g >= parent.index.size) throw Error("selector escapes the parent index");
    // For each parent index i there must be a threshold j' past which the
    // selector stays above i.
    for (unsigned i = 0; i < parent.index.size; ++i) {
        bool found = false;
        for (unsigned jp = 0; jp < j_index.size && !found; ++jp) {
            bool ok = true;
            for (unsigned j = 0; j < j_index.size && ok; ++j)
                if (j_index.le(jp, j) && !parent.index.le(i, selector[j])) ok = false;
            if (ok) found = true;
        }
        if (!found) throw NotCofinalError("selector is not eventually above every parent index");
    }
    std::vector<unsigned> vals(j_index.size);
    for (unsigned j = 0; j < j_index.size; ++j) vals[j] = parent.values[selector[j]];
    return FiniteIndexNet::make(j_index, std::move(vals));
}

/// Subnet of a parent through a cofinal subset of its own index.
inline FiniteIndexNet subnet_by_subset(const FiniteIndexNet& parent,
                                       const std::vector<unsigned>& picks) {
    if (picks.empty()) throw NotCofinalError("empty subsets are never cofinal");
    PreorderIndex j;
    j.size = static_cast<unsigned>(picks.size());
    j.le_.assign(j.size * j.size, 0);
    for (unsigned a = 0; a < j.size; ++a)
        for (unsigned b = 0; b < j.size; ++b)
            j.le_[a * j.size + b] = parent.index.le(picks[a], picks[b]) ? 1 : 0;
    if (!j.directed()) throw NotCofinalError("selected subset is not a directed sub-index");
    return subnet(parent, j, picks);
}

/// Subnet of a nat-indexed net through j -> a*j + b; a >= 1 keeps it cofinal.
inline NatNet subnet_affine(const NatNet& parent, unsigned a, unsigned b) {
    if (a < 1) throw NotCofinalError("a constant-index selector is not cofinal");
    const std::size_t lead = parent.prefix.size() + b + 1;
    std::size_t k0 = 0;
    while (static_cast<std::size_t>(a) * k0 + b < lead) ++k0;
    std::vector<unsigned> prefix, period;
    for (std::size_t j = 0; j < k0; ++j) prefix.push_back(parent.at(a * j + b));
    const std::size_t plen = parent.period.size();
    for (std::size_t j = k0; j < k0 + plen; ++j) period.push_back(parent.at(a * j + b));
    return NatNet::make(std::move(prefix), std::move(period));
}

// ---------------------------------------------------------------------------
// Kelley's axioms.
// ---------------------------------------------------------------------------

enum class KelleyAxiom { constants, subnets, divergence, iterated_limits };

struct KelleyReport {
    KelleyAxiom axiom{};
    bool passed = false;
    unsigned instances_checked = 0;
    std::string detail;
};

namespace detail {

/// Builds the I x M product net of the iterated-limits axiom: M is the
/// product of the inner indexes ordered pointwise, and the value at (i, f)
/// is inner_i(f(i)).
inline FiniteIndexNet product_net(const FiniteIndexNet& outer,
                                  const std::vector<FiniteIndexNet>& inner) {
    const unsigned k = outer.index.size;
    std::vector<unsigned> radix(k);
    std::size_t msize = 1;
    for (unsigned i = 0; i < k; ++i) {
        radix[i] = inner[i].index.size;
        msize *= radix[i];
    }
    const std::size_t total = msize * k;
    if (total > 4096) throw BudgetExceededError("product index too large to enumerate");

    auto tuple_of = [&](std::size_t m) {
        std::vector<unsigned> f(k);
        for (unsigned i = 0; i < k; ++i) {
            f[i] = static_cast<unsigned>(m % radix[i]);
            m /= radix[i];
        }
        return f;
    };

    PreorderIndex prod;
    prod.size = static_cast<unsigned>(total);
    prod.le_.assign(total * total, 0);
    std::vector<std::vector<unsigned>> tuples(msize);
    for (std::size_t m = 0; m < msize; ++m) tuples[m] = tuple_of(m);

    auto flat = [&](unsigned i, std::size_t m) { return m * k + i; };
    for (unsigned i = 0; i < k; ++i)
        for (std::size_t m = 0; m < msize; ++m)
            for (unsigned i2 = 0; i2 < k; ++i2)
                for (std::size_t m2 = 0; m2 < msize; ++m2) {
                    if (!outer.index.le(i, i2)) continue;
                    bool le = true;
                    for (unsigned t = 0; t < k && le; ++t)
                        if (!inner[t].index.le(tuples[m][t], tuples[m2][t])) le = false;
                    if (le) prod.le_[flat(i, m) * total + flat(i2, m2)] = 1;
                }

    std::vector<unsigned> vals(total);
    for (unsigned i = 0; i < k; ++i)
        for (std::size_t m = 0; m < msize; ++m)
            vals[flat(i, m)] = inner[i].values[tuples[m][i]];
    return FiniteIndexNet::make(std::move(prod), std::move(vals));
}

/// A finite-index net with the "everything related" index whose tail class
/// is exactly the given set of points.
inline FiniteIndexNet cycler(PointSet c, unsigned n) {
    std::vector<unsigned> vals = c.members(n);
    const unsigned k = static_cast<unsigned>(vals.size());
    return FiniteIndexNet::make(PreorderIndex::all_related(k), std::move(vals));
}

} // namespace detail

inline KelleyReport kelley_check(const FiniteSpace& s, KelleyAxiom axiom, unsigned budget,
                                 IrrAlgo algo = IrrAlgo::definitional) {
    if (budget < 1 || budget > 4)
        throw BudgetExceededError("kelley_check supports budgets 1..4");
    const auto ip = irr_plus(s, algo);
    KelleyReport rep;
    rep.axiom = axiom;
    rep.passed = true;

    switch (axiom) {
    case KelleyAxiom::constants: {
        for (unsigned x = 0; x < s.n; ++x) {
            ++rep.instances_checked;
            if (!irr_converges(s, ip, TailClass{PointSet::singleton(x)}, x)) {
                rep.passed = false;
                rep.detail = "constant net at " + s.names[x] + " fails to Irr-converge to it";
                return rep;
            }
        }
        break;
    }
    case KelleyAxiom::subnets: {
        // A subnet's tail class is a nonempty subset of its parent's; every
        // such subset is realizable, so the sweep is exhaustive.
        for (std::uint32_t m = 1; m < (1u << s.n); ++m) {
            PointSet c{m};
            for (std::uint32_t sub = m;; sub = (sub - 1) & m) {
                if (sub != 0) {
                    for (unsigned x = 0; x < s.n; ++x) {
                        ++rep.instances_checked;
                        if (irr_converges(s, ip, TailClass{c}, x) &&
                            !irr_converges(s, ip, TailClass{PointSet{sub}}, x)) {
                            rep.passed = false;
                            rep.detail = "a subnet lost a convergence target at " + s.names[x];
                            return rep;
                        }
                    }
                }
                if (sub == 0) break;
            }
        }
        break;
    }
    case KelleyAxiom::divergence: {
        for (std::uint32_t m = 1; m < (1u << s.n); ++m) {
            PointSet c{m};
            for (unsigned x = 0; x < s.n; ++x) {
                if (irr_converges(s, ip, TailClass{c}, x)) continue;
                ++rep.instances_checked;
                bool found = false;
                for (std::uint32_t sub = m; sub != 0 && !found; sub = (sub - 1) & m) {
                    bool none = true;
                    for (std::uint32_t sub2 = sub; sub2 != 0 && none; sub2 = (sub2 - 1) & sub)
                        if (irr_converges(s, ip, TailClass{PointSet{sub2}}, x)) none = false;
                    if (none) {
                        found = true;
                        if (rep.detail.empty())
                            rep.detail = "witness subnet tail-class mask " + std::to_string(sub);
                    }
                }
                if (!found) {
                    rep.passed = false;
                    rep.detail = "no subnet of a divergent net avoids converging to " + s.names[x];
                    return rep;
                }
            }
        }
        break;
    }
    case KelleyAxiom::iterated_limits: {
        // Instance sweep: outer nets realize every tail class C inside the
        // up-set of x with |C| <= budget; inner nets realize every tail
        // class inside the up-set of the outer value they refine.
        for (unsigned x = 0; x < s.n; ++x) {
            for (std::uint32_t m = 1; m < (1u << s.n); ++m) {
                PointSet c{m};
                if (!c.subset_of(s.up_set(x)) || c.count() > budget) continue;
                FiniteIndexNet outer = detail::cycler(c, s.n);
                const unsigned k = outer.index.size;
                std::vector<std::vector<PointSet>> cand(k);
                for (unsigned i = 0; i < k; ++i) {
                    PointSet upv = s.up_set(outer.values[i]);
                    for (std::uint32_t mm = 1; mm < (1u << s.n); ++mm) {
                        PointSet ci{mm};
                        if (ci.subset_of(upv) && ci.count() <= budget) cand[i].push_back(ci);
                    }
                }
                std::vector<std::size_t> pick(k, 0);
                while (true) {
                    std::vector<FiniteIndexNet> inner;
                    inner.reserve(k);
                    for (unsigned i = 0; i < k; ++i)
                        inner.push_back(detail::cycler(cand[i][pick[i]], s.n));
                    FiniteIndexNet prod = detail::product_net(outer, inner);
                    ++rep.instances_checked;

                    // Hypotheses replayed definitionally on the concrete nets.
                    bool hyp = irr_converges(s, ip, outer, x);
                    for (unsigned i = 0; i < k && hyp; ++i)
                        hyp = irr_converges(s, ip, inner[i], outer.values[i]);
                    bool concl = irr_converges(s, ip, prod, x);
                    bool concl_tc = irr_converges(s, ip, tail_class_of(s, prod), x);
                    if (concl != concl_tc) {
                        rep.passed = false;
                        rep.detail = "product-net verdict disagrees with its tail class";
                        return rep;
                    }
                    if (hyp && !concl) {
                        rep.passed = false;
                        rep.detail = "iterated limit fails to Irr-converge to " + s.names[x];
                        return rep;
                    }

                    unsigned d = 0;
                    while (d < k && ++pick[d] == cand[d].size()) pick[d++] = 0;
                    if (d == k) break;
                }
            }
        }
        break;
    }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Convergence classes and induced topologies.
// ---------------------------------------------------------------------------

/// A convergence class over a finite space, as a total decidable relation
/// between tail classes and points.
struct ConvergenceClass {
    unsigned n = 0;
    std::function<bool(TailClass, unsigned)> rel;
};

inline ConvergenceClass irr_class(const FiniteSpace& s, IrrAlgo algo = IrrAlgo::definitional) {
    auto ip = irr_plus(s, algo);
    FiniteSpace copy = s;
    return ConvergenceClass{
        s.n, [copy, ip](TailClass c, unsigned y) { return irr_converges(copy, ip, c, y); }};
}

inline ConvergenceClass topological_class(const FiniteSpace& s) {
    FiniteSpace copy = s;
    return ConvergenceClass{
        s.n, [copy](TailClass c, unsigned x) { return topological_converges(copy, c, x); }};
}

/// The topology induced by a convergence class: U is open when every
/// (tail class, point) pair of the class with the point in U keeps the tail
/// class inside U.  Point names are taken from `s`.
inline FiniteSpace induced_topology(const FiniteSpace& s, const ConvergenceClass& cls) {
    std::set<PointSet> family;
    for (std::uint32_t m = 0; m < (1u << s.n); ++m) {
        PointSet u{m};
        bool open = true;
        for (std::uint32_t cm = 1; cm < (1u << s.n) && open; ++cm) {
            TailClass c{PointSet{cm}};
            for (unsigned x = 0; x < s.n && open; ++x)
                if (u.contains(x) && cls.rel(c, x) && !c.cofinal.subset_of(u)) open = false;
        }
        if (open) family.insert(u);
    }
    return detail::finish_space(s.n, s.names, std::move(family));
}

/// Verifies the containment characterisation: tau(s) within tau(sigma) holds
/// exactly when sigma-convergence is contained in tau-convergence.  Returns
/// whether the equivalence held (a false return signals a defect).
inline bool class_containment_check(const FiniteSpace& s, const FiniteSpace& sigma) {
    if (s.n != sigma.n) throw Error("class_containment_check requires a common carrier");
    bool tau_in_sigma = true;
    for (PointSet u : s.opens)
        if (!sigma.is_open(u)) { tau_in_sigma = false; break; }
    bool classes_contained = true;
    for (std::uint32_t m = 1; m < (1u << s.n) && classes_contained; ++m)
        for (unsigned x = 0; x < s.n && classes_contained; ++x)
            if (topological_converges(sigma, TailClass{PointSet{m}}, x) &&
                !topological_converges(s, TailClass{PointSet{m}}, x))
                classes_contained = false;
    return tau_in_sigma == classes_contained;
}

// ---------------------------------------------------------------------------
// Locating the induced topology between the derived and the original one.
// ---------------------------------------------------------------------------

struct LocationReport {
    bool si_within_induced = false;
    bool induced_within_tau = false;
    bool second_containment_checked = false;
    bool all_equal = false;
    std::vector<std::string> notes;
    bool passed = false;
};

inline LocationReport location_check(const FiniteSpace& s,
                                     IrrAlgo algo = IrrAlgo::definitional) {
    LocationReport rep;
    FiniteSpace si = si_derivative(s, algo);
    FiniteSpace ind = induced_topology(s, irr_class(s, algo));
    rep.si_within_induced = true;
    for (PointSet u : si.opens)
        if (!ind.is_open(u)) { rep.si_within_induced = false; break; }
    PropertyReport pr = check_properties(s, algo);
    rep.second_containment_checked = pr.oplus || pr.si_continuous;
    rep.induced_within_tau = true;
    for (PointSet u : ind.opens)
        if (!s.is_open(u)) { rep.induced_within_tau = false; break; }
    rep.all_equal = si.opens == s.opens && ind.opens == s.opens;
    rep.passed = rep.si_within_induced &&
                 (!rep.second_containment_checked || rep.induced_within_tau);
    if (rep.all_equal) rep.notes.push_back("derived, induced and original topologies coincide");
    return rep;
}

// ---------------------------------------------------------------------------
// The convergence characterisation of the way-below relation.
// ---------------------------------------------------------------------------

struct WayBelowConvergenceReport {
    bool passed = false;
    unsigned instances_checked = 0;
    std::vector<std::string> notes;
};

/// Checks, exhaustively over tail classes, that a net Irr-converging to y
/// eventually sits above each point way-below y; on Irr- or SI-minus-
/// continuous spaces also checks the converse.
inline WayBelowConvergenceReport way_below_convergence_char(const FiniteSpace& s, unsigned x,
                                                            unsigned y,
                                                            IrrAlgo algo = IrrAlgo::definitional) {
    WayBelowConvergenceReport rep;
    rep.passed = true;
    const auto ip = irr_plus(s, algo);
    const bool wb = way_below_irr(s, x, y, algo);
    if (!wb) rep.notes.push_back(s.names[x] + " is not way-below " + s.names[y] +
                                 "; the forward direction is vacuous for it");
    PropertyReport pr = check_properties(s, algo);
    PointSet dd = dd_arrow(s, y, algo);
    for (std::uint32_t m = 1; m < (1u << s.n); ++m) {
        TailClass c{PointSet{m}};
        ++rep.instances_checked;
        bool conv = irr_converges(s, ip, c, y);
        if (conv && wb && !c.cofinal.subset_of(s.up_set(x))) {
            rep.passed = false;
            rep.notes.push_back("net converging to " + s.names[y] +
                                " is not eventually above " + s.names[x]);
            return rep;
        }
        if (pr.irr_continuous || pr.si_minus_continuous) {
            bool all_lb = true;
            for (unsigned z = 0; z < s.n && all_lb; ++z)
                if (dd.contains(z) && !c.cofinal.subset_of(s.up_set(z))) all_lb = false;
            if (all_lb && !conv) {
                rep.passed = false;
                rep.notes.push_back("eventual bounds cover the way-below set of " + s.names[y] +
                                    " yet the net does not Irr-converge to it");
                return rep;
            }
        }
    }
    return rep;
}

} // namespace irrtop

#endif
