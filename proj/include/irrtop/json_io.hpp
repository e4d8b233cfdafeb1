#ifndef IRRTOP_JSON_IO_HPP
#define IRRTOP_JSON_IO_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "irrtop/catalog.hpp"
#include "irrtop/convergence.hpp"
#include "irrtop/theorem_lab.hpp"

namespace irrtop {

using nlohmann::json;

// --- finite spaces -----------------------------------------------------------
// {"points":["a","b","c"],"opens":[[],["c"],["b","c"],["a","b","c"]]}

inline json space_to_json(const FiniteSpace& s) {
    json j;
    j["points"] = s.names;
    json opens = json::array();
    for (PointSet u : s.opens) {
        json o = json::array();
        for (unsigned i : u.members(s.n)) o.push_back(s.names[i]);
        opens.push_back(std::move(o));
    }
    j["opens"] = std::move(opens);
    return j;
}

namespace detail {

inline unsigned index_of_label(const std::vector<std::string>& names, const std::string& label) {
    for (unsigned i = 0; i < names.size(); ++i)
        if (names[i] == label) return i;
    throw FormatError("unknown point label: " + label);
}

} // namespace detail

inline FiniteSpace space_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("opens"))
        throw FormatError("a finite space needs \"points\" and \"opens\"");
    std::vector<std::string> names = j.at("points").get<std::vector<std::string>>();
    std::vector<PointSet> opens;
    for (const auto& o : j.at("opens")) {
        PointSet u;
        for (const auto& label : o)
            u = u.with(detail::index_of_label(names, label.get<std::string>()));
        opens.push_back(u);
    }
    return from_opens(std::move(names), opens);
}

// --- posets ------------------------------------------------------------------
// {"points":["a","b"],"le":[["a","b"]]}

inline json poset_to_json(const Poset& p) {
    json j;
    j["points"] = p.names;
    json le = json::array();
    for (unsigned i = 0; i < p.n; ++i)
        for (unsigned k = 0; k < p.n; ++k)
            if (i != k && p.le(i, k)) le.push_back(json::array({p.names[i], p.names[k]}));
    j["le"] = std::move(le);
    return j;
}

inline Poset poset_from_json(const json& j) {
    if (!j.is_object() || !j.contains("points") || !j.contains("le"))
        throw FormatError("a poset needs \"points\" and \"le\"");
    std::vector<std::string> names = j.at("points").get<std::vector<std::string>>();
    std::vector<std::pair<unsigned, unsigned>> pairs;
    for (const auto& pr : j.at("le")) {
        if (!pr.is_array() || pr.size() != 2) throw FormatError("\"le\" entries are pairs");
        pairs.push_back({detail::index_of_label(names, pr[0].get<std::string>()),
                         detail::index_of_label(names, pr[1].get<std::string>())});
    }
    const unsigned n = static_cast<unsigned>(names.size());
    return poset_from_pairs(n, pairs, std::move(names));
}

// --- property reports --------------------------------------------------------

inline json witness_to_json(const Witness& w) {
    json j = json::object();
    if (w.point) j["point"] = *w.point;
    if (w.set) j["set"] = *w.set;
    if (!w.desc.empty()) j["desc"] = w.desc;
    return j;
}

inline json report_to_json(const PropertyReport& r) {
    json j;
    for (const auto& name : property_flag_names()) j[name] = property_flag(r, name);
    json w = json::object();
    for (const auto& [flag, wit] : r.witnesses) w[flag] = witness_to_json(wit);
    j["witnesses"] = std::move(w);
    return j;
}

// --- derivative traces -------------------------------------------------------

inline json trace_to_json(const DerivedSpaceTrace& t) {
    json j;
    json stages = json::array();
    for (const auto& s : t.stages) stages.push_back(space_to_json(s));
    j["stages"] = std::move(stages);
    j["gamma"] = t.gamma ? json(*t.gamma) : json(nullptr);
    j["fixpoint_reached"] = t.fixpoint_reached;
    return j;
}

inline json trace_to_json(const CatalogTrace& t) {
    json j;
    j["space"] = t.space;
    j["stages"] = t.stages;
    j["gamma"] = t.gamma ? json(*t.gamma) : json(nullptr);
    j["fixpoint_reached"] = t.fixpoint_reached;
    if (!t.note.empty()) j["note"] = t.note;
    return j;
}

// --- suite results -----------------------------------------------------------

inline json suite_to_json(const SuiteResult& r) {
    json j;
    j["spaces_checked"] = r.spaces_checked;
    json v = json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"space", viol.space},
                     {"implication", viol.implication},
                     {"statement", viol.statement},
                     {"witness", viol.witness}});
    j["violations"] = std::move(v);
    return j;
}

inline json validation_to_json(const ValidationReport& r) {
    json j;
    j["space"] = r.space;
    j["checks_run"] = r.checks_run;
    j["notes"] = r.notes;
    j["mismatches"] = r.mismatches;
    return j;
}

// --- nets --------------------------------------------------------------------
// {"index":"nat","prefix":["c","c"],"tail":{"kind":"constant","value":"a"}}
// {"index":"nat","prefix":[],"tail":{"kind":"monotone","values":"1-1/n","limit":"1"}}

namespace detail {

inline void require_nat_index(const json& j) {
    if (!j.is_object() || !j.contains("tail"))
        throw FormatError("a net needs \"index\" and \"tail\"");
    if (j.value("index", "nat") != "nat")
        throw FormatError("only \"nat\" net indexes are supported in files");
}

inline std::optional<MonotoneGen> parse_generator(const std::string& g) {
    if (g == "one-minus-one-over-n" || g == "1-1/n") return MonotoneGen::one_minus_one_over_n;
    if (g == "n") return MonotoneGen::nat;
    return std::nullopt;
}

} // namespace detail

inline NatNet nat_net_from_json(const json& j, const FiniteSpace& s) {
    detail::require_nat_index(j);
    std::vector<unsigned> prefix;
    for (const auto& lbl : j.value("prefix", json::array()))
        prefix.push_back(detail::index_of_label(s.names, lbl.get<std::string>()));
    const json& tail = j.at("tail");
    const std::string kind = tail.value("kind", "");
    if (kind == "constant") {
        unsigned v = detail::index_of_label(s.names, tail.at("value").get<std::string>());
        return NatNet::make(std::move(prefix), {v});
    }
    if (kind == "periodic") {
        std::vector<unsigned> period;
        for (const auto& lbl : tail.at("values"))
            period.push_back(detail::index_of_label(s.names, lbl.get<std::string>()));
        return NatNet::make(std::move(prefix), std::move(period));
    }
    if (kind == "monotone") {
        const std::string gen = tail.value("values", "");
        if (gen == "constant")
            return NatNet::make(std::move(prefix),
                                {detail::index_of_label(s.names, tail.at("value").get<std::string>())});
        throw UndecidableTailError(
            "monotone tails have no decision rules over a finite space");
    }
    throw FormatError("unknown tail kind: " + kind);
}

inline CatalogNetSpec catalog_net_from_json(const json& j, const CatalogSpace& sp) {
    detail::require_nat_index(j);
    auto parse_pt = [&](const std::string& text) {
        auto p = sp.parse_point(text);
        if (!p) throw FormatError("not a point of " + sp.cli_name() + ": " + text);
        return *p;
    };
    CatalogNetSpec net;
    for (const auto& lbl : j.value("prefix", json::array()))
        net.prefix.push_back(parse_pt(lbl.get<std::string>()));
    const json& tail = j.at("tail");
    const std::string kind = tail.value("kind", "");
    if (kind == "constant") {
        net.kind = TailKind::constant;
        net.values = {parse_pt(tail.at("value").get<std::string>())};
    } else if (kind == "periodic") {
        net.kind = TailKind::periodic;
        for (const auto& lbl : tail.at("values")) net.values.push_back(parse_pt(lbl.get<std::string>()));
        if (net.values.empty()) throw FormatError("periodic tail needs values");
    } else if (kind == "monotone") {
        const std::string gen_name = tail.value("values", "");
        if (gen_name == "constant") {
            net.kind = TailKind::constant;
            net.values = {parse_pt(tail.at("value").get<std::string>())};
        } else {
            auto gen = detail::parse_generator(gen_name);
            if (!gen) throw FormatError("unknown generator: " + gen_name);
            net.kind = TailKind::monotone;
            net.gen = *gen;
            if (tail.contains("limit"))
                net.declared_limit = parse_pt(tail.at("limit").get<std::string>());
        }
    } else {
        throw FormatError("unknown tail kind: " + kind);
    }
    sp.validate_net(net);
    return net;
}

// --- location and convergence reports ---------------------------------------

inline json location_to_json(const LocationReport& r) {
    json j;
    j["si_within_induced"] = r.si_within_induced;
    j["second_containment_checked"] = r.second_containment_checked;
    j["induced_within_tau"] = r.induced_within_tau;
    j["all_equal"] = r.all_equal;
    j["notes"] = r.notes;
    j["passed"] = r.passed;
    return j;
}

inline json location_to_json(const CatalogLocationReport& r) {
    json j;
    j["space"] = r.space;
    j["si_within_induced"] = r.si_within_induced;
    j["second_containment_checked"] = r.second_containment_checked;
    j["tau_convergence_within_irr"] = r.tau_convergence_within_irr;
    j["notes"] = r.notes;
    j["passed"] = r.passed;
    return j;
}

} // namespace irrtop

#endif
