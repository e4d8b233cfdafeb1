#ifndef IRRTOP_CLI_HPP
#define IRRTOP_CLI_HPP

#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irrtop/dot_export.hpp"
#include "irrtop/json_io.hpp"

namespace irrtop {

namespace cli_detail {

struct ResolvedSpace {
    std::optional<FiniteSpace> finite;
    const CatalogSpace* cat = nullptr;
    std::string name;
};

inline FiniteSpace builtin_or_throw(const std::string& name) {
    if (name == "chain3") return chain_space(3);
    if (name == "sierpinski") return sierpinski_space();
    if (name == "v3") return v_space();
    throw UnknownSpaceError("unknown space: " + name);
}

/// A space argument is a catalog identifier, a built-in finite space name
/// (chain3, sierpinski, v3), or a path to a JSON file holding either a
/// finite space or a poset.
inline ResolvedSpace resolve_space(const std::string& arg) {
    ResolvedSpace r;
    r.name = arg;
    if (is_catalog_name(arg)) {
        r.cat = &catalog_get(arg);
        return r;
    }
    std::ifstream in(arg);
    if (in) {
        json j;
        try {
            in >> j;
        } catch (const std::exception& e) {
            throw FormatError("cannot parse " + arg + ": " + e.what());
        }
        if (j.contains("opens")) r.finite = space_from_json(j);
        else if (j.contains("le")) r.finite = alexandroff(poset_from_json(j));
        else throw FormatError(arg + " holds neither a space nor a poset");
        return r;
    }
    r.finite = builtin_or_throw(arg);
    return r;
}

inline json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw FormatError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw FormatError("cannot parse " + path + ": " + e.what());
    }
    return j;
}

/// Switch to the (equivalence-tested) greatest-element route beyond the
/// enumeration scale; the definitional pair scan is quadratic in the open
/// family and wide carriers make that family huge.
inline IrrAlgo algo_for(const FiniteSpace& s) {
    return s.n <= 5 ? IrrAlgo::definitional : IrrAlgo::greatest_element;
}

inline void ensure_report_scale(const FiniteSpace& s) {
    if (s.n > 10)
        throw Error("property reports scan all 2^n subsets; carriers beyond 10 points are not "
                    "supported by this command");
}

inline void print_report_text(std::ostream& out, const PropertyReport& r) {
    for (const auto& name : property_flag_names())
        out << name << ": " << (property_flag(r, name) ? "true" : "false") << "\n";
    for (const auto& [flag, w] : r.witnesses) {
        out << "  witness[" << flag << "]:";
        if (w.point) out << " point " << *w.point;
        if (w.set) {
            out << " set {";
            for (size_t i = 0; i < w.set->size(); ++i) out << (i ? "," : "") << (*w.set)[i];
            out << "}";
        }
        if (!w.desc.empty()) out << " (" << w.desc << ")";
        out << "\n";
    }
}

} // namespace cli_detail

/// Runs the command line given as argv-style arguments (program name
/// excluded).  Returns the process exit code: 0 on success, 1 when a suite
/// reports violations or a forbidden counterexample exists, 2 on usage
/// errors.
inline int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
    CLI::App app{"exact workbench for irreducibly-derived topologies and Irr-convergence"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format: text, json or dot")
        ->check(CLI::IsMember({"text", "json", "dot"}));

    // space info <name|file>
    auto* space_cmd = app.add_subcommand("space", "inspect a space");
    space_cmd->fallthrough();
    auto* info_cmd = space_cmd->add_subcommand("info", "print the property report of a space");
    info_cmd->fallthrough();
    std::string info_target;
    int info_fuel = 8;
    info_cmd->add_option("space", info_target, "catalog name, builtin name or JSON file")
        ->required();
    info_cmd->add_option("--fuel", info_fuel, "probe depth for catalog spaces");

    // check <name|file>
    auto* check_cmd = app.add_subcommand("check", "run every checker on one space");
    check_cmd->fallthrough();
    std::string check_target;
    int check_fuel = 8;
    check_cmd->add_option("space", check_target)->required();
    check_cmd->add_option("--fuel", check_fuel, "probe depth for catalog spaces");

    // derive-si <space> --fuel K
    auto* derive_cmd = app.add_subcommand("derive-si", "iterate the derived-space operator");
    derive_cmd->fallthrough();
    std::string derive_target;
    unsigned derive_fuel = 8;
    derive_cmd->add_option("space", derive_target)->required();
    derive_cmd->add_option("--fuel", derive_fuel, "maximum number of applications");

    // way-below <space> <x> <y>
    auto* wb_cmd = app.add_subcommand("way-below", "decide the Irr-way-below relation");
    wb_cmd->fallthrough();
    std::string wb_target, wb_x, wb_y;
    wb_cmd->add_option("space", wb_target)->required();
    wb_cmd->add_option("x", wb_x)->required();
    wb_cmd->add_option("y", wb_y)->required();

    // converge <space> --net <file> --to <x>
    auto* conv_cmd = app.add_subcommand("converge", "evaluate both convergence verdicts");
    conv_cmd->fallthrough();
    std::string conv_target, conv_net, conv_to;
    conv_cmd->add_option("space", conv_target)->required();
    conv_cmd->add_option("--net", conv_net, "net description file")->required();
    conv_cmd->add_option("--to", conv_to, "candidate limit point")->required();

    // enumerate --max-points N [--up-to-iso]
    auto* enum_cmd = app.add_subcommand("enumerate", "count labeled posets");
    enum_cmd->fallthrough();
    unsigned enum_n = 4;
    bool enum_iso = false;
    enum_cmd->add_option("--max-points", enum_n, "largest carrier size");
    enum_cmd->add_flag("--up-to-iso", enum_iso, "count canonical representatives instead");

    // suite [--max-points N] [--catalog]
    auto* suite_cmd = app.add_subcommand("suite", "run the implication suite");
    suite_cmd->fallthrough();
    unsigned suite_n = 4;
    bool suite_catalog = false;
    suite_cmd->add_option("--max-points", suite_n, "largest carrier size (up to 5)");
    suite_cmd->add_flag("--catalog", suite_catalog, "also run the catalog suite");

    // counterexample --query <expr> --max-points N
    auto* cex_cmd = app.add_subcommand("counterexample", "search enumerated spaces by flags");
    cex_cmd->fallthrough();
    std::string cex_query;
    unsigned cex_n = 4;
    bool cex_expect_none = false;
    cex_cmd->add_option("--query", cex_query, "boolean expression over property flags")
        ->required();
    cex_cmd->add_option("--max-points", cex_n, "largest carrier size");
    cex_cmd->add_flag("--expect-none", cex_expect_none,
                      "exit nonzero when a counterexample exists");

    std::vector<const char*> argv;
    argv.push_back("irrtop");
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    try {
        if (*info_cmd) {
            auto sp = cli_detail::resolve_space(info_target);
            if (format == "dot") {
                out << (sp.cat ? to_dot(*sp.cat, info_fuel) : to_dot(*sp.finite));
                return 0;
            }
            if (sp.finite) cli_detail::ensure_report_scale(*sp.finite);
            PropertyReport rep =
                sp.cat ? sp.cat->properties() : check_properties(*sp.finite, cli_detail::algo_for(*sp.finite));
            if (format == "json") {
                out << report_to_json(rep).dump(2) << "\n";
            } else {
                out << "space: " << sp.name << "\n";
                if (sp.finite)
                    out << "points: " << sp.finite->n << ", opens: " << sp.finite->opens.size()
                        << "\n";
                cli_detail::print_report_text(out, rep);
            }
            return 0;
        }

        if (*check_cmd) {
            auto sp = cli_detail::resolve_space(check_target);
            if (sp.cat) {
                ValidationReport rep = validate_catalog(*sp.cat, check_fuel);
                if (format == "json") out << validation_to_json(rep).dump(2) << "\n";
                else {
                    out << rep.space << ": " << rep.checks_run << " probes, no mismatches\n";
                    for (const auto& n : rep.notes) out << "  note: " << n << "\n";
                }
                return 0;
            }
            cli_detail::ensure_report_scale(*sp.finite);
            SuiteResult res;
            run_space_checks(*sp.finite, cli_detail::algo_for(*sp.finite), sp.finite->n <= 4 ? 3 : 2, res);
            if (format == "json") out << suite_to_json(res).dump(2) << "\n";
            else if (res.passed()) out << "all checks passed\n";
            else
                for (const auto& v : res.violations)
                    out << v.implication << ": " << v.witness << "\n";
            return res.passed() ? 0 : 1;
        }

        if (*derive_cmd) {
            auto sp = cli_detail::resolve_space(derive_target);
            if (derive_fuel < 1) throw Error("--fuel must be at least 1");
            if (sp.cat) {
                CatalogTrace t = sp.cat->si_iterate(derive_fuel);
                if (format == "json") out << trace_to_json(t).dump(2) << "\n";
                else {
                    for (size_t i = 0; i < t.stages.size(); ++i)
                        out << "stage " << i << ": " << t.stages[i] << "\n";
                    if (t.gamma) out << "gamma: " << *t.gamma << "\n";
                    else out << "fixpoint not reached\n";
                    if (!t.note.empty()) out << "note: " << t.note << "\n";
                }
            } else {
                DerivedSpaceTrace t = si_iterate(*sp.finite, derive_fuel, cli_detail::algo_for(*sp.finite));
                if (format == "json") out << trace_to_json(t).dump(2) << "\n";
                else {
                    for (size_t i = 0; i < t.stages.size(); ++i)
                        out << "stage " << i << ": " << t.stages[i].opens.size() << " opens\n";
                    if (t.gamma) out << "gamma: " << *t.gamma << "\n";
                    else out << "fixpoint not reached\n";
                }
            }
            return 0;
        }

        if (*wb_cmd) {
            auto sp = cli_detail::resolve_space(wb_target);
            bool verdict;
            if (sp.cat) {
                auto x = sp.cat->parse_point(wb_x);
                auto y = sp.cat->parse_point(wb_y);
                if (!x || !y) throw Error("not a point of " + sp.cat->cli_name());
                verdict = sp.cat->way_below(*x, *y);
            } else {
                unsigned x = detail::index_of_label(sp.finite->names, wb_x);
                unsigned y = detail::index_of_label(sp.finite->names, wb_y);
                verdict = way_below_irr(*sp.finite, x, y, cli_detail::algo_for(*sp.finite));
            }
            if (format == "json") out << json{{"way_below", verdict}}.dump() << "\n";
            else out << (verdict ? "true" : "false") << "\n";
            return 0;
        }

        if (*conv_cmd) {
            auto sp = cli_detail::resolve_space(conv_target);
            json net_json = cli_detail::load_json_file(conv_net);
            bool topo, irr;
            if (sp.cat) {
                auto y = sp.cat->parse_point(conv_to);
                if (!y) throw Error("not a point of " + sp.cat->cli_name());
                CatalogNetSpec net = catalog_net_from_json(net_json, *sp.cat);
                topo = sp.cat->topological_converges(net, *y);
                irr = sp.cat->irr_converges(net, *y);
            } else {
                unsigned y = detail::index_of_label(sp.finite->names, conv_to);
                NatNet net = nat_net_from_json(net_json, *sp.finite);
                TailClass tc = tail_class_of(*sp.finite, net);
                topo = topological_converges(*sp.finite, tc, y);
                irr = irr_converges(*sp.finite, tc, y);
            }
            if (format == "json")
                out << json{{"topological", topo}, {"irr", irr}}.dump() << "\n";
            else
                out << "topological: " << (topo ? "true" : "false") << "\n"
                    << "irr: " << (irr ? "true" : "false") << "\n";
            return 0;
        }

        if (*enum_cmd) {
            json counts = json::object();
            unsigned long long total = 0;
            for (unsigned n = 1; n <= enum_n; ++n) {
                auto sz = enumerate_posets(n, enum_iso).size();
                counts[std::to_string(n)] = sz;
                total += sz;
            }
            if (format == "json")
                out << json{{"max_points", enum_n}, {"up_to_iso", enum_iso},
                            {"counts", counts}, {"total", total}}
                           .dump(2)
                    << "\n";
            else {
                for (unsigned n = 1; n <= enum_n; ++n)
                    out << "n=" << n << ": " << counts[std::to_string(n)].get<unsigned long long>()
                        << "\n";
                out << "total: " << total << "\n";
            }
            return 0;
        }

        if (*suite_cmd) {
            SuiteResult res = run_implication_suite(suite_n);
            if (suite_catalog) {
                SuiteResult cat = catalog_suite();
                res.spaces_checked += cat.spaces_checked;
                for (auto& v : cat.violations) {
                    v.space = "catalog:" + v.space;
                    res.violations.push_back(std::move(v));
                }
            }
            if (format == "json") out << suite_to_json(res).dump(2) << "\n";
            else {
                out << "spaces checked: " << res.spaces_checked << "\n";
                out << "violations: " << res.violations.size() << "\n";
                for (const auto& v : res.violations)
                    out << "  " << v.space << " | " << v.implication << " | " << v.statement
                        << " | " << v.witness << "\n";
            }
            return res.passed() ? 0 : 1;
        }

        if (*cex_cmd) {
            auto found = find_counterexample(cex_query, cex_n);
            if (format == "json") {
                json j;
                j["query"] = cex_query;
                j["found"] = found.has_value();
                if (found) j["space"] = space_to_json(*found);
                out << j.dump(2) << "\n";
            } else if (found) {
                out << "found: " << space_label(*found) << "\n";
            } else {
                out << "none found\n";
            }
            return (found && cex_expect_none) ? 1 : 0;
        }
    } catch (const BadQueryError& e) {
        err << "bad query: " << e.what() << "\n";
        return 2;
    } catch (const UnknownSpaceError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const FormatError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const OracleMismatchError& e) {
        err << "oracle mismatch: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        err << e.what() << "\n";
        return 2;
    }
    err << "no command given\n";
    return 2;
}

} // namespace irrtop

#endif
