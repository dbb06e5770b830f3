#include "sforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>

#include <CLI11.hpp>

#include "sforge/json_io.hpp"

namespace sforge {

namespace {

struct CliState {
    std::string format = "text";
    std::string dot_path;
    int max_rank = 4;
    int max_entry = 3;
    long long path_guard = 1'000'000;
    int iso_guard = 12;
    bool guards_on = true;
    std::ostream* out = nullptr;
};

/* Indented rendering of the same object the JSON mode prints. */
void render_text(const json& j, std::ostream& os, int indent) {
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_object() || (value.is_array() && !value.empty() &&
                                      (value.front().is_object() || value.front().is_array()))) {
                os << pad << key << ":\n";
                render_text(value, os, indent + 1);
            } else {
                os << pad << key << ": " << value.dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        for (const auto& value : j) {
            if (value.is_object() || value.is_array()) {
                os << pad << "-\n";
                render_text(value, os, indent + 1);
            } else {
                os << pad << "- " << value.dump() << "\n";
            }
        }
    } else {
        os << pad << j.dump() << "\n";
    }
}

void emit(const CliState& state, const json& j) {
    if (state.format == "json")
        *state.out << j.dump() << "\n";
    else
        render_text(j, *state.out, 0);
}

json violations_to_json(const ValidationReport& rep) {
    json out = json::array();
    for (const auto& v : rep.violations)
        out.push_back(json{{"axiom", v.axiom}, {"where", v.where}, {"detail", v.detail}});
    return out;
}

RingElement element_from_arg(const std::string& arg, int rank) {
    json j;
    try {
        j = json::parse(arg);
    } catch (const json::exception&) {
        throw DataError("element must be a JSON array of coefficients, e.g. \"[0,1]\"");
    }
    if (!j.is_array()) throw DataError("element must be a JSON array of coefficients");
    RingElement e;
    e.coeffs = j.get<std::vector<std::int64_t>>();
    if (static_cast<int>(e.coeffs.size()) != rank)
        throw ShapeError("element: length must equal ring rank");
    return e;
}

void write_dot(const CliState& state, const std::string& dot) {
    if (state.dot_path.empty()) return;
    std::ofstream out(state.dot_path);
    if (!out) throw DataError("cannot write DOT file: " + state.dot_path);
    out << dot;
}

json graded_entries_to_json(const GradedComponent& comp) {
    json entries = json::array();
    for (const auto& e : comp.entries) {
        json entry{{"path", e.vertices}, {"fpdim", round_sig(e.fpdim)}};
        if (e.cls) entry["class"] = e.cls->coeffs;
        entries.push_back(std::move(entry));
    }
    return entries;
}

int run_parsed(CLI::App& app, const std::vector<std::string>& args) {
    /* CLI11 wants argv-style reversed arguments. */
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    return 0;
}

}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliState state;
    state.out = &out;
    if (const char* env = std::getenv("SPECIES_FORGE_GUARDS"))
        if (std::string(env) == "off") state.guards_on = false;

    int exit_code = 0;

    CLI::App app{"fusion-ring species toolkit"};
    app.require_subcommand(1);
    app.add_option("--format", state.format, "output format: text or json")
        ->check(CLI::IsMember({"text", "json"}));

    auto add_sub = [&](CLI::App* parent, const std::string& name, const std::string& desc) {
        auto* sub = parent->add_subcommand(name, desc);
        sub->fallthrough();
        return sub;
    };

    /* validate <doc> */
    {
        auto* cmd = add_sub(&app, "validate", "validate any document");
        auto doc = std::make_shared<std::string>();
        cmd->add_option("doc", *doc, "document file")->required();
        cmd->callback([&, doc] {
            const auto value = load_document(*doc);
            json report{{"command", "validate"}, {"file", *doc}};
            ValidationReport rep;
            std::visit(
                [&](const auto& v) {
                    using T = std::decay_t<decltype(v)>;
                    if constexpr (std::is_same_v<T, FusionRing>) {
                        report["kind"] = "fusion_ring";
                        rep = validate_ring(v);
                    } else if constexpr (std::is_same_v<T, FiniteGroup>) {
                        report["kind"] = "group";
                        rep = validate_group(v);
                    } else if constexpr (std::is_same_v<T, ZPlusModule>) {
                        report["kind"] = "zplus_module";
                        rep = validate_module(v);
                    } else if constexpr (std::is_same_v<T, Species>) {
                        report["kind"] = "species";
                        const auto sp = validate_species(v);
                        rep = sp.report;
                        report["is_quiver"] = sp.is_quiver;
                    } else if constexpr (std::is_same_v<T, EquivariantQuiver>) {
                        report["kind"] = "equivariant_quiver";
                        rep = validate_equivariant(v);
                    } else {
                        report["kind"] = "quiver";
                    }
                },
                value);
            report["valid"] = rep.ok();
            report["violations"] = violations_to_json(rep);
            emit(state, report);
            if (!rep.ok()) exit_code = 1;
        });
    }

    /* fpdim <ring> <element> */
    {
        auto* cmd = add_sub(&app, "fpdim", "Frobenius-Perron dimension of a ring element");
        auto doc = std::make_shared<std::string>();
        auto elem = std::make_shared<std::string>();
        cmd->add_option("ring", *doc, "fusion ring file")->required();
        cmd->add_option("element", *elem, "coefficient array, e.g. [0,1]")->required();
        cmd->callback([&, doc, elem] {
            const auto ring = load_ring(*doc);
            const auto e = element_from_arg(*elem, ring.rank());
            emit(state, json{{"command", "fpdim"},
                             {"element", e.coeffs},
                             {"formatted", format_element(ring, e)},
                             {"fpdim", round_sig(fpdim(ring, e))}});
        });
    }

    /* multiply <ring> <a> <b> */
    {
        auto* cmd = add_sub(&app, "multiply", "product of two ring elements");
        auto doc = std::make_shared<std::string>();
        auto ea = std::make_shared<std::string>();
        auto eb = std::make_shared<std::string>();
        cmd->add_option("ring", *doc, "fusion ring file")->required();
        cmd->add_option("a", *ea, "coefficient array")->required();
        cmd->add_option("b", *eb, "coefficient array")->required();
        cmd->callback([&, doc, ea, eb] {
            const auto ring = load_ring(*doc);
            const auto a = element_from_arg(*ea, ring.rank());
            const auto b = element_from_arg(*eb, ring.rank());
            const auto product = multiply(ring, a, b);
            emit(state, json{{"command", "multiply"},
                             {"a", a.coeffs},
                             {"b", b.coeffs},
                             {"product", product.coeffs},
                             {"formatted", format_element(ring, product)}});
        });
    }

    /* zplus ... */
    {
        auto* zplus = add_sub(&app, "zplus", "module operations");
        zplus->require_subcommand(1);

        auto* check = add_sub(zplus, "check", "validate a module");
        auto check_doc = std::make_shared<std::string>();
        check->add_option("module", *check_doc, "module file")->required();
        check->callback([&, check_doc] {
            const auto rep = validate_module(load_module(*check_doc));
            emit(state, json{{"command", "zplus check"},
                             {"valid", rep.ok()},
                             {"violations", violations_to_json(rep)}});
            if (!rep.ok()) exit_code = 1;
        });

        auto* classes = add_sub(zplus, "classes", "basis equivalence classes");
        auto classes_doc = std::make_shared<std::string>();
        classes->add_option("module", *classes_doc, "module file")->required();
        classes->callback([&, classes_doc] {
            const auto cls = equivalence_classes(load_module(*classes_doc));
            emit(state, json{{"command", "zplus classes"},
                             {"classes", cls},
                             {"count", cls.size()}});
        });

        auto* regular = add_sub(zplus, "regular", "regular module of a ring");
        auto regular_doc = std::make_shared<std::string>();
        regular->add_option("ring", *regular_doc, "fusion ring file")->required();
        regular->callback([&, regular_doc] {
            const auto mod = regular_module(load_ring(*regular_doc));
            emit(state, json{{"command", "zplus regular"}, {"module", module_to_json(mod)}});
        });

        auto* decompose = add_sub(zplus, "decompose", "split into regular summands");
        auto decompose_doc = std::make_shared<std::string>();
        decompose->add_option("module", *decompose_doc, "module file")->required();
        decompose->callback([&, decompose_doc] {
            const auto result = decompose_free(load_module(*decompose_doc));
            json rep{{"command", "zplus decompose"}, {"free", result.has_value()}};
            if (result) {
                json summands = json::array();
                for (const auto& s : *result)
                    summands.push_back(json{{"basis", s.basis}, {"witness", s.witness}});
                rep["summands"] = std::move(summands);
            }
            emit(state, rep);
        });

        auto* enumerate = add_sub(zplus, "enumerate", "irreducible modules within bounds");
        auto enumerate_doc = std::make_shared<std::string>();
        enumerate->add_option("ring", *enumerate_doc, "fusion ring file")->required();
        enumerate->add_option("--max-rank", state.max_rank, "module rank bound");
        enumerate->add_option("--max-entry", state.max_entry, "action entry bound");
        enumerate->callback([&, enumerate_doc] {
            const auto ring = load_ring(*enumerate_doc);
            const auto mods =
                enumerate_irreducible(ring, state.max_rank, state.max_entry, state.guards_on);
            json list = json::array();
            for (const auto& m : mods) list.push_back(module_to_json(m));
            emit(state,
                 json{{"command", "zplus enumerate"},
                      {"max_rank", state.max_rank},
                      {"max_entry", state.max_entry},
                      {"count", mods.size()},
                      {"modules", std::move(list)},
                      {"notes",
                       "modules are listed up to basis relabeling; images under ring "
                       "self-symmetries are not merged"}});
        });
    }

    /* species ... */
    {
        auto* species = add_sub(&app, "species", "species operations");
        species->require_subcommand(1);

        auto* validate = add_sub(species, "validate", "validate a species");
        auto validate_doc = std::make_shared<std::string>();
        validate->add_option("species", *validate_doc, "species file")->required();
        validate->callback([&, validate_doc] {
            const auto rep = validate_species(load_species(*validate_doc));
            emit(state, json{{"command", "species validate"},
                             {"valid", rep.report.ok()},
                             {"is_quiver", rep.is_quiver},
                             {"violations", violations_to_json(rep.report)}});
            if (!rep.report.ok()) exit_code = 1;
        });

        auto* graph = add_sub(species, "graph", "underlying directed graph");
        auto graph_doc = std::make_shared<std::string>();
        graph->add_option("species", *graph_doc, "species file")->required();
        graph->add_option("--dot", state.dot_path, "write Graphviz DOT to this path");
        graph->callback([&, graph_doc] {
            const auto g = underlying_graph(load_species(*graph_doc));
            json arrows = json::array();
            for (const auto& [from, to] : g.arrows)
                arrows.push_back(json{{"from", from}, {"to", to}});
            emit(state, json{{"command", "species graph"},
                             {"vertices", g.vertices},
                             {"arrows", std::move(arrows)}});
            write_dot(state, to_dot(g, "species"));
        });

        auto* acyclic = add_sub(species, "acyclic", "cycle check with witness");
        auto acyclic_doc = std::make_shared<std::string>();
        acyclic->add_option("species", *acyclic_doc, "species file")->required();
        acyclic->callback([&, acyclic_doc] {
            const auto res = is_acyclic(load_species(*acyclic_doc));
            json rep{{"command", "species acyclic"}, {"acyclic", res.acyclic}};
            if (!res.acyclic) rep["cycle"] = res.cycle;
            emit(state, rep);
        });

        auto* graded = add_sub(species, "graded", "degree-k piece of the path algebra");
        auto graded_doc = std::make_shared<std::string>();
        auto degree = std::make_shared<int>(0);
        graded->add_option("species", *graded_doc, "species file")->required();
        graded->add_option("degree", *degree, "path length")->required();
        graded->add_option("--path-guard", state.path_guard, "maximum paths to enumerate");
        graded->callback([&, graded_doc, degree] {
            const auto comp = graded_component(load_species(*graded_doc), *degree,
                                               state.guards_on ? state.path_guard : 0);
            emit(state, json{{"command", "species graded"},
                             {"degree", comp.degree},
                             {"count", comp.entries.size()},
                             {"entries", graded_entries_to_json(comp)}});
        });

        auto* total = add_sub(species, "total", "total class of the path algebra");
        auto total_doc = std::make_shared<std::string>();
        total->add_option("species", *total_doc, "species file")->required();
        total->add_option("--path-guard", state.path_guard, "maximum paths to enumerate");
        total->callback([&, total_doc] {
            const auto res =
                total_class(load_species(*total_doc), state.guards_on ? state.path_guard : 0);
            json rep{{"command", "species total"}, {"fpdim", round_sig(res.fpdim)}};
            if (res.cls) rep["class"] = res.cls->coeffs;
            emit(state, rep);
        });

        auto* hereditary = add_sub(species, "hereditary", "hereditariness verdict");
        auto hereditary_doc = std::make_shared<std::string>();
        hereditary->add_option("species", *hereditary_doc, "species file")->required();
        hereditary->callback([&, hereditary_doc] {
            const auto rep = hereditary_report(load_species(*hereditary_doc));
            json out_json{{"command", "species hereditary"},
                          {"acyclic", rep.acyclic},
                          {"verdict", rep.verdict}};
            if (!rep.acyclic) out_json["cycle"] = rep.cycle;
            emit(state, out_json);
        });
    }

    /* equivariant ... */
    {
        auto* eq_cmd = add_sub(&app, "equivariant", "equivariant quiver operations");
        eq_cmd->require_subcommand(1);

        auto* orb = add_sub(eq_cmd, "orbits", "vertex orbits");
        auto orb_doc = std::make_shared<std::string>();
        orb->add_option("quiver", *orb_doc, "equivariant quiver file")->required();
        orb->callback([&, orb_doc] {
            const auto o = orbits(load_equivariant(*orb_doc));
            emit(state, json{{"command", "equivariant orbits"},
                             {"orbits", o.classes},
                             {"representatives", o.representatives}});
        });

        auto* end_cmd = add_sub(eq_cmd, "end", "internal endomorphism class of a vertex");
        auto end_doc = std::make_shared<std::string>();
        auto end_vertex = std::make_shared<int>(0);
        end_cmd->add_option("quiver", *end_doc, "equivariant quiver file")->required();
        end_cmd->add_option("vertex", *end_vertex, "vertex index")->required();
        end_cmd->callback([&, end_doc, end_vertex] {
            const auto eq = load_equivariant(*end_doc);
            const auto res = internal_end(eq, *end_vertex);
            emit(state, json{{"command", "equivariant end"},
                             {"vertex", *end_vertex},
                             {"class", res.object.coeffs},
                             {"stabilizer", res.stabilizer},
                             {"formatted", format_element(group_ring(eq.group), res.object)}});
        });

        auto* ext_cmd = add_sub(eq_cmd, "ext", "internal extension class of a vertex pair");
        auto ext_doc = std::make_shared<std::string>();
        auto ext_from = std::make_shared<int>(0);
        auto ext_to = std::make_shared<int>(0);
        ext_cmd->add_option("quiver", *ext_doc, "equivariant quiver file")->required();
        ext_cmd->add_option("from", *ext_from, "source vertex index")->required();
        ext_cmd->add_option("to", *ext_to, "target vertex index")->required();
        ext_cmd->callback([&, ext_doc, ext_from, ext_to] {
            const auto eq = load_equivariant(*ext_doc);
            const auto res = internal_ext(eq, *ext_from, *ext_to);
            emit(state, json{{"command", "equivariant ext"},
                             {"from", *ext_from},
                             {"to", *ext_to},
                             {"class", res.coeffs},
                             {"formatted", format_element(group_ring(eq.group), res)}});
        });

        auto* sp = add_sub(eq_cmd, "species", "species on orbit representatives");
        auto sp_doc = std::make_shared<std::string>();
        sp->add_option("quiver", *sp_doc, "equivariant quiver file")->required();
        sp->callback([&, sp_doc] {
            const auto s = species_of(load_equivariant(*sp_doc));
            emit(state, json{{"command", "equivariant species"}, {"species", species_to_json(s)}});
        });

        auto* graph = add_sub(eq_cmd, "graph", "directed graph on orbits with certificate");
        auto graph_doc = std::make_shared<std::string>();
        graph->add_option("quiver", *graph_doc, "equivariant quiver file")->required();
        graph->add_option("--dot", state.dot_path, "write Graphviz DOT to this path");
        graph->callback([&, graph_doc] {
            const auto mg = directed_graph_of(load_equivariant(*graph_doc));
            json arrows = json::array();
            for (const auto& [from, to] : mg.graph.arrows)
                arrows.push_back(json{{"from", from}, {"to", to}});
            emit(state, json{{"command", "equivariant graph"},
                             {"vertices", mg.graph.vertices},
                             {"arrows", std::move(arrows)},
                             {"certificate",
                              json{{"pass", mg.certificate.pass},
                                   {"pairs_checked", mg.certificate.pairs_checked}}}});
            write_dot(state, to_dot(mg.graph, "orbits"));
        });

        auto* module = add_sub(eq_cmd, "module", "permutation module over the group ring");
        auto module_doc = std::make_shared<std::string>();
        module->add_option("quiver", *module_doc, "equivariant quiver file")->required();
        module->callback([&, module_doc] {
            const auto mod = grothendieck_module(load_equivariant(*module_doc));
            emit(state,
                 json{{"command", "equivariant module"}, {"module", module_to_json(mod)}});
        });
    }

    /* unfold ... */
    {
        auto* unfold = add_sub(&app, "unfold", "unfolding operations");
        unfold->require_subcommand(1);

        auto* quiver = add_sub(unfold, "quiver", "unfold a quiver species by ring basis");
        auto quiver_doc = std::make_shared<std::string>();
        quiver->add_option("species", *quiver_doc, "species file")->required();
        quiver->add_option("--dot", state.dot_path, "write Graphviz DOT to this path");
        quiver->callback([&, quiver_doc] {
            const auto q = unfold_quiver_species(load_species(*quiver_doc));
            emit(state, json{{"command", "unfold quiver"}, {"quiver", quiver_to_json(q)}});
            write_dot(state, to_dot(q, "unfolded"));
        });

        auto* pointed = add_sub(unfold, "pointed", "unfold a pointed species by cosets");
        auto pointed_doc = std::make_shared<std::string>();
        pointed->add_option("species", *pointed_doc, "species file")->required();
        pointed->add_option("--dot", state.dot_path, "write Graphviz DOT to this path");
        pointed->callback([&, pointed_doc] {
            const auto q = pointed_unfold(load_species(*pointed_doc));
            emit(state, json{{"command", "unfold pointed"}, {"quiver", quiver_to_json(q)}});
            write_dot(state, to_dot(q, "unfolded"));
        });

        auto* roundtrip = add_sub(unfold, "roundtrip", "species_of then pointed unfolding");
        auto roundtrip_doc = std::make_shared<std::string>();
        roundtrip->add_option("quiver", *roundtrip_doc, "equivariant quiver file")->required();
        roundtrip->add_option("--iso-guard", state.iso_guard, "isomorphism search vertex bound");
        roundtrip->callback([&, roundtrip_doc] {
            const auto rep = round_trip(load_equivariant(*roundtrip_doc),
                                        state.guards_on ? state.iso_guard : 0);
            json out_json{{"command", "unfold roundtrip"},
                          {"isomorphic", rep.isomorphic},
                          {"original", quiver_to_json(rep.original)},
                          {"rebuilt", quiver_to_json(rep.rebuilt)}};
            if (rep.isomorphic) out_json["witness"] = rep.witness;
            emit(state, out_json);
        });
    }

    /* pointed-data <group> */
    {
        auto* cmd = add_sub(&app, "pointed-data", "subgroup and cocycle-class data");
        auto doc = std::make_shared<std::string>();
        cmd->add_option("group", *doc, "group file")->required();
        cmd->callback([&, doc] {
            const auto g = load_group(*doc);
            const auto data = pointed_module_data(g);
            json subgroups_json = json::array();
            for (const auto& d : data) {
                std::vector<std::string> names;
                for (int e : d.subgroup) names.push_back(g.element(e));
                subgroups_json.push_back(json{{"elements", names},
                                              {"invariant_factors", d.invariant_factors},
                                              {"h2_order", d.h2_order}});
            }
            emit(state,
                 json{{"command", "pointed-data"},
                      {"subgroups", std::move(subgroups_json)},
                      {"notes",
                       "cocycle classes are counted over an algebraically closed field of "
                       "characteristic zero; inequivalent-looking presentations of one class "
                       "are not counted separately"}});
        });
    }

    try {
        run_parsed(app, args);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    } catch (const GuardError& e) {
        err << "guard: " << e.what() << "\n";
        return 1;
    } catch (const ShapeError& e) {
        err << "shape error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const json::exception& e) {
        err << "parse error: " << e.what() << "\n";
        return 1;
    }
    return exit_code;
}

}
