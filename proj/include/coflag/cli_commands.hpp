// Implementations of the individual commands.

#ifndef COFLAG_CLI_COMMANDS_HPP
#define COFLAG_CLI_COMMANDS_HPP

#include "coalgebra.hpp"
#include "coflag.hpp"
#include "gh2_brute.hpp"
#include "json_io.hpp"
#include "poisson.hpp"
#include "tower.hpp"

#include <iomanip>
#include <optional>
#include <sstream>

namespace coflag {

enum class OutputFormat { json_format, text_format };

struct CommandRequest {
    std::string command;
    std::string input;         // entity file
    std::string catalog_name;  // alternative to input
    std::string datum_path;    // co-flag or Poisson datum file
    std::string base_path;     // tower build mode: base algebra file
    std::string data_path;     // tower build mode: datum list file
    std::optional<FieldSpec> field;
    int dim = 0;
    int v_dim = 1;
    std::int64_t budget = 2000000;
    std::int64_t cap = 100000000;
    std::string aut_mode = "brute";  // brute | catalog | file:PATH
    OutputFormat format = OutputFormat::json_format;
    std::optional<std::int64_t> seed;
};

inline json violations_to_json(const ValidationReport& rep) {
    json a = json::array();
    for (const auto& v : rep) a.push_back(json{{"axiom", v.axiom}, {"where", v.where}, {"detail", v.detail}});
    return a;
}

// ------------------------------------------------------------------ text ----

namespace detail {

inline void render_text(const json& j, std::ostream& out, int indent) {
    std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            out << pad << it.key() << ":";
            if (it.value().is_object() || (it.value().is_array() && !it.value().empty() &&
                                           (it.value().front().is_object() || it.value().front().is_array()))) {
                out << "\n";
                render_text(it.value(), out, indent + 1);
            } else {
                out << " " << it.value().dump() << "\n";
            }
        }
    } else if (j.is_array()) {
        // align rows of scalar arrays into a table
        bool tabular = !j.empty() && j.front().is_array();
        if (tabular) {
            std::vector<std::vector<std::string>> cells;
            std::vector<std::size_t> width;
            for (const auto& row : j) {
                std::vector<std::string> r;
                for (const auto& c : row) r.push_back(c.dump());
                if (r.size() > width.size()) width.resize(r.size(), 0);
                for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
                cells.push_back(std::move(r));
            }
            for (const auto& r : cells) {
                out << pad;
                for (std::size_t i = 0; i < r.size(); ++i)
                    out << std::setw(static_cast<int>(width[i])) << r[i] << (i + 1 < r.size() ? "  " : "");
                out << "\n";
            }
        } else {
            for (const auto& e : j) {
                if (e.is_object()) {
                    render_text(e, out, indent);
                    out << pad << "-\n";
                } else {
                    out << pad << e.dump() << "\n";
                }
            }
        }
    } else {
        out << pad << j.dump() << "\n";
    }
}

}  // namespace detail

inline void emit_report(const json& report, OutputFormat fmt, std::ostream& out) {
    if (fmt == OutputFormat::json_format) {
        out << report.dump(2) << "\n";
    } else {
        detail::render_text(report, out, 0);
    }
}

// ------------------------------------------------------------- loading ------

inline Entity load_entity(const CommandRequest& req, std::vector<std::string>* warnings) {
    if (!req.catalog_name.empty()) {
        FieldSpec f = req.field.value_or(FieldSpec::prime(5));
        CatalogEntity e = catalog(req.catalog_name, f);
        if (std::holds_alternative<Algebra>(e)) return std::get<Algebra>(e);
        if (std::holds_alternative<Coalgebra>(e)) return std::get<Coalgebra>(e);
        return std::get<PoissonAlgebra>(e);
    }
    if (req.input.empty()) throw usage_error(req.command + ": needs --input FILE or --catalog NAME");
    return entity_from_json(load_json_file(req.input), warnings);
}

inline Algebra load_algebra(const CommandRequest& req, std::vector<std::string>* warnings) {
    Entity e = load_entity(req, warnings);
    if (std::holds_alternative<Algebra>(e)) return std::get<Algebra>(e);
    if (std::holds_alternative<PoissonAlgebra>(e)) return std::get<PoissonAlgebra>(e).algebra;
    throw usage_error(req.command + ": expected an algebra input");
}

inline Coalgebra load_coalgebra(const CommandRequest& req, std::vector<std::string>* warnings) {
    Entity e = load_entity(req, warnings);
    if (!std::holds_alternative<Coalgebra>(e))
        throw usage_error(req.command + ": expected a coalgebra input");
    return std::get<Coalgebra>(e);
}

inline PoissonAlgebra load_poisson(const CommandRequest& req, std::vector<std::string>* warnings) {
    Entity e = load_entity(req, warnings);
    if (!std::holds_alternative<PoissonAlgebra>(e))
        throw usage_error(req.command + ": expected a Poisson algebra input (with \"bracket\")");
    return std::get<PoissonAlgebra>(e);
}

inline std::vector<Matrix> resolve_automorphisms(const Algebra& a, const CommandRequest& req,
                                                 std::vector<std::string>* warnings) {
    if (req.aut_mode == "brute") return automorphisms_brute(a, req.cap);
    if (req.aut_mode == "catalog") return automorphism_group(a, AutMode::catalog);
    if (req.aut_mode.rfind("file:", 0) == 0) {
        json j = load_json_file(req.aut_mode.substr(5));
        std::vector<Matrix> gens;
        for (const auto& m : j.at("maps")) gens.push_back(matrix_from_json(m, a.field, warnings));
        return automorphism_closure(a, std::move(gens));
    }
    throw usage_error("aut-mode must be brute, catalog or file:PATH");
}

// ------------------------------------------------------------- commands -----

inline json iso_witness_to_json(const Algebra& a, const IsoWitness& w) {
    return json{{"s0", scalar_to_json(w.s0)}, {"psi", matrix_to_json(w.psi)}, {"r", vec_to_json(w.r)}};
}

inline void dispatch_command(const CommandRequest& req, json& report,
                             std::vector<std::string>& warnings) {
    const std::string& cmd = req.command;

    if (cmd == "validate") {
        Entity e = load_entity(req, &warnings);
        ValidationReport rep;
        std::string type;
        if (std::holds_alternative<Algebra>(e)) {
            rep = validate_algebra(std::get<Algebra>(e));
            type = "algebra";
        } else if (std::holds_alternative<Coalgebra>(e)) {
            rep = validate_coalgebra(std::get<Coalgebra>(e));
            type = "coalgebra";
        } else {
            rep = validate_poisson(std::get<PoissonAlgebra>(e));
            type = "poisson-algebra";
        }
        report["type"] = type;
        report["valid"] = rep.empty();
        report["violations"] = violations_to_json(rep);
        return;
    }

    if (cmd == "characters") {
        Algebra a = load_algebra(req, &warnings);
        json list = json::array();
        for (const auto& chi : characters(a)) list.push_back(vec_to_json(chi.values));
        report["count"] = list.size();
        report["characters"] = list;
        return;
    }

    if (cmd == "aut") {
        Algebra a = load_algebra(req, &warnings);
        auto group = resolve_automorphisms(a, req, &warnings);
        report["order"] = group.size();
        json list = json::array();
        for (const auto& m : group) list.push_back(matrix_to_json(m));
        report["automorphisms"] = list;
        return;
    }

    if (cmd == "gh2") {
        Algebra a = load_algebra(req, &warnings);
        GH2Report rep = gh2_coflag(a);
        json blocks = json::array();
        for (const auto& b : rep.blocks) {
            json reps = json::array();
            for (const auto& m : b.representatives) reps.push_back(bilinear_to_json(m));
            blocks.push_back(json{{"lambda", vec_to_json(b.lambda)},
                                  {"Lambda", vec_to_json(b.Lambda)},
                                  {"dim_z2", b.dim_z2},
                                  {"dim_b2", b.dim_b2},
                                  {"dim_h2", b.dim_h2},
                                  {"representatives", reps}});
        }
        report["first_kind_blocks"] = blocks;
        report["lambda0"] = vec_to_json(rep.lambda0);
        report["first_kind_classes"] = rep.first_kind_count;
        report["second_kind_classes"] = rep.second_kind_count;
        report["total_classes"] = rep.total_count;
        report["note"] = "counts of -1 mean an infinite family over the rationals";
        return;
    }

    if (cmd == "hoc") {
        Algebra a = load_algebra(req, &warnings);
        auto autos = resolve_automorphisms(a, req, &warnings);
        HOCReport rep = hoc(a, autos);
        json classes = json::array();
        for (const auto& cls : rep.first_kind_classes) {
            json members = json::array(), wits = json::array();
            for (std::size_t i = 0; i < cls.members.size(); ++i) {
                members.push_back(coflag_datum_to_json(cls.members[i]));
                wits.push_back(iso_witness_to_json(a, cls.witnesses[i]));
            }
            classes.push_back(json{{"representative", coflag_datum_to_json(cls.members[0])},
                                   {"orbit_size", cls.members.size()},
                                   {"members", members},
                                   {"witnesses", wits}});
        }
        report["first_kind_classes"] = classes;
        report["direct_product_class"] = true;
        report["total_classes"] = rep.total_classes();
        return;
    }

    if (cmd == "gh2-brute") {
        Algebra a = load_algebra(req, &warnings);
        GH2BruteReport rep = gh2_enumerate(a, req.v_dim, req.budget);
        report["candidates"] = rep.candidates;
        report["valid_systems"] = rep.valid_systems;
        report["total_classes"] = rep.total_classes;
        json strata = json::array();
        for (const auto& st : rep.strata) {
            json s{{"v_mult_zero", st.v_mult_zero}, {"classes", st.classes}};
            json vm = json::array();
            for (const auto& x : st.v_mult) vm.push_back(scalar_to_json(x));
            s["v_mult"] = vm;
            if (st.v_mult_zero) {
                json bs = json::array();
                for (const auto& b : st.bimodule_strata) bs.push_back(json{{"classes", b.classes}});
                s["bimodule_strata"] = bs;
            }
            strata.push_back(s);
        }
        report["strata"] = strata;
        return;
    }

    if (cmd == "product") {
        if (req.input.empty()) throw usage_error("product: needs --input SYSTEM.json");
        HochschildData d = system_from_json(load_json_file(req.input), &warnings);
        ExtensionAlgebra ext = build_product(d);
        report["total"] = algebra_to_json(ext.total);
        report["projection"] = matrix_to_json(ext.projection);
        return;
    }

    if (cmd == "extract" || cmd == "split-check") {
        if (req.input.empty())
            throw usage_error(cmd + ": needs --input FILE with {total, base, pi, section}");
        json j = load_json_file(req.input);
        Algebra total = algebra_from_json(j.at("total"), &warnings);
        Algebra base = algebra_from_json(j.at("base"), &warnings);
        Matrix pi = matrix_from_json(j.at("pi"), total.field, &warnings);
        Matrix s = matrix_from_json(j.at("section"), total.field, &warnings);
        if (cmd == "extract") {
            ExtractedSystem ex = extract_system(total, pi, base, s);
            report["system"] = system_to_json(ex.system);
            json kb = json::array();
            for (const auto& v : ex.kernel_basis) kb.push_back(vec_to_json(v));
            report["kernel_basis"] = kb;
        } else {
            auto sys = check_split(total, pi, base, s);
            report["split"] = bool(sys);
            if (sys) report["semidirect_system"] = system_to_json(*sys);
        }
        return;
    }

    if (cmd == "tower") {
        if (!req.base_path.empty() || !req.data_path.empty()) {
            // build mode: iterated one-dimensional extensions
            if (req.base_path.empty() || req.data_path.empty())
                throw usage_error("tower build mode needs --base FILE and --data FILE");
            Algebra base = algebra_from_json(load_json_file(req.base_path), &warnings);
            json data = load_json_file(req.data_path);
            std::vector<CoflagDatum> steps;
            Algebra cur = base;
            for (const auto& dj : data.at("data")) {
                steps.push_back(coflag_datum_from_json(dj, base.field, cur.dim, &warnings));
                cur = build_coflag_algebra(cur, steps.back()).total;
            }
            CoflagTower t = coflag_tower(base, steps);
            report["total"] = algebra_to_json(t.total);
            report["levels"] = t.levels.size();
            return;
        }
        Algebra a = load_algebra(req, &warnings);
        Tower t = decompose_tower(a, req.budget);
        json steps = json::array();
        for (const auto& st : t.steps)
            steps.push_back(json{{"quotient_dim", st.quotient.dim},
                                 {"quotient", algebra_to_json(st.quotient)},
                                 {"system", system_to_json(st.system)}});
        report["steps"] = steps;
        report["base"] = algebra_to_json(t.base);
        report["base_dim"] = t.base.dim;
        return;
    }

    if (cmd == "classify") {
        if (req.dim < 1) throw usage_error("classify: needs --dim N");
        FieldSpec f = req.field.value_or(FieldSpec::prime(5));
        auto classes = classify_coflag(req.dim, f, req.budget);
        json list = json::array();
        for (const auto& c : classes)
            list.push_back(json{{"provenance", c.provenance}, {"algebra", algebra_to_json(c.rep)}});
        report["count"] = classes.size();
        report["classes"] = list;
        return;
    }

    if (cmd == "dualize") {
        Algebra a = load_algebra(req, &warnings);
        report["coalgebra"] = coalgebra_to_json(dualize_algebra(a));
        return;
    }

    if (cmd == "convolve") {
        Coalgebra c = load_coalgebra(req, &warnings);
        report["algebra"] = algebra_to_json(convolution_algebra(c));
        return;
    }

    if (cmd == "supersolvable") {
        Coalgebra c = load_coalgebra(req, &warnings);
        auto chain = supersolvable_chain(c, req.budget);
        report["supersolvable"] = bool(chain);
        if (chain) {
            json levels = json::array();
            for (const auto& level : chain->subspaces) {
                json basis = json::array();
                for (const auto& v : level) basis.push_back(vec_to_json(v));
                levels.push_back(basis);
            }
            report["chain"] = levels;
        }
        json gs = json::array();
        for (const auto& g : grouplikes(c, req.budget)) gs.push_back(vec_to_json(g));
        report["grouplikes"] = gs;
        return;
    }

    if (cmd == "poisson-validate") {
        PoissonAlgebra p = load_poisson(req, &warnings);
        ValidationReport rep = validate_poisson(p);
        report["valid"] = rep.empty();
        report["violations"] = violations_to_json(rep);
        return;
    }

    if (cmd == "poisson-extend") {
        PoissonAlgebra p = load_poisson(req, &warnings);
        if (req.datum_path.empty()) throw usage_error("poisson-extend: needs --datum FILE");
        PoissonCoflagDatum d = poisson_datum_from_json(load_json_file(req.datum_path),
                                                       p.algebra.field, p.algebra.dim, &warnings);
        PoissonExtension ext = build_poisson_extension(p, d);
        report["total"] = poisson_to_json(ext.total);
        report["projection"] = matrix_to_json(ext.projection);
        return;
    }

    if (cmd == "poisson-classify") {
        PoissonAlgebra p = load_poisson(req, &warnings);
        std::vector<Matrix> autos;
        if (characters(p.algebra).empty() || bracket_span_dim(p) == p.algebra.dim)
            autos = {Matrix::identity(p.algebra.field, p.algebra.dim)};
        else
            autos = poisson_autos_brute(p, req.cap);
        PoissonClassification c = classify_poisson_ext(p, autos, req.budget);
        report["shortcut"] = c.shortcut;
        if (c.shortcut) report["shortcut_reason"] = c.shortcut_reason;
        report["data_enumerated"] = c.data_count;
        report["total_classes"] = c.total_classes();
        json reps = json::array();
        for (const auto& d : c.class_reps) reps.push_back(poisson_datum_to_json(d));
        report["first_kind_classes"] = reps;
        report["direct_product_class"] = true;
        return;
    }

    if (cmd == "poisson-aut") {
        PoissonAlgebra p = load_poisson(req, &warnings);
        if (req.datum_path.empty()) {
            auto group = poisson_autos_brute(p, req.cap);
            report["order"] = group.size();
            json list = json::array();
            for (const auto& m : group) list.push_back(matrix_to_json(m));
            report["automorphisms"] = list;
            return;
        }
        PoissonCoflagDatum d = poisson_datum_from_json(load_json_file(req.datum_path),
                                                       p.algebra.field, p.algebra.dim, &warnings);
        CoflagAutGroup g = poisson_aut_group(p, d, poisson_autos_brute(p, req.cap), req.budget);
        report["order"] = g.elements.size();
        json list = json::array();
        for (const auto& e : g.elements)
            list.push_back(json{{"s0", scalar_to_json(e.s0)},
                                {"psi", matrix_to_json(e.psi)},
                                {"r", vec_to_json(e.r)}});
        report["elements"] = list;
        return;
    }

    if (cmd == "catalog") {
        if (req.catalog_name.empty()) {
            report["names"] = catalog_names();
            return;
        }
        FieldSpec f = req.field.value_or(FieldSpec::prime(5));
        CatalogEntity e = catalog(req.catalog_name, f);
        if (std::holds_alternative<Algebra>(e))
            report["entity"] = algebra_to_json(std::get<Algebra>(e));
        else if (std::holds_alternative<Coalgebra>(e))
            report["entity"] = coalgebra_to_json(std::get<Coalgebra>(e));
        else
            report["entity"] = poisson_to_json(std::get<PoissonAlgebra>(e));
        return;
    }

    throw usage_error("unknown command: " + cmd);
}

}  // namespace coflag

#endif
