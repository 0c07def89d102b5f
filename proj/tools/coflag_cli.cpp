// coflag: exact construction and classification of one-dimensional (and
// finite) extensions of associative algebras, with coalgebra and Poisson
// counterparts. See README.md for the file formats.

#include <coflag/cli.hpp>

#include <CLI11.hpp>

#include <iostream>

namespace {

coflag::FieldSpec parse_field(const std::string& s) {
    if (s == "Q" || s == "q") return coflag::FieldSpec::rationals();
    if (s.rfind("Fp:", 0) == 0 || s.rfind("fp:", 0) == 0)
        return coflag::FieldSpec::prime(std::stoll(s.substr(3)));
    throw coflag::usage_error("--field must be Q or Fp:<prime>");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact classification of algebra extensions"};
    app.require_subcommand(1);

    coflag::CommandRequest req;
    std::string field_str, out_str = "json";
    std::int64_t seed = -1;

    auto add_common = [&](CLI::App* sub, bool with_input = true) {
        if (with_input) {
            sub->add_option("--input", req.input, "entity JSON file");
            sub->add_option("--catalog", req.catalog_name, "catalog entry name");
        }
        sub->add_option("--field", field_str, "Q or Fp:<prime> (default Fp:5)");
        sub->add_option("--budget", req.budget, "enumeration budget");
        sub->add_option("--cap", req.cap, "brute-force search cap");
        sub->add_option("--aut-mode", req.aut_mode, "brute | catalog | file:PATH");
        sub->add_option("--out", out_str, "json | text");
        sub->add_option("--seed", seed, "seed echoed into the report");
    };

    for (const char* name :
         {"validate", "characters", "aut", "gh2", "hoc", "dualize", "convolve", "supersolvable",
          "poisson-validate", "poisson-classify"}) {
        add_common(app.add_subcommand(name));
    }
    {
        auto* sub = app.add_subcommand("gh2-brute");
        add_common(sub);
        sub->add_option("--vdim", req.v_dim, "kernel dimension (default 1)");
    }
    add_common(app.add_subcommand("product"));
    add_common(app.add_subcommand("extract"));
    add_common(app.add_subcommand("split-check"));
    {
        auto* sub = app.add_subcommand("tower");
        add_common(sub);
        sub->add_option("--base", req.base_path, "build mode: base algebra file");
        sub->add_option("--data", req.data_path, "build mode: datum list file {\"data\": [...]}");
    }
    {
        auto* sub = app.add_subcommand("classify");
        add_common(sub, false);
        sub->add_option("--dim", req.dim, "target dimension")->required();
    }
    {
        auto* sub = app.add_subcommand("poisson-extend");
        add_common(sub);
        sub->add_option("--datum", req.datum_path, "Poisson datum JSON file");
    }
    {
        auto* sub = app.add_subcommand("poisson-aut");
        add_common(sub);
        sub->add_option("--datum", req.datum_path, "optional datum: group of the extension");
    }
    add_common(app.add_subcommand("catalog"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    }

    req.command = app.get_subcommands().front()->get_name();
    try {
        if (!field_str.empty()) req.field = parse_field(field_str);
        if (out_str == "text")
            req.format = coflag::OutputFormat::text_format;
        else if (out_str != "json")
            throw coflag::usage_error("--out must be json or text");
        if (seed >= 0) req.seed = seed;
    } catch (const coflag::error& e) {
        std::cerr << "coflag: " << e.what() << "\n";
        return 3;
    }
    return coflag::run(req, std::cout, std::cerr);
}
