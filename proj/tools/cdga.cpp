#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cdga/dga.hpp"
#include "cdga/formality.hpp"
#include "cdga/minimal_model.hpp"
#include "cdga/presentation.hpp"

using json = nlohmann::ordered_json;

namespace {

struct Options {
    std::string input;
    int degree = 0;
    bool degree_set = false;
    int max_iterations = 3;
    std::string format = "text";
    bool verify = false;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw cdga::Error("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int max_generator_degree(const cdga::Presentation& p) {
    int m = 0;
    for (int d : p.table->degrees) m = std::max(m, d);
    return m;
}

cdga::DGA build_dga(const cdga::Presentation& p, int bound) {
    return cdga::DGA::build(
        cdga::QuotientAlgebra::build(p.table, p.relations, bound), p.differentials);
}

std::string bracket_list(const std::vector<std::string>& items) {
    std::string out = "[";
    for (std::size_t i = 0; i < items.size(); ++i) {
        if (i) out += ", ";
        out += items[i];
    }
    return out + "]";
}

std::vector<std::string> basis_strings(const cdga::QuotientAlgebra& alg, int k) {
    std::vector<std::string> out;
    for (const cdga::Monomial& m : alg.degree_basis(k)) {
        const std::string s = monomial_to_string(*alg.table(), m);
        out.push_back(s.empty() ? "1" : s);
    }
    return out;
}

json invariants_json(const cdga::InvariantTable& t) {
    json arr = json::array();
    for (const auto& [key, count] : t.v)
        arr.push_back(json::array({key.first, key.second, count}));
    return json{{"v", arr}};
}

void print_invariants_text(std::ostream& os, const cdga::InvariantTable& t) {
    for (const auto& [key, count] : t.v)
        os << "v^" << key.first << "_" << key.second << " = " << count << "\n";
}

int cmd_validate(const Options& opt) {
    const cdga::Presentation p = cdga::parse_presentation(read_file(opt.input));
    int bound = std::max(2, max_generator_degree(p) + 2);
    for (const cdga::Element& r : p.relations) {
        auto d = r.homogeneous_degree();
        if (d) bound = std::max(bound, *d + 1);
    }
    std::vector<std::string> problems;
    try {
        build_dga(p, bound);
    } catch (const cdga::ValidationError& e) {
        problems = e.problems;
    }
    if (opt.format == "json") {
        json out{{"ok", problems.empty()}};
        if (!problems.empty()) out["problems"] = problems;
        std::cout << out.dump(2) << "\n";
    } else if (problems.empty()) {
        std::cout << "ok\n";
    } else {
        for (const std::string& s : problems) std::cout << "problem: " << s << "\n";
    }
    return problems.empty() ? 0 : 2;
}

int cmd_basis(const Options& opt) {
    const cdga::Presentation p = cdga::parse_presentation(read_file(opt.input));
    const cdga::DGA a = build_dga(p, std::max(opt.degree, 2));
    const std::vector<std::string> basis = basis_strings(a.algebra(), opt.degree);
    if (opt.format == "json") {
        std::cout << json{{"degree", opt.degree},
                          {"dimension", basis.size()},
                          {"basis", basis}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "A^" << opt.degree << ": dimension " << basis.size() << "\n";
        std::cout << "basis: " << bracket_list(basis) << "\n";
    }
    return 0;
}

int cmd_cohomology(const Options& opt) {
    const cdga::Presentation p = cdga::parse_presentation(read_file(opt.input));
    std::vector<std::string> reps;
    if (opt.degree == 0) {
        reps.push_back("1");
    } else {
        const cdga::DGA a = build_dga(p, opt.degree + 1);
        for (const cdga::Element& e : a.cohomology(opt.degree).representatives)
            reps.push_back(e.to_string());
    }
    if (opt.format == "json") {
        std::cout << json{{"degree", opt.degree},
                          {"dimension", reps.size()},
                          {"basis", reps}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "H^" << opt.degree << ": dimension " << reps.size() << "\n";
        std::cout << "basis: " << bracket_list(reps) << "\n";
    }
    return 0;
}

int cmd_minimal_model(const Options& opt) {
    const cdga::Presentation p = cdga::parse_presentation(read_file(opt.input));
    auto a = std::make_shared<const cdga::DGA>(build_dga(p, opt.degree + 2));
    const cdga::MinimalModel m =
        cdga::minimal_model(a, opt.degree, opt.max_iterations);
    if (opt.verify) {
        std::vector<std::string> problems = verify_quasi_isomorphism(m);
        for (const std::string& s : verify_minimality(m)) problems.push_back(s);
        if (!problems.empty()) {
            for (const std::string& s : problems) std::cerr << "verify: " << s << "\n";
            return 4;
        }
    }
    if (opt.format == "json") {
        json gens = json::array();
        json diff = json::object();
        json phi = json::object();
        for (const cdga::ModelGenerator& g : m.generators) {
            gens.push_back(json{{"name", g.name},
                                {"degree", g.degree},
                                {"closed", g.kind == cdga::GeneratorKind::X}});
            diff[g.name] = g.differential.to_string();
            phi[g.name] = g.phi.to_string();
        }
        std::cout << json{{"degree", m.degree},
                          {"generators", gens},
                          {"differential", diff},
                          {"phi", phi},
                          {"invariants", invariants_json(m.invariants)}}
                         .dump(2)
                  << "\n";
    } else {
        std::cout << "minimal model in degree " << m.degree << " with "
                  << m.generators.size() << " generators\n";
        for (const cdga::ModelGenerator& g : m.generators)
            std::cout << g.phi.to_string() << " <- " << g.name << " -> "
                      << g.differential.to_string() << "\n";
        std::cout << "invariants:\n";
        print_invariants_text(std::cout, m.invariants);
    }
    return 0;
}

int cmd_cohomology_algebra(const Options& opt) {
    const cdga::Presentation p = cdga::parse_presentation(read_file(opt.input));
    const cdga::DGA a = build_dga(p, opt.degree + 1);
    const cdga::CohomologyPresentation h = cdga::cohomology_algebra(a, opt.degree);
    if (opt.format == "json") {
        json gens = json::array();
        for (std::size_t i = 0; i < h.table->size(); ++i)
            gens.push_back(json{{"name", h.table->names[i]},
                                {"degree", h.table->degrees[i]}});
        json rels = json::array();
        for (const cdga::Element& r : h.relations) rels.push_back(r.to_string());
        std::cout << json{{"degree", h.degree}, {"generators", gens}, {"relations", rels}}
                         .dump(2)
                  << "\n";
    } else {
        cdga::Presentation doc;
        doc.table = h.table;
        doc.relations = h.relations;
        std::cout << cdga::render_presentation(doc);
    }
    return 0;
}

int cmd_formality(const Options& opt) {
    const cdga::Presentation p = cdga::parse_presentation(read_file(opt.input));
    auto a = std::make_shared<const cdga::DGA>(build_dga(p, opt.degree + 2));
    const cdga::FormalityResult r =
        cdga::is_formal(a, opt.degree, opt.max_iterations);
    if (opt.format == "json") {
        json out{{"degree", opt.degree},
                 {"verdict", cdga::verdict_text(r.verdict)},
                 {"invariants", invariants_json(r.model_invariants)},
                 {"cohomology_invariants", invariants_json(r.cohomology_invariants)},
                 {"cohomology_model_truncated", r.cohomology_model_truncated}};
        out["first_difference"] =
            r.first_mismatch
                ? json::array({r.first_mismatch->first, r.first_mismatch->second})
                : json();
        out["psi_problems"] = r.psi_problems;
        std::cout << out.dump(2) << "\n";
    } else {
        std::cout << "formality in degree " << opt.degree << ": "
                  << cdga::verdict_text(r.verdict) << "\n";
        std::cout << "model invariants:\n";
        print_invariants_text(std::cout, r.model_invariants);
        if (r.cohomology_model_truncated)
            std::cout << "cohomology model invariants (iteration limit reached in degree "
                      << r.truncation_degree << "):\n";
        else
            std::cout << "cohomology model invariants:\n";
        print_invariants_text(std::cout, r.cohomology_invariants);
        if (r.first_mismatch)
            std::cout << "first difference: v^" << r.first_mismatch->first << "_"
                      << r.first_mismatch->second << "\n";
        if (r.verdict == cdga::FormalityVerdict::Formal)
            std::cout << "psi condition: holds\n";
        for (const std::string& s : r.psi_problems)
            std::cout << "psi condition: " << s << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finitely presented differential graded-commutative algebras over Q"};
    app.require_subcommand(1);

    Options opt;
    auto add_common = [&](CLI::App* sub, bool needs_degree) {
        sub->add_option("input", opt.input, "presentation file")->required();
        auto* d = sub->add_option("--degree", opt.degree, "degree parameter");
        if (needs_degree) d->required();
        sub->add_option("--max-iterations", opt.max_iterations,
                        "cap on passes of the kernel-killing phase")
            ->check(CLI::PositiveNumber);
        sub->add_option("--format", opt.format, "text or json")
            ->check(CLI::IsMember({"text", "json"}));
        return sub;
    };
    CLI::App* validate = add_common(app.add_subcommand("validate", "check a presentation"), false);
    CLI::App* basis = add_common(
        app.add_subcommand("basis", "normal monomials of one degree"), true);
    CLI::App* cohomology = add_common(
        app.add_subcommand("cohomology", "canonical cohomology basis of one degree"), true);
    CLI::App* model = add_common(
        app.add_subcommand("minimal-model", "minimal model through a degree"), true);
    model->add_flag("--verify", opt.verify, "re-check the result before printing");
    CLI::App* halg = add_common(
        app.add_subcommand("cohomology-algebra",
                           "presentation of the cohomology ring through a degree"),
        true);
    CLI::App* formality = add_common(
        app.add_subcommand("formality", "compare the model with the cohomology model"), true);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        if (app.got_subcommand(validate)) return cmd_validate(opt);
        if (opt.degree < 0) {
            std::cerr << "error: degree must be nonnegative\n";
            return 2;
        }
        if (app.got_subcommand(basis)) return cmd_basis(opt);
        if (app.got_subcommand(cohomology)) return cmd_cohomology(opt);
        if (opt.degree < 1) {
            std::cerr << "error: degree must be positive\n";
            return 2;
        }
        if (app.got_subcommand(model)) return cmd_minimal_model(opt);
        if (app.got_subcommand(halg)) return cmd_cohomology_algebra(opt);
        if (app.got_subcommand(formality)) return cmd_formality(opt);
        std::cerr << "error: no subcommand\n";
        return 2;
    } catch (const cdga::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cdga::ValidationError& e) {
        for (const std::string& s : e.problems) std::cerr << "error: " << s << "\n";
        return 2;
    } catch (const cdga::DegreeBoundError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const cdga::IterationLimitError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        std::cerr << "while running:";
        for (int i = 0; i < argc; ++i) std::cerr << " " << argv[i];
        std::cerr << "\n";
        return 4;
    }
}
