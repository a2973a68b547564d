#include "toricaut/io.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <string>

namespace {

using namespace toricaut;

// grading and variable names of a fan file: projectivized files keep their
// stored Picard presentation, plain fans get the Cox grading
GradingData grading_of(const LoadedFan& lf)
{
    if (lf.projectivized) return lf.projectivized->picard;
    return class_group(lf.fan);
}

std::vector<std::string> names_of(const LoadedFan& lf)
{
    if (lf.projectivized)
        return cox_variable_names(lf.projectivized->base_count, lf.projectivized->fiber_count);
    return cox_variable_names(lf.fan.ray_count());
}

const ProjectivizedFan& require_projectivized(const LoadedFan& lf, const std::string& path)
{
    if (!lf.projectivized)
        throw Error(path + ": not a projectivized fan file (missing labels/picard blocks; "
                           "produce one with the projectivize command)");
    return *lf.projectivized;
}

void emit(const json& report, bool as_json)
{
    if (as_json) std::cout << report.dump(2) << "\n";
    else std::cout << render_table(report);
}

Root parse_root_spec(const std::string& spec, const std::vector<std::string>& names,
                     const GradingData& g)
{
    auto eq = spec.find('=');
    if (eq == std::string::npos)
        throw Error("root spec must look like <variable>=<monomial>, e.g. y1=x1^2*y2");
    std::string var_name = spec.substr(0, eq);
    auto var_it = std::find(names.begin(), names.end(), var_name);
    if (var_it == names.end()) throw Error("unknown variable '" + var_name + "' in root spec");
    std::size_t var = static_cast<std::size_t>(var_it - names.begin());

    GradedPolynomial mono = parse_polynomial(spec.substr(eq + 1), names);
    if (mono.terms().size() != 1 || mono.terms().begin()->second != 1)
        throw Error("root monomial must be a single monomial with coefficient 1");
    Exponents e = mono.terms().begin()->first;
    if (e[var] != 0) throw Error("root monomial must not be divisible by the root variable");
    auto deg = mono.homogeneous_degree(g);
    if (!deg || *deg != g.variable_degrees[var])
        throw Error("root monomial does not have the degree of variable " + var_name);
    return {var, e, mono.polynomial_degree() == 1 ? RootKind::reductive : RootKind::unipotent};
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"exact toolkit for toric fans, Cox gradings, projectivized bundles,\n"
                 "automorphism roots, Cayley forms and moduli dimension counts"};
    app.require_subcommand(1);
    bool as_json = false;
    app.add_flag("--json", as_json, "emit machine-readable JSON instead of a table");

    std::string fan_path, bundle_path, forms_path, out_path, degree_arg, divisor_arg, root_arg;
    std::string t_arg = "1";

    auto* validate = app.add_subcommand("validate", "check fan structure and face intersections");
    validate->add_option("fan", fan_path, "fan file")->required();

    auto* classgroup = app.add_subcommand("classgroup", "divisor class group and Cox degrees");
    classgroup->add_option("fan", fan_path, "fan file")->required();

    auto* sections = app.add_subcommand("sections", "monomial basis of a graded piece");
    sections->add_option("fan", fan_path, "fan file")->required();
    sections->add_option("--degree", degree_arg, "class in canonical coordinates, e.g. 2 or 1,0")
        ->required();

    auto* ample = app.add_subcommand("ample", "Cartier and ampleness test for a divisor");
    ample->add_option("fan", fan_path, "fan file")->required();
    ample->add_option("--divisor", divisor_arg, "coefficients a_1,...,a_l")->required();

    auto* projectivize_cmd =
        app.add_subcommand("projectivize", "fan of P(E) for a sum of line bundles");
    projectivize_cmd->add_option("fan", fan_path, "base fan file")->required();
    projectivize_cmd->add_option("bundle", bundle_path, "bundle file")->required();
    projectivize_cmd->add_option("-o,--output", out_path, "write the fan file here");

    auto* roots_cmd = app.add_subcommand("roots", "roots of the graded automorphism group");
    roots_cmd->add_option("fan", fan_path, "fan file")->required();

    auto* aut = app.add_subcommand("aut-report", "Levi blocks, root counts and dimensions");
    aut->add_option("fan", fan_path, "fan file")->required();

    auto* split = app.add_subcommand("split-roots", "base/fiber partition of P(E) roots");
    split->add_option("pfan", fan_path, "projectivized fan file")->required();

    auto* cayley_cmd = app.add_subcommand("cayley", "assemble a Cayley form from coefficients");
    cayley_cmd->add_option("pfan", fan_path, "projectivized fan file")->required();
    cayley_cmd->add_option("--forms", forms_path, "forms file")->required();

    auto* act = app.add_subcommand("cayley-act", "apply a root substitution to a Cayley form");
    act->add_option("pfan", fan_path, "projectivized fan file")->required();
    act->add_option("--forms", forms_path, "forms file")->required();
    act->add_option("--root", root_arg, "root spec <variable>=<monomial>")->required();
    act->add_option("--t", t_arg, "parameter value (rational, default 1)");

    auto* moduli = app.add_subcommand("moduli-dim", "dimension count for the moduli of "
                                                    "complete intersections");
    moduli->add_option("fan", fan_path, "base fan file")->required();
    moduli->add_option("bundle", bundle_path, "bundle file")->required();

    auto* demazure = app.add_subcommand("demazure-check", "monomial roots vs lattice pairs");
    demazure->add_option("fan", fan_path, "fan file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << e.what() << "\n";
        return 2;
    }

    try {
        if (*validate) {
            LoadedFan lf = load_fan_file(fan_path);
            ValidationReport rep = validate_fan(lf.fan);
            emit(validation_report_json(rep), as_json);
            return rep.valid() ? 0 : 1;
        }
        if (*classgroup) {
            LoadedFan lf = load_fan_file(fan_path);
            emit(grading_report_json(class_group(lf.fan), lf.fan), as_json);
        }
        if (*sections) {
            LoadedFan lf = load_fan_file(fan_path);
            GradingData g = grading_of(lf);
            ClassVec degree = parse_int_list(degree_arg);
            if (degree.size() != g.class_group.coord_count())
                throw Error("--degree needs " + std::to_string(g.class_group.coord_count()) +
                            " coordinates for this fan");
            auto monomials = monomials_of_degree(g, degree);
            emit(sections_report_json(g, degree, monomials, names_of(lf)), as_json);
        }
        if (*ample) {
            LoadedFan lf = load_fan_file(fan_path);
            require_valid(lf.fan);
            if (!is_complete(lf.fan)) throw Error("ample requires a complete fan");
            TorusInvariantDivisor d{parse_int_list(divisor_arg)};
            emit(ample_report_json(lf.fan, d, class_group(lf.fan)), as_json);
        }
        if (*projectivize_cmd) {
            LoadedFan lf = load_fan_file(fan_path);
            auto divisors = load_bundle_file(bundle_path, lf.fan.ray_count());
            BundleSpec e = make_bundle(class_group(lf.fan), std::move(divisors));
            ProjectivizedFan p = projectivize(lf.fan, e);
            json out = projectivized_fan_to_json(p);
            if (out_path.empty()) std::cout << out.dump(2) << "\n";
            else write_text_file(out_path, out.dump(2) + "\n");
        }
        if (*roots_cmd) {
            LoadedFan lf = load_fan_file(fan_path);
            GradingData g = grading_of(lf);
            emit(roots_report_json(enumerate_roots(g), names_of(lf)), as_json);
        }
        if (*aut) {
            LoadedFan lf = load_fan_file(fan_path);
            emit(aut_report_json(aut_report(grading_of(lf))), as_json);
        }
        if (*split) {
            LoadedFan lf = load_fan_file(fan_path);
            const ProjectivizedFan& p = require_projectivized(lf, fan_path);
            emit(split_report_json(p, split_roots_of_projectivization(p), names_of(lf)), as_json);
        }
        if (*cayley_cmd || *act) {
            LoadedFan lf = load_fan_file(fan_path);
            const ProjectivizedFan& p = require_projectivized(lf, fan_path);
            std::vector<std::string> names = names_of(lf);
            auto fs = load_forms_file(forms_path, names);
            CayleyForm cf = cayley_form(fs, p);
            if (*cayley_cmd) {
                emit(cayley_report_json(p, cf, names), as_json);
            } else {
                Root root = parse_root_spec(root_arg, names, p.picard);
                Rat t;
                try {
                    t = Rat(t_arg);
                } catch (const std::exception&) {
                    throw Error("--t must be a rational number, got '" + t_arg + "'");
                }
                GradedSubstitution s = substitution_of_root(root, t, names.size());
                s.validate(p.picard);
                GradedPolynomial after = apply_substitution(cf.assembled, s);
                emit(cayley_act_report_json(p, cf, root, t, after,
                                            extract_coefficients(after, p), names),
                     as_json);
            }
        }
        if (*moduli) {
            LoadedFan lf = load_fan_file(fan_path);
            auto divisors = load_bundle_file(bundle_path, lf.fan.ray_count());
            BundleSpec e = make_bundle(class_group(lf.fan), std::move(divisors));
            emit(moduli_report_json(moduli_dimension(projectivize(lf.fan, e))), as_json);
        }
        if (*demazure) {
            LoadedFan lf = load_fan_file(fan_path);
            emit(demazure_report_json(demazure_crosscheck(lf.fan)), as_json);
        }
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
