#include "toricaut/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <limits>
#include <sstream>

namespace toricaut {

namespace {

json parse_json_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw Error(path + ": cannot open file");
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw Error(path + ": " + e.what());
    }
}

[[noreturn]] void field_error(const std::string& path, const std::string& field,
                              const std::string& what)
{
    throw Error(path + ": field '" + field + "': " + what);
}

const json& require_field(const json& j, const std::string& path, const std::string& field)
{
    auto it = j.find(field);
    if (it == j.end()) throw Error(path + ": missing field '" + field + "'");
    return *it;
}

std::vector<Int> int_vector_from_json(const json& j, const std::string& context)
{
    if (!j.is_array()) throw Error(context + ": expected an array of integers");
    std::vector<Int> out;
    out.reserve(j.size());
    for (const auto& x : j) out.push_back(int_from_json(x, context));
    return out;
}

IntMatrix int_matrix_from_json(const json& j, const std::string& context, std::size_t cols)
{
    if (!j.is_array()) throw Error(context + ": expected an array of rows");
    std::vector<std::vector<Int>> rows;
    for (const auto& row : j) {
        rows.push_back(int_vector_from_json(row, context));
        if (rows.back().size() != cols)
            throw Error(context + ": row has length " + std::to_string(rows.back().size()) +
                        ", expected " + std::to_string(cols));
    }
    return IntMatrix::from_rows(rows);
}

} // namespace

json int_to_json(const Int& v)
{
    static const Int lo = std::numeric_limits<std::int64_t>::min();
    static const Int hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return static_cast<std::int64_t>(v);
    return v.str();
}

Int int_from_json(const json& j, const std::string& context)
{
    if (j.is_number_integer()) return Int(j.get<std::int64_t>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw Error(context + ": '" + j.get<std::string>() + "' is not an integer");
        }
    }
    throw Error(context + ": expected an integer, got " + std::string(j.type_name()));
}

json class_to_json(const ClassVec& v)
{
    json out = json::array();
    for (const Int& x : v) out.push_back(int_to_json(x));
    return out;
}

json int_vector_to_json(const std::vector<Int>& v)
{
    return class_to_json(v);
}

std::vector<Int> parse_int_list(const std::string& text)
{
    std::vector<Int> out;
    std::string item;
    std::istringstream in(text);
    while (std::getline(in, item, ',')) {
        std::string trimmed;
        for (char c : item)
            if (!std::isspace(static_cast<unsigned char>(c))) trimmed += c;
        if (trimmed.empty()) throw Error("empty entry in integer list '" + text + "'");
        try {
            out.push_back(Int(trimmed));
        } catch (const std::exception&) {
            throw Error("'" + trimmed + "' is not an integer");
        }
    }
    if (out.empty()) throw Error("empty integer list");
    return out;
}

LoadedFan load_fan_file(const std::string& path)
{
    json j = parse_json_file(path);
    if (!j.is_object()) throw Error(path + ": fan file must be a JSON object");

    LoadedFan loaded;
    Fan& f = loaded.fan;
    const json& rank = require_field(j, path, "rank");
    if (!rank.is_number_unsigned() || rank.get<std::uint64_t>() == 0)
        field_error(path, "rank", "must be a positive integer");
    f.rank = rank.get<std::size_t>();

    const json& rays = require_field(j, path, "rays");
    if (!rays.is_array()) field_error(path, "rays", "must be an array of integer vectors");
    for (std::size_t i = 0; i < rays.size(); ++i)
        f.rays.push_back(int_vector_from_json(rays[i], path + ": rays[" + std::to_string(i) + "]"));

    const json& cones = require_field(j, path, "max_cones");
    if (!cones.is_array()) field_error(path, "max_cones", "must be an array of index lists");
    for (std::size_t c = 0; c < cones.size(); ++c) {
        const json& cone = cones[c];
        if (!cone.is_array())
            field_error(path, "max_cones[" + std::to_string(c) + "]", "must be an index list");
        std::vector<std::size_t> indices;
        for (const auto& x : cone) {
            if (!x.is_number_unsigned())
                field_error(path, "max_cones[" + std::to_string(c) + "]",
                            "indices must be non-negative integers");
            indices.push_back(x.get<std::size_t>());
        }
        f.max_cones.push_back(std::move(indices));
    }

    if (j.contains("labels")) {
        const json& labels = j["labels"];
        auto base = require_field(labels, path, "base").get<std::vector<std::size_t>>();
        auto fiber = require_field(labels, path, "fiber").get<std::vector<std::size_t>>();
        if (base.size() + fiber.size() != f.rays.size())
            field_error(path, "labels", "base and fiber labels must cover all rays");

        ProjectivizedFan p;
        p.fan = f;
        p.base_count = base.size();
        p.fiber_count = fiber.size();

        const json& pic = require_field(j, path, "picard");
        AbelianGroupPresentation group;
        group.free_rank = require_field(pic, path, "picard.free_rank").get<std::size_t>();
        for (const auto& t : require_field(pic, path, "picard.torsion"))
            group.torsion.push_back(int_from_json(t, path + ": picard.torsion"));
        group.projection = int_matrix_from_json(require_field(pic, path, "picard.projection"),
                                                path + ": picard.projection", f.rays.size());
        if (group.projection.rows() != group.free_rank + group.torsion.size())
            field_error(path, "picard.projection", "row count does not match the group");

        p.picard.class_group = std::move(group);
        for (const auto& d : require_field(pic, path, "picard.x_degrees"))
            p.picard.variable_degrees.push_back(
                p.picard.class_group.reduce(int_vector_from_json(d, path + ": picard.x_degrees")));
        for (const auto& d : require_field(pic, path, "picard.y_degrees"))
            p.picard.variable_degrees.push_back(
                p.picard.class_group.reduce(int_vector_from_json(d, path + ": picard.y_degrees")));
        if (p.picard.variable_degrees.size() != f.rays.size())
            field_error(path, "picard", "degree count does not match the ray count");
        loaded.projectivized = std::move(p);
    }
    return loaded;
}

std::vector<TorusInvariantDivisor> load_bundle_file(const std::string& path,
                                                    std::size_t ray_count)
{
    json j = parse_json_file(path);
    if (!j.is_object()) throw Error(path + ": bundle file must be a JSON object");
    const json& divisors = require_field(j, path, "divisors");
    if (!divisors.is_array() || divisors.size() < 2)
        field_error(path, "divisors", "must list at least two divisor coefficient vectors");
    std::vector<TorusInvariantDivisor> out;
    for (std::size_t i = 0; i < divisors.size(); ++i) {
        TorusInvariantDivisor d;
        d.coeffs = int_vector_from_json(divisors[i], path + ": divisors[" + std::to_string(i) + "]");
        if (d.coeffs.size() != ray_count)
            field_error(path, "divisors[" + std::to_string(i) + "]",
                        "length " + std::to_string(d.coeffs.size()) + " does not match the " +
                            std::to_string(ray_count) + " fan rays");
        out.push_back(std::move(d));
    }
    return out;
}

std::vector<GradedPolynomial> load_forms_file(const std::string& path,
                                              const std::vector<std::string>& names)
{
    json j = parse_json_file(path);
    if (!j.is_object()) throw Error(path + ": forms file must be a JSON object");
    const json& forms = require_field(j, path, "forms");
    if (!forms.is_array()) field_error(path, "forms", "must be an array of polynomial strings");
    std::vector<GradedPolynomial> out;
    for (std::size_t i = 0; i < forms.size(); ++i) {
        if (!forms[i].is_string())
            field_error(path, "forms[" + std::to_string(i) + "]", "must be a string");
        try {
            out.push_back(parse_polynomial(forms[i].get<std::string>(), names));
        } catch (const Error& e) {
            field_error(path, "forms[" + std::to_string(i) + "]", e.what());
        }
    }
    return out;
}

json fan_to_json(const Fan& f)
{
    json j;
    j["rank"] = f.rank;
    j["rays"] = json::array();
    for (const auto& r : f.rays) j["rays"].push_back(int_vector_to_json(r));
    j["max_cones"] = f.max_cones;
    return j;
}

json projectivized_fan_to_json(const ProjectivizedFan& p)
{
    json j = fan_to_json(p.fan);
    std::vector<std::size_t> base(p.base_count), fiber(p.fiber_count);
    for (std::size_t i = 0; i < p.base_count; ++i) base[i] = i;
    for (std::size_t i = 0; i < p.fiber_count; ++i) fiber[i] = p.base_count + i;
    j["labels"] = {{"base", base}, {"fiber", fiber}};

    json pic;
    pic["free_rank"] = p.picard.class_group.free_rank;
    pic["torsion"] = json::array();
    for (const Int& t : p.picard.class_group.torsion) pic["torsion"].push_back(int_to_json(t));
    pic["projection"] = json::array();
    for (std::size_t r = 0; r < p.picard.class_group.projection.rows(); ++r)
        pic["projection"].push_back(int_vector_to_json(p.picard.class_group.projection.row(r)));
    pic["x_degrees"] = json::array();
    for (const auto& d : p.x_degrees()) pic["x_degrees"].push_back(class_to_json(d));
    pic["y_degrees"] = json::array();
    for (const auto& d : p.y_degrees()) pic["y_degrees"].push_back(class_to_json(d));
    j["picard"] = std::move(pic);
    return j;
}

void write_text_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path);
    if (!out) throw Error(path + ": cannot open for writing");
    out << contents;
    if (!out) throw Error(path + ": write failed");
}

json validation_report_json(const ValidationReport& rep)
{
    json j;
    j["command"] = "validate";
    j["valid"] = rep.valid();
    j["issues"] = json::array();
    for (const auto& issue : rep.issues)
        j["issues"].push_back({{"message", issue.message}, {"subjects", issue.subjects}});
    return j;
}

json grading_report_json(const GradingData& g, const Fan& f)
{
    json j;
    j["command"] = "classgroup";
    j["group"] = {{"description", g.class_group.describe()},
                  {"free_rank", g.class_group.free_rank},
                  {"torsion", json::array()}};
    for (const Int& t : g.class_group.torsion) j["group"]["torsion"].push_back(int_to_json(t));
    j["variable_degrees"] = json::array();
    for (const auto& d : g.variable_degrees) j["variable_degrees"].push_back(class_to_json(d));
    j["degree_map"] = json::array();
    for (std::size_t r = 0; r < g.class_group.projection.rows(); ++r)
        j["degree_map"].push_back(int_vector_to_json(g.class_group.projection.row(r)));
    j["ray_count"] = f.ray_count();
    j["rank"] = f.rank;
    return j;
}

json sections_report_json(const GradingData& g, const ClassVec& degree,
                          const std::vector<std::vector<Int>>& monomials,
                          const std::vector<std::string>& names)
{
    json j;
    j["command"] = "sections";
    j["degree"] = class_to_json(g.class_group.reduce(degree));
    j["count"] = monomials.size();
    j["monomials"] = json::array();
    for (const auto& m : monomials) {
        Exponents e(m.size());
        for (std::size_t i = 0; i < m.size(); ++i) e[i] = static_cast<int>(m[i]);
        j["monomials"].push_back(
            GradedPolynomial::monomial(names.size(), e).to_string(names));
    }
    return j;
}

json ample_report_json(const Fan& f, const TorusInvariantDivisor& d, const GradingData& g)
{
    json j;
    j["command"] = "ample";
    j["divisor"] = int_vector_to_json(d.coeffs);
    j["class"] = class_to_json(g.class_group.project(d.coeffs));
    j["cartier"] = is_cartier(f, d);
    j["ample"] = is_ample(f, d);
    SupportFunction h = support_function(f, d);
    j["support_values"] = int_vector_to_json(h.ray_values);
    j["cone_covectors"] = json::array();
    for (const auto& m : h.cone_linear_forms) {
        json row = json::array();
        for (const Rat& x : m) row.push_back(x.str());
        j["cone_covectors"].push_back(std::move(row));
    }
    return j;
}

std::string root_action(const Root& r, const std::vector<std::string>& names)
{
    GradedPolynomial m = GradedPolynomial::monomial(names.size(), r.monomial);
    return names[r.variable] + " -> " + names[r.variable] + " + t*" + m.to_string(names);
}

namespace {

json root_to_json(const Root& r, const std::vector<std::string>& names)
{
    return {{"variable", names[r.variable]},
            {"monomial", GradedPolynomial::monomial(names.size(), r.monomial).to_string(names)},
            {"exponents", r.monomial},
            {"kind", r.kind == RootKind::reductive ? "reductive" : "unipotent"},
            {"action", root_action(r, names)}};
}

} // namespace

json roots_report_json(const std::vector<Root>& roots, const std::vector<std::string>& names)
{
    json j;
    j["command"] = "roots";
    j["count"] = roots.size();
    std::size_t reductive = 0;
    j["roots"] = json::array();
    for (const auto& r : roots) {
        if (r.kind == RootKind::reductive) ++reductive;
        j["roots"].push_back(root_to_json(r, names));
    }
    j["reductive"] = reductive;
    j["unipotent"] = roots.size() - reductive;
    return j;
}

std::string levi_description(const std::vector<LeviBlock>& blocks)
{
    std::ostringstream os;
    for (std::size_t i = 0; i < blocks.size(); ++i)
        os << (i ? " x " : "") << "GL(" << blocks[i].multiplicity << ")";
    return os.str();
}

json aut_report_json(const AutReport& rep)
{
    json j;
    j["command"] = "aut-report";
    j["levi_blocks"] = json::array();
    for (const auto& b : rep.levi_blocks)
        j["levi_blocks"].push_back(
            {{"degree", class_to_json(b.degree)}, {"multiplicity", b.multiplicity}});
    j["levi"] = levi_description(rep.levi_blocks);
    j["reductive_roots"] = rep.reductive_root_count;
    j["unipotent_roots"] = rep.unipotent_root_count;
    j["dim_g"] = int_to_json(rep.dim_g);
    j["dim_torus"] = int_to_json(rep.dim_torus);
    j["dim_aut0"] = int_to_json(rep.dim_aut0);
    j["dim_unipotent_radical"] = int_to_json(rep.dim_unipotent_radical);
    return j;
}

json split_report_json(const ProjectivizedFan& p, const RootSplit& split,
                       const std::vector<std::string>& names)
{
    json j;
    j["command"] = "split-roots";
    j["base_variable_count"] = p.base_count;
    j["fiber_variable_count"] = p.fiber_count;
    j["base_roots"] = json::array();
    for (const auto& r : split.base_roots) j["base_roots"].push_back(root_to_json(r, names));
    j["fiber_roots"] = json::array();
    for (const auto& r : split.fiber_roots) j["fiber_roots"].push_back(root_to_json(r, names));
    std::size_t base_unip = 0, fiber_unip = 0;
    for (const auto& r : split.base_roots)
        if (r.kind == RootKind::unipotent) ++base_unip;
    for (const auto& r : split.fiber_roots)
        if (r.kind == RootKind::unipotent) ++fiber_unip;
    j["counts"] = {{"base", split.base_roots.size()},
                   {"fiber", split.fiber_roots.size()},
                   {"total", split.base_roots.size() + split.fiber_roots.size()},
                   {"base_unipotent", base_unip},
                   {"fiber_unipotent", fiber_unip}};
    return j;
}

json cayley_report_json(const ProjectivizedFan& p, const CayleyForm& cf,
                        const std::vector<std::string>& names)
{
    json j;
    j["command"] = "cayley";
    j["form"] = cf.assembled.to_string(names);
    j["degree"] = class_to_json(p.hyperplane_class());
    j["coefficients"] = json::array();
    for (const auto& f : cf.coefficients) j["coefficients"].push_back(f.to_string(names));
    j["cayley_space_dim"] =
        int_to_json(Int(graded_piece_dimension(p.picard, p.hyperplane_class())));
    return j;
}

json cayley_act_report_json(const ProjectivizedFan& p, const CayleyForm& before,
                            const Root& root, const Rat& t, const GradedPolynomial& after,
                            const std::vector<GradedPolynomial>& after_coeffs,
                            const std::vector<std::string>& names)
{
    json j;
    j["command"] = "cayley-act";
    j["root"] = root_to_json(root, names);
    j["t"] = t.str();
    j["form_before"] = before.assembled.to_string(names);
    j["form_after"] = after.to_string(names);
    j["coefficients_before"] = json::array();
    for (const auto& f : before.coefficients) j["coefficients_before"].push_back(f.to_string(names));
    j["coefficients_after"] = json::array();
    for (const auto& f : after_coeffs) j["coefficients_after"].push_back(f.to_string(names));
    json changed = json::array();
    for (std::size_t s = 0; s < after_coeffs.size(); ++s)
        if (!(after_coeffs[s] == before.coefficients[s])) changed.push_back(names[p.base_count + s]);
    j["changed_slots"] = std::move(changed);
    return j;
}

json moduli_report_json(const ModuliReport& rep)
{
    json j;
    j["command"] = "moduli-dim";
    j["cayley_space_dim"] = int_to_json(rep.cayley_space_dim);
    j["dim_g"] = int_to_json(rep.dim_g);
    j["dim_torus"] = int_to_json(rep.dim_torus);
    j["dim_aut0"] = int_to_json(rep.dim_aut0);
    j["moduli_dim"] = int_to_json(rep.moduli_dim);
    j["ample"] = rep.ample;
    json classical;
    classical["bundle_section_dims"] = json::array();
    classical["bundle_projective_dims"] = json::array();
    for (const Int& d : rep.bundle_section_dims) {
        classical["bundle_section_dims"].push_back(int_to_json(d));
        classical["bundle_projective_dims"].push_back(int_to_json(d - 1));
    }
    classical["base_aut0_dim"] = int_to_json(rep.base_aut0_dim);
    j["classical"] = std::move(classical);
    j["warnings"] = rep.warnings;
    return j;
}

json demazure_report_json(const DemazureCheck& check)
{
    json j;
    j["command"] = "demazure-check";
    j["monomial_root_count"] = check.monomial_root_count;
    j["lattice_pair_count"] = check.lattice_pair_count;
    j["match"] = check.match;
    j["witnesses"] = json::array();
    for (const auto& w : check.witnesses)
        j["witnesses"].push_back({{"ray", w.ray},
                                  {"character", int_vector_to_json(w.character)},
                                  {"exponents", w.exponents}});
    return j;
}

namespace {

bool is_scalar_array(const json& j)
{
    return j.is_array() && std::all_of(j.begin(), j.end(), [](const json& x) {
               return x.is_primitive();
           });
}

std::string scalar_to_text(const json& j)
{
    if (j.is_string()) return j.get<std::string>();
    return j.dump();
}

void render(const json& j, std::ostream& os, int indent)
{
    const std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
    if (j.is_object()) {
        for (const auto& [key, value] : j.items()) {
            if (value.is_primitive()) {
                os << pad << key << ": " << scalar_to_text(value) << "\n";
            } else if (is_scalar_array(value)) {
                os << pad << key << ": " << value.dump() << "\n";
            } else {
                os << pad << key << ":\n";
                render(value, os, indent + 1);
            }
        }
    } else if (j.is_array()) {
        if (j.empty()) os << pad << "(none)\n";
        for (const auto& item : j) {
            if (item.is_primitive() || is_scalar_array(item)) {
                os << pad << "- " << (item.is_primitive() ? scalar_to_text(item) : item.dump())
                   << "\n";
            } else if (item.is_object()) {
                bool first = true;
                for (const auto& [key, value] : item.items()) {
                    os << (first ? pad + "- " : pad + "  ") << key << ": "
                       << (value.is_primitive() ? scalar_to_text(value) : value.dump()) << "\n";
                    first = false;
                }
            } else {
                render(item, os, indent + 1);
            }
        }
    } else {
        os << pad << scalar_to_text(j) << "\n";
    }
}

} // namespace

std::string render_table(const json& report)
{
    std::ostringstream os;
    render(report, os, 0);
    return os.str();
}

} // namespace toricaut
