#pragma once

#include "toricaut/fan.hpp"
#include "toricaut/polynomial.hpp"
#include "toricaut/projectivization.hpp"
#include "toricaut/roots.hpp"

#include <nlohmann/json.hpp>

#include <optional>
#include <string>
#include <vector>

namespace toricaut {

using nlohmann::json;

/// Fan file contents: the fan itself plus, for files emitted by
/// `projectivize`, the base/fiber labels and the stored Picard presentation.
struct LoadedFan {
    Fan fan;
    std::optional<ProjectivizedFan> projectivized;
};

LoadedFan load_fan_file(const std::string& path);
std::vector<TorusInvariantDivisor> load_bundle_file(const std::string& path,
                                                    std::size_t ray_count);
std::vector<GradedPolynomial> load_forms_file(const std::string& path,
                                              const std::vector<std::string>& names);

json fan_to_json(const Fan& f);
json projectivized_fan_to_json(const ProjectivizedFan& p);
void write_text_file(const std::string& path, const std::string& contents);

// JSON-safe integers: int64 range as numbers, larger values as strings.
json int_to_json(const Int& v);
Int int_from_json(const json& j, const std::string& context);
json class_to_json(const ClassVec& v);
json int_vector_to_json(const std::vector<Int>& v);

/// Parse "1,0,-2" into a class/coefficient vector.
std::vector<Int> parse_int_list(const std::string& text);

// report builders (deterministic: sorted keys, sorted lists)
json validation_report_json(const ValidationReport& rep);
json grading_report_json(const GradingData& g, const Fan& f);
json sections_report_json(const GradingData& g, const ClassVec& degree,
                          const std::vector<std::vector<Int>>& monomials,
                          const std::vector<std::string>& names);
json ample_report_json(const Fan& f, const TorusInvariantDivisor& d, const GradingData& g);
json roots_report_json(const std::vector<Root>& roots, const std::vector<std::string>& names);
json aut_report_json(const AutReport& rep);
json split_report_json(const ProjectivizedFan& p, const RootSplit& split,
                       const std::vector<std::string>& names);
json cayley_report_json(const ProjectivizedFan& p, const CayleyForm& cf,
                        const std::vector<std::string>& names);
json cayley_act_report_json(const ProjectivizedFan& p, const CayleyForm& before,
                            const Root& root, const Rat& t, const GradedPolynomial& after,
                            const std::vector<GradedPolynomial>& after_coeffs,
                            const std::vector<std::string>& names);
json moduli_report_json(const ModuliReport& rep);
json demazure_report_json(const DemazureCheck& check);

std::string levi_description(const std::vector<LeviBlock>& blocks);
std::string root_action(const Root& r, const std::vector<std::string>& names);

/// Uniform human-readable rendering of a report (aligned key/value lines,
/// nested blocks indented).
std::string render_table(const json& report);

} // namespace toricaut
