#pragma once

#include "toricaut/grading.hpp"
#include "toricaut/projectivization.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace toricaut {

using Exponents = std::vector<int>;

/// Multivariate polynomial with exact rational coefficients, stored as a
/// sorted exponent-vector -> coefficient map. Zero coefficients are never
/// kept.
class GradedPolynomial {
public:
    GradedPolynomial() = default;
    explicit GradedPolynomial(std::size_t nvars) : nvars_(nvars) {}

    static GradedPolynomial constant(std::size_t nvars, Rat c);
    static GradedPolynomial variable(std::size_t nvars, std::size_t index);
    static GradedPolynomial monomial(std::size_t nvars, Exponents e, Rat c = 1);

    std::size_t variable_count() const { return nvars_; }
    const std::map<Exponents, Rat>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(const Exponents& e, const Rat& c);

    GradedPolynomial operator+(const GradedPolynomial& rhs) const;
    GradedPolynomial operator-(const GradedPolynomial& rhs) const;
    GradedPolynomial operator*(const GradedPolynomial& rhs) const;
    GradedPolynomial operator*(const Rat& c) const;
    GradedPolynomial pow(unsigned n) const;
    bool operator==(const GradedPolynomial& rhs) const = default;

    /// Largest total exponent sum over the terms (-1 for the zero polynomial).
    int polynomial_degree() const;

    /// Common degree of all terms under the grading; nullopt when the
    /// polynomial is inhomogeneous. The zero polynomial counts as homogeneous
    /// of every degree and reports nullopt with `zero_is_homogeneous`.
    std::optional<ClassVec> homogeneous_degree(const GradingData& g) const;

    /// True when every term only involves variables with index < bound.
    bool uses_only_variables_below(std::size_t bound) const;

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    std::map<Exponents, Rat> terms_;
};

/// Standard variable names x1..xl (and y1..yr for a projectivized ring).
std::vector<std::string> cox_variable_names(std::size_t l, std::size_t r = 0);

/// Parse "3*x1^2*x2 - 1/2*y1**3 + 4" over the given variable names.
/// Whitespace-tolerant; '**' is accepted for '^'; '*' between factors may be
/// omitted. Throws Error with a character position on malformed input.
GradedPolynomial parse_polynomial(const std::string& text,
                                  const std::vector<std::string>& names);

/// Graded endomorphism of the Cox ring: one image polynomial per variable.
struct GradedSubstitution {
    std::vector<GradedPolynomial> images;

    static GradedSubstitution identity(std::size_t nvars);
    /// Each image must be homogeneous of its variable's degree.
    void validate(const GradingData& g) const;
};

/// Replace each variable by its image and expand over exact rationals.
GradedPolynomial apply_substitution(const GradedPolynomial& p, const GradedSubstitution& s);

/// F = sum f_j y_j of degree (0,1) in the Cox ring of P(E).
struct CayleyForm {
    std::vector<GradedPolynomial> coefficients; // f_1, ..., f_r in the x-variables
    GradedPolynomial assembled;                 // F
};

/// Assemble the Cayley form; each f_j must live in the x-variables with
/// class alpha_j (the degree mismatch error names the offending index).
CayleyForm cayley_form(const std::vector<GradedPolynomial>& fs, const ProjectivizedFan& p);

/// Unique tuple (g_1, ..., g_r) with p = sum g_j y_j; requires p homogeneous
/// of degree (0,1) and linear in the y-variables.
std::vector<GradedPolynomial> extract_coefficients(const GradedPolynomial& p,
                                                   const ProjectivizedFan& pf);

/// A degree sequence is nondegenerate when it avoids every variable degree.
bool nondegenerate(const std::vector<ClassVec>& beta, const GradingData& g);

/// Base-class alpha embedded into the Picard coordinates as (alpha, 0).
ClassVec embed_base_class(const ProjectivizedFan& p, const ClassVec& alpha);

} // namespace toricaut
