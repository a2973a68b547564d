#pragma once

#include "toricaut/divisor.hpp"
#include "toricaut/fan.hpp"
#include "toricaut/grading.hpp"

#include <optional>
#include <vector>

namespace toricaut {

/// Direct sum of r >= 2 equivariant line bundles, each given by a
/// torus-invariant divisor; `classes` are their divisor classes.
struct BundleSpec {
    std::vector<TorusInvariantDivisor> divisors;
    std::vector<ClassVec> classes;

    std::size_t bundle_rank() const { return divisors.size(); }
};

BundleSpec make_bundle(const GradingData& base_grading,
                       std::vector<TorusInvariantDivisor> divisors);

/// Fan of the projectivized bundle together with the presentation of its
/// Picard group as (class group of the base) (+) Z. Ray and variable order:
/// base rays first (input order), then the fiber rays n_1, ..., n_r.
struct ProjectivizedFan {
    Fan fan;                     // on a lattice of rank d + r - 1
    std::size_t base_count = 0;  // l: rays/variables from the base
    std::size_t fiber_count = 0; // r: fiber rays/variables
    GradingData picard;          // degrees (beta_i, 0) and (-alpha_j, 1)

    std::vector<ClassVec> x_degrees() const;
    std::vector<ClassVec> y_degrees() const;
    /// The class of O(1): free part (0,...,0,1), torsion zero.
    ClassVec hyperplane_class() const;
    bool is_base_variable(std::size_t v) const { return v < base_count; }

    // populated by projectivize(), absent when loaded from a fan file
    struct BaseContext {
        Fan base_fan;
        GradingData base_grading;
        BundleSpec bundle;
    };
    std::optional<BaseContext> base;
};

/// Fan of P(L_1 (+) ... (+) L_r) over the complete simplicial base fan:
/// base rays are lifted by the support-function differences, the fiber rays
/// sum to zero, and each maximal cone of the base combines with every
/// facet-spanning subset of the fiber rays.
ProjectivizedFan projectivize(const Fan& f, const BundleSpec& e);

/// The Picard presentation alone (group, x-degrees, y-degrees).
GradingData picard_of_projectivization(const GradingData& base_grading, const BundleSpec& e);

} // namespace toricaut
