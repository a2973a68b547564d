#pragma once

#include "toricaut/int_matrix.hpp"

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace toricaut {

/// Rational simplicial fan: primitive ray vectors in Z^rank plus maximal
/// cones given as index sets into `rays`. Ray order is significant: it fixes
/// the Cox variable order x_1, ..., x_l permanently.
struct Fan {
    std::size_t rank = 0;
    std::vector<std::vector<Int>> rays;
    std::vector<std::vector<std::size_t>> max_cones;

    std::size_t ray_count() const { return rays.size(); }
    /// l x rank matrix with the rays as rows (the pairing matrix of m -> (m(e_i))_i).
    IntMatrix ray_matrix() const;
};

struct ValidationIssue {
    enum class Kind {
        bad_rank,
        ray_wrong_dimension,
        ray_zero,
        ray_not_primitive,
        ray_duplicate,
        ray_unused,
        cone_index_out_of_range,
        cone_duplicate_index,
        cone_not_simplicial,
        cone_pair_not_face
    };
    Kind kind;
    std::string message;
    std::vector<std::size_t> subjects; // offending ray or cone indices
};

struct ValidationReport {
    std::vector<ValidationIssue> issues;
    bool valid() const { return issues.empty(); }
    std::string summary() const;
};

/// Structural checks: rays primitive and distinct, cones simplicial and
/// in-range, every ray used, and pairwise cone intersections are common faces
/// (exact rational feasibility; no overlap beyond the shared-ray face).
ValidationReport validate_fan(const Fan& f);

/// Throws Error with the report summary when the fan is invalid.
void require_valid(const Fan& f);

struct SmoothnessResult {
    bool smooth = false;
    std::optional<std::size_t> witness_cone; // first cone whose rays do not extend to a Z-basis
};

/// A cone is smooth when its ray submatrix has all Smith invariant factors 1.
SmoothnessResult is_smooth(const Fan& f);

/// Facet-pairing completeness test for validated pure simplicial fans: every
/// maximal cone is full-dimensional and every facet lies in exactly two
/// maximal cones.
bool is_complete(const Fan& f);

} // namespace toricaut
