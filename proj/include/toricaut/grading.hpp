#pragma once

#include "toricaut/abelian_group.hpp"
#include "toricaut/fan.hpp"

#include <vector>

namespace toricaut {

/// The grading of a polynomial ring by a finitely generated abelian group:
/// one degree per variable, with the degree map Z^l -> group given by the
/// presentation's projection. For a fan this is the Cox grading by the
/// divisor class group.
struct GradingData {
    AbelianGroupPresentation class_group;
    std::vector<ClassVec> variable_degrees;

    std::size_t variable_count() const { return variable_degrees.size(); }
    const IntMatrix& degree_map() const { return class_group.projection; }

    /// Degree of a monomial given by its exponent vector.
    ClassVec degree_of_exponents(const std::vector<Int>& exponents) const;
};

/// Divisor class group of a complete simplicial fan together with the
/// variable degrees beta_i: the cokernel of the ray pairing map
/// m -> (m(e_1), ..., m(e_l)).
GradingData class_group(const Fan& f);

} // namespace toricaut
