#pragma once

#include "toricaut/numeric.hpp"

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

namespace toricaut {

/// Half-space coeffs . x >= rhs with integer data.
struct LinearInequality {
    std::vector<Int> coeffs;
    Int rhs;
};

/// System of inequalities (and optional equalities) over Q^dim.
/// All eliminations are exact; no floating point.
struct InequalitySystem {
    std::size_t dim = 0;
    std::vector<LinearInequality> inequalities;
    std::vector<LinearInequality> equalities; // coeffs . x == rhs

    void add_ge(std::vector<Int> coeffs, Int rhs);
    void add_eq(std::vector<Int> coeffs, Int rhs);
};

/// Exact rational feasibility of {x : equalities hold, inequalities hold}.
/// Equalities are removed by pivoting, the rest by Fourier-Motzkin.
bool feasible(const InequalitySystem& sys);

/// Inclusive integer bounds [lo, hi] per coordinate of the rational polyhedron
/// (tightened to integer points). Returns nullopt when the system is
/// infeasible. Throws Error when some coordinate is unbounded.
std::optional<std::vector<std::pair<Int, Int>>> integer_bounding_box(const InequalitySystem& sys);

/// All integer points satisfying the system, in lexicographic order.
/// `max_points` caps the bounding-box volume scanned (hard error above).
std::vector<std::vector<Int>> enumerate_integer_points(const InequalitySystem& sys,
                                                       unsigned long long max_points);

/// Enumeration cap from the TORICAUT_MAX_ENUM environment variable
/// (default 10^6).
unsigned long long enumeration_cap();

} // namespace toricaut
